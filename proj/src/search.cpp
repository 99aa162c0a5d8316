#include "thue/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <system_error>
#include <thread>

#include <nlohmann/json.hpp>

#include "thue/errors.hpp"
#include "thue/exotic_table.hpp"
#include "thue/forms.hpp"
#include "thue/mp_util.hpp"
#include "thue/roots.hpp"

namespace thue {

const char* class_name(solution_class c) {
    switch (c) {
        case solution_class::trivial: return "trivial";
        case solution_class::unit_pm: return "unit_pm";
        case solution_class::diagonal: return "diagonal";
        case solution_class::exotic: return "exotic";
    }
    throw internal_error("class_name: bad enum value");
}

solution_class classify(long long, long long, const mpz_class& x,
                        const mpz_class& y, const mpz_class& value) {
    if (x == 0 || y == 0) return solution_class::trivial;
    if (abs(x) == 1 && abs(y) == 1 && abs(value) == 1)
        return solution_class::unit_pm;
    if (y == x || y == -x) return solution_class::diagonal;
    return solution_class::exotic;
}

static solution make_solution(long long n, long long a, const mpz_class& x,
                              const mpz_class& y, const mpz_class& value) {
    solution s;
    s.n = n;
    s.a = a;
    s.x = x;
    s.y = y;
    s.value = value;
    s.cls = classify(n, a, x, y, value);
    return s;
}

std::vector<solution> search_naive(long long n, long long a,
                                   const mpz_class& m, const mpz_class& x_min,
                                   const mpz_class& x_max,
                                   const mpz_class& y_min,
                                   const mpz_class& y_max) {
    if (a == 0) throw argument_error("search_naive: a must be nonzero");
    if (m < 1) throw argument_error("search_naive: m must be >= 1");
    std::vector<solution> out;
    // Negative a flips through F_{n,-a}(x, y) = -F_{n,a}(y, x); fetch the
    // coefficients once either way.
    form_coeffs fc = coeffs(n, a < 0 ? -a : a);
    for (mpz_class x = x_min; x <= x_max; ++x) {
        for (mpz_class y = y_min; y <= y_max; ++y) {
            mpz_class v = a > 0 ? eval_with(fc, x, y) : -eval_with(fc, y, x);
            if (v == 0) continue;
            if (abs(v) <= m) out.push_back(make_solution(n, a, x, y, v));
        }
    }
    return out;
}

/* Enclosures of lambda_i^a, each of width < target. Root brackets are
 * re-isolated at doubled precision until the powered widths pass; the
 * power amplifies width by roughly a * lambda^(a-1), so the first guess
 * accounts for a * log2(|n| + 4) bits. */
static std::array<interval, 3> powered_roots(long long n, long long a,
                                             const mpq_class& target) {
    if (a < 1) throw argument_error("powered_roots: a must be >= 1");
    long long absn = n < 0 ? -n : n;
    long bits_lam = 1;
    while ((1LL << bits_lam) < absn + 4) ++bits_lam;
    mpq_class t = target;
    long bits_target = 0;
    while (t < 1) {
        t *= 2;
        ++bits_target;
    }
    long prec = 128 + 2 * (a * bits_lam + bits_target);
    const long prec_cap = 1L << 22;
    for (; prec <= prec_cap; prec *= 2) {
        root_triple rt = isolate_roots(n, prec);
        std::array<interval, 3> pw = {
            pow(rt.lam_interval(0, prec), a),
            pow(rt.lam_interval(1, prec), a),
            pow(rt.lam_interval(2, prec), a)};
        bool ok = true;
        for (const auto& iv : pw)
            if (!iv.width_less_than(target)) ok = false;
        if (ok) return pw;
    }
    throw precision_exhausted_error(
        "powered_roots: enclosure width target unreachable at precision cap");
}

std::vector<solution> search_proximity(
    long long n, long long a, const mpz_class& m, long long y_max,
    const std::optional<mpz_class>& x_abs_max) {
    if (a < 1)
        throw argument_error("search_proximity: a must be >= 1");
    if (m < 1) throw argument_error("search_proximity: m must be >= 1");
    if (y_max < 0)
        throw argument_error("search_proximity: y_max must be >= 0");

    std::vector<solution> out;
    form_coeffs fc = coeffs(n, a);

    // cbrt_floor^3 <= m < (cbrt_floor + 1)^3
    mpz_class cbrt_floor;
    mpz_root(cbrt_floor.get_mpz_t(), m.get_mpz_t(), 3);
    bool exact_cube = cbrt_floor * cbrt_floor * cbrt_floor == m;
    mpz_class window = cbrt_floor + (exact_cube ? 0 : 1) + 1;

    auto admissible = [&](const mpz_class& x) {
        return !x_abs_max || abs(x) <= *x_abs_max;
    };

    // y = 0: the equation is x^3 = value, so 1 <= |x| <= cbrt_floor.
    for (mpz_class x = -cbrt_floor; x <= cbrt_floor; ++x) {
        if (x == 0 || !admissible(x)) continue;
        out.push_back(make_solution(n, a, x, 0, x * x * x));
    }
    if (y_max == 0) return out;

    /* Any solution has min_i |x - lambda_i^a y| <= m^(1/3), so x lies within
     * window of an enclosure of lambda_i^a y; keeping those enclosures
     * narrower than 1/4 caps the candidate list at a few per root. */
    mpq_class target = qq(1, 4) / mpq_class(zz(y_max));
    std::array<interval, 3> pw = powered_roots(n, a, target);

    std::vector<mpz_class> cand;
    for (long long y = 1; y <= y_max; ++y) {
        cand.clear();
        interval yi = interval::exact(zz(y), 64);
        for (int i = 0; i < 3; ++i) {
            interval c = pw[i] * yi;
            mpz_class lo = c.floor_lo() - window;
            mpz_class hi = c.ceil_hi() + window;
            for (mpz_class x = lo; x <= hi; ++x) cand.push_back(x);
        }
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        mpz_class yz = zz(y);
        for (const mpz_class& x : cand) {
            if (!admissible(x)) continue;
            mpz_class v = eval_with(fc, x, yz);
            if (v == 0) continue;
            if (abs(v) <= m) out.push_back(make_solution(n, a, x, yz, v));
        }
    }
    return out;
}

/* --- checkpointing ------------------------------------------------------- */

namespace {

using nlohmann::json;

json solution_to_json(const solution& s) {
    json j;
    j["x"] = s.x.get_str();
    j["y"] = s.y.get_str();
    j["value"] = s.value.get_str();
    j["class"] = class_name(s.cls);
    return j;
}

json cell_record(long long n, long long a, const mpz_class& m,
                 const std::vector<solution>& sols) {
    json j;
    j["n"] = n;
    j["a"] = a;
    j["m"] = m.get_str();
    json arr = json::array();
    for (const auto& s : sols) arr.push_back(solution_to_json(s));
    j["solutions"] = std::move(arr);
    return j;
}

struct checkpoint_state {
    std::map<std::pair<long long, long long>, std::vector<solution>> done;
};

/* Parse what is already in the checkpoint file. Records whose m does not
 * match the current run are ignored; a corrupt trailing line (interrupted
 * write) is dropped by truncating the file to the last good prefix. */
checkpoint_state load_checkpoint(const std::string& path, const mpz_class& m) {
    checkpoint_state st;
    std::ifstream in(path);
    if (!in) return st;
    std::string line;
    std::streampos good_end = 0;
    bool truncate_needed = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        bool usable = !j.is_discarded() && j.is_object();
        if (usable && j.contains("summary")) {
            good_end = in.tellg();
            continue;
        }
        usable = usable && j.contains("n") && j.contains("a") &&
                 j.contains("m") && j.contains("solutions") &&
                 j["solutions"].is_array();
        if (!usable) {
            truncate_needed = true;
            break;
        }
        long long n = j["n"].get<long long>();
        long long a = j["a"].get<long long>();
        std::vector<solution> sols;
        bool fields_ok = true;
        for (const auto& sj : j["solutions"]) {
            if (!sj.is_object() || !sj.contains("x") || !sj.contains("y") ||
                !sj.contains("value")) {
                fields_ok = false;
                break;
            }
            solution s;
            s.n = n;
            s.a = a;
            s.x = mpz_class(sj["x"].get<std::string>());
            s.y = mpz_class(sj["y"].get<std::string>());
            s.value = mpz_class(sj["value"].get<std::string>());
            s.cls = classify(n, a, s.x, s.y, s.value);
            sols.push_back(std::move(s));
        }
        if (!fields_ok) {
            truncate_needed = true;
            break;
        }
        if (mpz_class(j["m"].get<std::string>()) == m)
            st.done[{n, a}] = std::move(sols);
        good_end = in.tellg();
    }
    in.close();
    if (truncate_needed) {
        std::error_code ec;
        std::filesystem::resize_file(path, static_cast<std::uintmax_t>(
                                               std::streamoff(good_end)),
                                     ec);
        // Failure to truncate only means the bad tail is re-read next run.
    }
    return st;
}

bool solution_order(const solution& a, const solution& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.a != b.a) return a.a < b.a;
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
}

}  // namespace

std::vector<solution> run_search(const search_config& cfg) {
    if (cfg.n_min > cfg.n_max || cfg.a_min > cfg.a_max)
        throw argument_error("run_search: empty (n, a) range");
    if (cfg.a_min <= 0)
        throw argument_error("run_search: a_min must be >= 1");
    if (cfg.m < 1) throw argument_error("run_search: m must be >= 1");
    if (cfg.strategy == search_strategy::naive && !cfg.x_abs_max)
        throw argument_error("run_search: naive strategy needs x_abs_max");

    std::vector<std::pair<long long, long long>> cells;
    for (long long n = cfg.n_min; n <= cfg.n_max; ++n)
        for (long long a = cfg.a_min; a <= cfg.a_max; ++a)
            cells.emplace_back(n, a);

    checkpoint_state st;
    std::ofstream ck_out;
    if (cfg.checkpoint_path) {
        st = load_checkpoint(*cfg.checkpoint_path, cfg.m);
        ck_out.open(*cfg.checkpoint_path, std::ios::app);
        if (!ck_out)
            throw argument_error("run_search: cannot open checkpoint file " +
                                 *cfg.checkpoint_path);
    }

    std::map<std::pair<long long, long long>, std::vector<solution>> results;
    std::vector<std::pair<long long, long long>> pending;
    for (const auto& cell : cells) {
        auto it = st.done.find(cell);
        if (it != st.done.end())
            results[cell] = it->second;
        else
            pending.push_back(cell);
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex mu;
    std::exception_ptr first_error;

    auto worker = [&]() {
        for (;;) {
            if (stop.load()) return;
            std::size_t i = next.fetch_add(1);
            if (i >= pending.size()) return;
            auto [n, a] = pending[i];
            try {
                std::vector<solution> sols =
                    cfg.strategy == search_strategy::proximity
                        ? search_proximity(n, a, cfg.m, cfg.y_max,
                                           cfg.x_abs_max)
                        : search_naive(n, a, cfg.m, -*cfg.x_abs_max,
                                       *cfg.x_abs_max, 0, zz(cfg.y_max));
                std::lock_guard<std::mutex> lk(mu);
                if (ck_out.is_open()) {
                    ck_out << cell_record(n, a, cfg.m, sols).dump() << '\n';
                    ck_out.flush();
                }
                results[{n, a}] = std::move(sols);
            } catch (...) {
                std::lock_guard<std::mutex> lk(mu);
                if (!first_error) first_error = std::current_exception();
                stop.store(true);
                return;
            }
        }
    };

    unsigned nthreads = cfg.threads > 0
                            ? static_cast<unsigned>(cfg.threads)
                            : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<std::size_t>(nthreads, std::max<std::size_t>(
                                                   pending.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);

    std::vector<solution> out;
    for (const auto& cell : cells) {
        auto& sols = results[cell];
        std::sort(sols.begin(), sols.end(), solution_order);
        out.insert(out.end(), sols.begin(), sols.end());
    }

    if (ck_out.is_open()) {
        json j;
        j["summary"] = true;
        j["cells"] = cells.size();
        j["solutions"] = out.size();
        ck_out << j.dump() << '\n';
        ck_out.flush();
    }
    return out;
}

std::pair<mpz_class, mpz_class> canonical_rep(const solution& s) {
    if (abs(s.value) != 1)
        throw argument_error(
            "canonical_rep: defined for |value| = 1 solutions only");
    // F(value*x, value*y) = value^3 * F(x, y) = value^4 = +1.
    return {s.value * s.x, s.value * s.y};
}

search_config default_table_config() {
    search_config cfg;
    cfg.a_min = 1;
    return cfg;
}

table_report reproduce_table(const search_config& cfg) {
    return reproduce_table(cfg, expected_exotic_rows());
}

table_report reproduce_table(const search_config& cfg,
                             const std::vector<exotic_row>& rows) {
    if (cfg.m != 1)
        throw argument_error("reproduce_table: the table is the m = 1 case");
    table_report rep;
    rep.config = cfg;

    rep.solutions = run_search(cfg);
    const std::vector<solution>& sols = rep.solutions;
    rep.solutions_total = sols.size();

    std::map<std::pair<long long, long long>,
             std::set<std::pair<mpz_class, mpz_class>>>
        found;
    for (const auto& s : sols) {
        if (s.cls != solution_class::exotic) continue;
        ++rep.exotic_total;
        found[{s.n, s.a}].insert(canonical_rep(s));
    }

    std::map<std::pair<long long, long long>,
             std::set<std::pair<mpz_class, mpz_class>>>
        expected;
    for (const auto& row : rows) {
        if (row.n < cfg.n_min || row.n > cfg.n_max) continue;
        if (row.a < cfg.a_min || row.a > cfg.a_max) continue;
        for (const auto& [x, y] : row.entries) {
            mpz_class xz = zz(x), yz = zz(y);
            if (abs(yz) > zz(cfg.y_max)) continue;
            if (cfg.x_abs_max && abs(xz) > *cfg.x_abs_max) continue;
            expected[{row.n, row.a}].insert({xz, yz});
        }
    }

    std::set<std::pair<long long, long long>> cells;
    for (const auto& [cell, _] : found) cells.insert(cell);
    for (const auto& [cell, _] : expected) cells.insert(cell);
    for (const auto& cell : cells) {
        table_cell_diff d;
        d.n = cell.first;
        d.a = cell.second;
        const auto& f = found[cell];
        const auto& e = expected[cell];
        for (const auto& p : e)
            if (!f.count(p)) d.missing.push_back(p);
        for (const auto& p : f)
            if (!e.count(p)) d.extra.push_back(p);
        if (!d.missing.empty() || !d.extra.empty())
            rep.diffs.push_back(std::move(d));
    }
    return rep;
}

}  // namespace thue
