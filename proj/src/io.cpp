#include "thue/io.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "thue/errors.hpp"

namespace thue {

using nlohmann::ordered_json;

output_format parse_format(const std::string& name) {
    if (name == "jsonl") return output_format::jsonl;
    if (name == "csv") return output_format::csv;
    if (name == "pretty") return output_format::pretty;
    throw argument_error("unknown output format: " + name);
}

ordered_json to_json(const solution& s) {
    return ordered_json{{"n", s.n},
                        {"a", s.a},
                        {"x", s.x.get_str()},
                        {"y", s.y.get_str()},
                        {"value", s.value.get_str()},
                        {"class", class_name(s.cls)}};
}

ordered_json to_json(const form_coeffs& fc) {
    return ordered_json{{"n", fc.n},
                        {"a", fc.a},
                        {"u", fc.u.get_str()},
                        {"v", fc.v.get_str()}};
}

static ordered_json bracket_json(const root_bracket& b) {
    return ordered_json{{"lo", b.lo.get_str()},
                        {"hi", b.hi.get_str()},
                        {"sign_lo", b.sign_lo}};
}

ordered_json to_json(const root_triple& rt, int digits) {
    ordered_json roots = ordered_json::array();
    for (int i = 0; i < 3; ++i) {
        ordered_json r = bracket_json(rt.lam.at(i));
        r["enclosure"] =
            rt.lam_interval(i, rt.precision_bits).str(digits);
        roots.push_back(std::move(r));
    }
    return ordered_json{
        {"n", rt.n}, {"precision_bits", rt.precision_bits}, {"roots", roots}};
}

ordered_json to_json(const bound_report& br) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : br.checks)
        checks.push_back(ordered_json{{"name", c.name}, {"holds", c.holds}});
    return ordered_json{{"n", br.n},
                        {"asserted", br.asserted},
                        {"all_hold", br.all_hold()},
                        {"checks", checks}};
}

ordered_json to_json(const witness& w) {
    return ordered_json{{"n", w.n},
                        {"a", w.a},
                        {"x", w.x.get_str()},
                        {"y", w.y.get_str()},
                        {"value", w.value.get_str()},
                        {"bound", w.bound.get_str()},
                        {"y_condition_met", w.y_condition_met},
                        {"refined", verdict_name(w.refined)}};
}

static ordered_json pair_list(
    const std::vector<std::pair<mpz_class, mpz_class>>& ps) {
    ordered_json a = ordered_json::array();
    for (const auto& [x, y] : ps)
        a.push_back(ordered_json::array({x.get_str(), y.get_str()}));
    return a;
}

ordered_json to_json(const table_report& tr) {
    ordered_json diffs = ordered_json::array();
    for (const auto& d : tr.diffs)
        diffs.push_back(ordered_json{{"n", d.n},
                                     {"a", d.a},
                                     {"missing", pair_list(d.missing)},
                                     {"extra", pair_list(d.extra)}});
    return ordered_json{{"clean", tr.clean()},
                        {"solutions_total", tr.solutions_total},
                        {"exotic_total", tr.exotic_total},
                        {"n_min", tr.config.n_min},
                        {"n_max", tr.config.n_max},
                        {"a_min", tr.config.a_min},
                        {"a_max", tr.config.a_max},
                        {"y_max", tr.config.y_max},
                        {"diffs", diffs}};
}

ordered_json to_json(const order_element& e) {
    return ordered_json{{"c0", e.coeff(0).get_str()},
                        {"c1", e.coeff(1).get_str()},
                        {"c2", e.coeff(2).get_str()},
                        {"display", e.str()}};
}

ordered_json to_json(const gamma_triple& g) {
    ordered_json gs = ordered_json::array();
    for (int i = 0; i < 3; ++i) gs.push_back(to_json(g.gamma.at(i)));
    return ordered_json{{"n", g.n},
                        {"a", g.a},
                        {"x", g.x.get_str()},
                        {"y", g.y.get_str()},
                        {"m", g.m.get_str()},
                        {"i0", g.i0},
                        {"gamma", gs}};
}

ordered_json to_json(const unit_decomposition& d) {
    ordered_json j{{"A", d.A},
                   {"B", d.B},
                   {"delta", to_json(d.delta)},
                   {"delta_is_pm_one", d.delta_is_pm_one},
                   {"conjugate_bounds_checked", d.conjugate_bounds_checked}};
    if (d.conjugate_bounds_checked) {
        ordered_json v = ordered_json::array();
        for (auto b : d.conjugate_bounds) v.push_back(verdict_name(b));
        j["conjugate_bounds"] = v;
    }
    j["height_bound"] = verdict_name(d.height_bound);
    return j;
}

ordered_json to_json(const lambda_report& lr, int digits) {
    return ordered_json{
        {"A_prime", lr.A_prime},
        {"B_prime", lr.B_prime},
        {"mu", lr.mu.str(digits)},
        {"Lambda", lr.Lambda.str(digits)},
        {"ratio_minus_one", lr.ratio_minus_one.str(digits)},
        {"rhs", lr.rhs.str(digits)},
        {"c0", lr.c0.str(digits)},
        {"c1", lr.c1.str(digits)},
        {"R", lr.R.str(digits)},
        {"h_mu_upper", lr.h_mu_upper.str(digits)},
        {"h_mu_paper_bound", lr.h_mu_paper_bound.str(digits)},
        {"ratio_inequality", verdict_name(lr.ratio_inequality)},
        {"h_mu_within_bound", verdict_name(lr.h_mu_within_bound)},
        {"siegel_rearrangement_consistent",
         lr.siegel_rearrangement_consistent},
        {"lambda_matches_log_ratio", lr.lambda_matches_log_ratio},
        {"mu_consistent", lr.mu_consistent}};
}

static ordered_json violation_json(const law_violation& v) {
    return ordered_json{
        {"law", v.law}, {"n", v.n}, {"a", v.a}, {"detail", v.detail}};
}

ordered_json to_json(const law_report& lr) {
    ordered_json viol = ordered_json::array();
    for (const auto& v : lr.violations) viol.push_back(violation_json(v));
    ordered_json unex = ordered_json::array();
    for (const auto& v : lr.unexpected) unex.push_back(violation_json(v));
    ordered_json miss = ordered_json::array();
    for (const auto& v : lr.missing) miss.push_back(violation_json(v));
    return ordered_json{{"clean", lr.clean()},
                        {"n_max", lr.n_max},
                        {"a_max", lr.a_max},
                        {"violations", viol},
                        {"unexpected", unex},
                        {"missing", miss}};
}

static ordered_json pm_case_json(const pm_one_case& c) {
    return ordered_json{
        {"n", c.n}, {"a", c.a}, {"c1", c.c1}, {"c2", c.c2}, {"c", c.c}};
}

ordered_json to_json(const pm_one_report& pr) {
    ordered_json found = ordered_json::array();
    for (const auto& c : pr.found) found.push_back(pm_case_json(c));
    ordered_json unex = ordered_json::array();
    for (const auto& c : pr.unexpected) unex.push_back(pm_case_json(c));
    ordered_json miss = ordered_json::array();
    for (const auto& c : pr.missing) miss.push_back(pm_case_json(c));
    return ordered_json{{"clean", pr.clean()},
                        {"n_max", pr.n_max},
                        {"a_max", pr.a_max},
                        {"found", found},
                        {"unexpected", unex},
                        {"missing", miss}};
}

ordered_json to_json(const std::vector<diagonal_violation>& dv) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : dv)
        arr.push_back(ordered_json{{"claim", v.claim},
                                   {"n", v.n},
                                   {"a", v.a},
                                   {"x", v.x.get_str()},
                                   {"c", v.c}});
    return ordered_json{{"clean", dv.empty()}, {"violations", arr}};
}

void write_solutions(std::ostream& out, const std::vector<solution>& sols,
                     output_format fmt) {
    switch (fmt) {
        case output_format::jsonl:
            for (const auto& s : sols) out << to_json(s).dump() << '\n';
            return;
        case output_format::csv:
            out << "n,a,x,y,value,class\n";
            for (const auto& s : sols)
                out << s.n << ',' << s.a << ',' << s.x << ',' << s.y << ','
                    << s.value << ',' << class_name(s.cls) << '\n';
            return;
        case output_format::pretty: {
            out << std::left << std::setw(5) << "n" << std::setw(5) << "a"
                << std::setw(10) << "x" << std::setw(10) << "y"
                << std::setw(10) << "value" << "class" << '\n';
            for (const auto& s : sols)
                out << std::left << std::setw(5) << s.n << std::setw(5)
                    << s.a << std::setw(10) << s.x.get_str() << std::setw(10)
                    << s.y.get_str() << std::setw(10) << s.value.get_str()
                    << class_name(s.cls) << '\n';
            return;
        }
    }
    throw internal_error("write_solutions: bad format enum value");
}

void write_witnesses(std::ostream& out, const std::vector<witness>& ws,
                     output_format fmt) {
    switch (fmt) {
        case output_format::jsonl:
            for (const auto& w : ws) out << to_json(w).dump() << '\n';
            return;
        case output_format::csv:
            out << "n,a,x,y,value,bound,y_condition_met,refined\n";
            for (const auto& w : ws)
                out << w.n << ',' << w.a << ',' << w.x << ',' << w.y << ','
                    << w.value << ',' << w.bound << ','
                    << (w.y_condition_met ? "true" : "false") << ','
                    << verdict_name(w.refined) << '\n';
            return;
        case output_format::pretty:
            for (const auto& w : ws)
                out << "n=" << w.n << " a=" << w.a << "  (x, y) = (" << w.x
                    << ", " << w.y << ")  |F| = " << abs(w.value)
                    << "  bound " << w.bound << "  y-condition "
                    << (w.y_condition_met ? "met" : "not met")
                    << "  refined bound " << verdict_name(w.refined) << '\n';
            return;
    }
    throw internal_error("write_witnesses: bad format enum value");
}

}  // namespace thue
