#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "thue/diophantine.hpp"
#include "thue/errors.hpp"
#include "thue/exotic_table.hpp"
#include "thue/forms.hpp"
#include "thue/io.hpp"
#include "thue/laws.hpp"
#include "thue/roots.hpp"
#include "thue/search.hpp"
#include "thue/units.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDiff = 3;
constexpr int kExitInternal = 4;

using thue::output_format;

struct global_opts {
    long prec = 128;
    std::string out_path;
    std::string format_name = "pretty";
    int threads = 0;
    std::string checkpoint;
};

std::ostream& open_output(const global_opts& g, std::ofstream& file) {
    if (g.out_path.empty()) return std::cout;
    file.open(g.out_path);
    if (!file)
        throw thue::argument_error("cannot open output file: " + g.out_path);
    return file;
}

void reject_csv(output_format fmt, const char* what) {
    if (fmt == output_format::csv)
        throw thue::argument_error(std::string(what) +
                                   " has no csv rendering; use jsonl or "
                                   "pretty");
}

int emit_report(std::ostream& out, output_format fmt,
                const nlohmann::ordered_json& j, bool clean) {
    if (fmt == output_format::pretty)
        out << j.dump(2) << '\n';
    else
        out << j.dump() << '\n';
    return clean ? kExitOk : kExitDiff;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact arithmetic for the two-parameter family of cubic Thue forms "
        "F_{n,a}(X, Y) = X^3 - u_a X^2 Y + (-1)^a v_a X Y^2 - Y^3 attached "
        "to the simplest cubic fields: coefficients, root isolation, "
        "small-value witnesses, solution search, unit decompositions and "
        "grid-verified coefficient laws."};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "Key = value file mirroring the flags; flags win");

    global_opts g;
    app.add_option("--prec", g.prec, "Working precision in bits")
        ->default_val(128)
        ->check(CLI::Range(32L, 1L << 22));
    app.add_option("--out", g.out_path, "Output path (default: stdout)");
    app.add_option("--format", g.format_name, "jsonl, csv or pretty")
        ->default_val("pretty")
        ->check(CLI::IsMember({"jsonl", "csv", "pretty"}));
    app.add_option("--threads", g.threads,
                   "Worker threads (0 = hardware concurrency)")
        ->envname("THUE_FAMILY_THREADS")
        ->default_val(0);
    app.add_option("--checkpoint", g.checkpoint,
                   "Checkpoint file for search/table grid runs");

    long long n = 0, a = 0;
    std::string x_str = "0", y_str = "0";

    auto* c_coeffs = app.add_subcommand(
        "coeffs", "Coefficients u_a, v_a of F_{n,a}");
    bool use_oracle = false;
    c_coeffs->add_option("--n", n, "Family parameter")->required();
    c_coeffs->add_option("--a", a, "Twist exponent (>= 0)")->required();
    c_coeffs->add_flag("--oracle", use_oracle,
                       "Compute via companion-matrix traces instead of the "
                       "recurrence");

    auto* c_eval =
        app.add_subcommand("eval", "Evaluate F_{n,a}(x, y) exactly");
    bool allow_degenerate = false;
    c_eval->add_option("--n", n, "Family parameter")->required();
    c_eval->add_option("--a", a, "Twist exponent")->required();
    c_eval->add_option("--x", x_str, "x (decimal integer)")->required();
    c_eval->add_option("--y", y_str, "y (decimal integer)")->required();
    c_eval->add_flag("--allow-degenerate", allow_degenerate,
                     "Permit a = 0, where the form degenerates to (x-y)^3");

    auto* c_roots = app.add_subcommand(
        "roots", "Isolate the three real roots of f_n with certificates");
    int digits = 20;
    c_roots->add_option("--n", n, "Family parameter")->required();
    c_roots->add_option("--digits", digits, "Printed decimal digits")
        ->default_val(20);

    auto* c_witness = app.add_subcommand(
        "witness",
        "Certified small-value inputs: y |x - lambda2^a y| <= 1/2 and "
        "|F_{n,a}(x, y)| <= y (n+4)^a");
    int count = 5;
    c_witness->add_option("--n", n, "Family parameter (>= 0)")->required();
    c_witness->add_option("--a", a, "Twist exponent (>= 1)")->required();
    c_witness->add_option("--count", count, "Number of witnesses")
        ->default_val(5);

    auto* c_search = app.add_subcommand(
        "search", "Solve 0 < |F_{n,a}(x, y)| <= m over an (n, a) grid");
    thue::search_config sc;
    std::string m_str = "1", x_abs_str = "1000", strategy = "proximity";
    c_search->add_option("--n-min", sc.n_min)->default_val(0);
    c_search->add_option("--n-max", sc.n_max)->default_val(10);
    c_search->add_option("--a-min", sc.a_min)->default_val(2);
    c_search->add_option("--a-max", sc.a_max)->default_val(70);
    c_search->add_option("--n", n, "Shorthand for --n-min N --n-max N");
    c_search->add_option("--a", a, "Shorthand for --a-min A --a-max A");
    c_search->add_option("--m", m_str, "Bound on |F| (decimal integer)")
        ->default_val("1");
    c_search->add_option("--y-max", sc.y_max)->default_val(1000);
    c_search->add_option("--x-abs-max", x_abs_str,
                         "Bound on |x|; \"none\" lifts it (proximity only)")
        ->default_val("1000");
    c_search->add_option("--strategy", strategy, "proximity or naive")
        ->default_val("proximity")
        ->check(CLI::IsMember({"proximity", "naive"}));

    auto* c_table = app.add_subcommand(
        "table",
        "Reproduce the m = 1 solution table and diff its exotic rows "
        "against the expected list");
    thue::search_config tc = thue::default_table_config();
    std::string expected_path;
    c_table->add_option("--n-min", tc.n_min)->default_val(0);
    c_table->add_option("--n-max", tc.n_max)->default_val(10);
    c_table->add_option("--a-min", tc.a_min)->default_val(1);
    c_table->add_option("--a-max", tc.a_max)->default_val(70);
    c_table->add_option("--y-max", tc.y_max)->default_val(1000);
    c_table->add_option("--expected", expected_path,
                        "Diff against this table file instead of the "
                        "embedded one (see data/exotic_solutions.json)");

    auto* c_decompose = app.add_subcommand(
        "decompose",
        "Factor gamma_0 = x - lambda0^a y as delta lambda0^A lambda2^B and "
        "report the linear-form diagnostics");
    c_decompose->add_option("--n", n, "Family parameter (>= 0)")->required();
    c_decompose->add_option("--a", a, "Twist exponent (>= 1)")->required();
    c_decompose->add_option("--x", x_str)->required();
    c_decompose->add_option("--y", y_str)->required();

    auto* c_siegel = app.add_subcommand(
        "siegel",
        "Exact three-term identity check for the factors of F_{n,a}(x, y)");
    c_siegel->add_option("--n", n, "Family parameter (>= 0)")->required();
    c_siegel->add_option("--a", a, "Twist exponent (>= 1)")->required();
    c_siegel->add_option("--x", x_str)->required();
    c_siegel->add_option("--y", y_str)->required();

    auto* c_verify = app.add_subcommand(
        "verify", "Grid-verify the coefficient laws against expected "
                  "exception lists");
    std::string suite = "all";
    long long v_nmax = -1, v_amax = -1, v_xmax = 20;
    c_verify
        ->add_option("--suite", suite, "recurrence, pm-one, diagonal or all")
        ->default_val("all")
        ->check(CLI::IsMember({"recurrence", "pm-one", "diagonal", "all"}));
    c_verify->add_option("--n-max", v_nmax,
                         "Grid bound (default: per-suite)");
    c_verify->add_option("--a-max", v_amax,
                         "Grid bound (default: per-suite)");
    c_verify->add_option("--x-max", v_xmax, "Diagonal |x| bound")
        ->default_val(20);

    for (CLI::App* sub :
         {c_coeffs, c_eval, c_roots, c_witness, c_search, c_table,
          c_decompose, c_siegel, c_verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    std::ofstream out_file;
    try {
        std::ostream& out = open_output(g, out_file);
        output_format fmt = thue::parse_format(g.format_name);

        if (c_coeffs->parsed()) {
            reject_csv(fmt, "coeffs");
            thue::form_coeffs fc = use_oracle ? thue::coeffs_oracle(n, a)
                                              : thue::coeffs(n, a);
            if (fmt == output_format::pretty)
                out << "u_" << a << " = " << fc.u << "\nv_" << a << " = "
                    << fc.v << '\n';
            else
                out << thue::to_json(fc).dump() << '\n';
            return kExitOk;
        }

        if (c_eval->parsed()) {
            mpz_class x(x_str), y(y_str);
            mpz_class value = thue::eval_form(n, a, x, y, allow_degenerate);
            thue::solution s;
            s.n = n;
            s.a = a;
            s.x = x;
            s.y = y;
            s.value = value;
            s.cls = thue::classify(n, a, x, y, value);
            if (fmt == output_format::pretty)
                out << "F_{" << n << "," << a << "}(" << x << ", " << y
                    << ") = " << value << "  [" << class_name(s.cls) << "]\n";
            else
                thue::write_solutions(out, {s}, fmt);
            return kExitOk;
        }

        if (c_roots->parsed()) {
            reject_csv(fmt, "roots");
            thue::root_triple rt = thue::isolate_roots(n, g.prec);
            nlohmann::ordered_json j = thue::to_json(rt, digits);
            if (n >= 1) j["bounds"] = thue::to_json(thue::check_root_bounds(n));
            if (fmt == output_format::pretty)
                out << j.dump(2) << '\n';
            else
                out << j.dump() << '\n';
            return kExitOk;
        }

        if (c_witness->parsed()) {
            auto ws = thue::small_value_witnesses(n, a, count);
            thue::write_witnesses(out, ws, fmt);
            return kExitOk;
        }

        if (c_search->parsed()) {
            if (c_search->count("--n")) sc.n_min = sc.n_max = n;
            if (c_search->count("--a")) sc.a_min = sc.a_max = a;
            sc.m = mpz_class(m_str);
            if (x_abs_str == "none")
                sc.x_abs_max.reset();
            else
                sc.x_abs_max = mpz_class(x_abs_str);
            sc.strategy = strategy == "naive" ? thue::search_strategy::naive
                                              : thue::search_strategy::proximity;
            sc.threads = g.threads;
            if (!g.checkpoint.empty()) sc.checkpoint_path = g.checkpoint;
            thue::write_solutions(out, thue::run_search(sc), fmt);
            return kExitOk;
        }

        if (c_table->parsed()) {
            reject_csv(fmt, "table");
            tc.threads = g.threads;
            if (!g.checkpoint.empty()) tc.checkpoint_path = g.checkpoint;
            thue::table_report tr;
            if (expected_path.empty()) {
                tr = thue::reproduce_table(tc);
            } else {
                std::ifstream f(expected_path);
                if (!f)
                    throw thue::argument_error("cannot open table file: " +
                                               expected_path);
                tr = thue::reproduce_table(tc, thue::load_exotic_rows(f));
            }
            return emit_report(out, fmt, thue::to_json(tr), tr.clean());
        }

        if (c_decompose->parsed()) {
            reject_csv(fmt, "decompose");
            mpz_class x(x_str), y(y_str);
            thue::gamma_triple gt = thue::make_gamma_triple(n, a, x, y);
            nlohmann::ordered_json j;
            j["gamma"] = thue::to_json(gt);
            try {
                thue::unit_decomposition d = thue::decompose(gt);
                j["decomposition"] = thue::to_json(d);
                if (y >= 1)
                    j["linear_form"] =
                        thue::to_json(thue::lambda_diagnostics(gt, d), digits);
            } catch (const thue::decomposition_error& e) {
                j["decomposition_error"] =
                    nlohmann::ordered_json{{"message", e.what()},
                                           {"best_A", e.best_A},
                                           {"best_B", e.best_B}};
                return emit_report(out, fmt, j, false);
            }
            return emit_report(out, fmt, j, true);
        }

        if (c_siegel->parsed()) {
            reject_csv(fmt, "siegel");
            mpz_class x(x_str), y(y_str);
            thue::gamma_triple gt = thue::make_gamma_triple(n, a, x, y);
            bool zero = thue::siegel_check(gt);
            nlohmann::ordered_json j{{"n", n},
                                     {"a", a},
                                     {"x", x.get_str()},
                                     {"y", y.get_str()},
                                     {"i0", gt.i0},
                                     {"identity_is_zero", zero}};
            return emit_report(out, fmt, j, zero);
        }

        if (c_verify->parsed()) {
            reject_csv(fmt, "verify");
            nlohmann::ordered_json j;
            bool clean = true;
            if (suite == "recurrence" || suite == "all") {
                auto r = thue::verify_recurrence_inequalities(
                    v_nmax > 0 ? v_nmax : 100, v_amax > 0 ? v_amax : 100);
                clean = clean && r.clean();
                j["recurrence"] = thue::to_json(r);
            }
            if (suite == "pm-one" || suite == "all") {
                auto r = thue::verify_pm_one_inputs(
                    v_nmax > 0 ? v_nmax : 300, v_amax > 0 ? v_amax : 300);
                clean = clean && r.clean();
                j["pm_one"] = thue::to_json(r);
            }
            if (suite == "diagonal" || suite == "all") {
                auto r = thue::verify_diagonal_bounds(
                    v_nmax > 0 ? v_nmax : 50, v_amax > 0 ? v_amax : 30,
                    v_xmax);
                clean = clean && r.empty();
                j["diagonal"] = thue::to_json(r);
            }
            return emit_report(out, fmt, j, clean);
        }

        throw thue::internal_error("no subcommand dispatched");
    } catch (const thue::internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const thue::argument_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const thue::degenerate_form_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const thue::zero_value_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const thue::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid integer argument (" << e.what() << ")\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return kExitInternal;
    }
}
