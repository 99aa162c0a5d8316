#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thue/exotic_table.hpp"

namespace thue {

/* Solutions of 0 < |F_{n,a}(x, y)| <= m.
 *   trivial:  (c, 0) or (0, -c) with value c in {+1, -1}
 *   unit_pm:  the (+-1, +-1) families: F_{n,1}(-c, c) = c for every n,
 *             F_{0,1}(-c, -c) = c, F_{0,2}(c, c) = c
 *   diagonal: y = +-x, not one of the above
 *   exotic:   everything else */
enum class solution_class { trivial, unit_pm, diagonal, exotic };

const char* class_name(solution_class c);

struct solution {
    long long n = 0;
    long long a = 0;
    mpz_class x;
    mpz_class y;
    mpz_class value;
    solution_class cls = solution_class::exotic;

    bool operator==(const solution& o) const {
        return n == o.n && a == o.a && x == o.x && y == o.y;
    }
};

solution_class classify(long long n, long long a, const mpz_class& x,
                        const mpz_class& y, const mpz_class& value);

/* Exhaustive scan of the box [x_min, x_max] x [y_min, y_max], results in
 * lexicographic (x, y) order. Any integer n; a != 0. */
std::vector<solution> search_naive(long long n, long long a,
                                   const mpz_class& m, const mpz_class& x_min,
                                   const mpz_class& x_max,
                                   const mpz_class& y_min,
                                   const mpz_class& y_max);

/* Complete solution set with 0 <= y <= y_max and unrestricted x (optionally
 * filtered to |x| <= x_abs_max), in (y, x) order. For each y >= 1 only the
 * integers within ceil(m^(1/3)) + 1 of some lambda_i^a y can solve
 * |F| <= m (the three factors of F multiply to at most m, so the smallest
 * is at most m^(1/3)); windows come from outward-rounded enclosures of
 * width < 1/4. y = 0 is the exact equation x^3 = value. */
std::vector<solution> search_proximity(
    long long n, long long a, const mpz_class& m, long long y_max,
    const std::optional<mpz_class>& x_abs_max = std::nullopt);

enum class search_strategy { proximity, naive };

struct search_config {
    long long n_min = 0;
    long long n_max = 10;
    long long a_min = 2;
    long long a_max = 70;
    mpz_class m = 1;
    long long y_max = 1000;
    /* naive requires a box; proximity treats it as a filter. */
    std::optional<mpz_class> x_abs_max = mpz_class(1000);
    search_strategy strategy = search_strategy::proximity;
    std::optional<std::string> checkpoint_path;
    int threads = 0;  // 0 = hardware concurrency
};

/* Grid run over all (n, a) cells of the config, parallel across cells,
 * deterministic output ordered by (n, a, y, x). With a checkpoint path,
 * completed cells are appended as JSON lines and skipped on resume; a
 * corrupt trailing line (interrupted write) is truncated. */
std::vector<solution> run_search(const search_config& cfg);

/* Sign-canonical exotic representative: (value*x, value*y) satisfies
 * F = +1 (degree-3 homogeneity), collapsing each +- orbit to one row. */
std::pair<mpz_class, mpz_class> canonical_rep(const solution& s);

struct table_cell_diff {
    long long n = 0;
    long long a = 0;
    std::vector<std::pair<mpz_class, mpz_class>> missing;
    std::vector<std::pair<mpz_class, mpz_class>> extra;
};

struct table_report {
    search_config config;
    /* Exotic canonical reps found, grouped per (n, a) cell that has any. */
    std::vector<table_cell_diff> diffs;  // only cells with a nonempty diff
    std::vector<solution> solutions;     // everything the search returned
    std::size_t solutions_total = 0;
    std::size_t exotic_total = 0;

    bool clean() const { return diffs.empty(); }
};

search_config default_table_config();

/* Run the m = 1 search over the config range and diff the canonicalized
 * exotic solutions against the expected table (restricted to the config's
 * (n, a) range). A nonempty diff is a failing report, not an exception.
 * The second form diffs against a caller-supplied table instead of the
 * embedded one. */
table_report reproduce_table(const search_config& cfg = default_table_config());
table_report reproduce_table(const search_config& cfg,
                             const std::vector<exotic_row>& rows);

}  // namespace thue
