#pragma once

#include <gmpxx.h>

#include <array>
#include <utility>

#include "thue/cubic_order.hpp"
#include "thue/interval.hpp"
#include "thue/verdict.hpp"

namespace thue {

/* The three conjugate factors gamma_i = x - lambda_i^a y of a form value
 * F_{n,a}(x, y) = gamma_0 gamma_1 gamma_2. Stored as order elements;
 * gamma[i] is sigma^i(gamma[0]), whose standard embedding is the real
 * number x - lambda_i^a y. i0 is an index of smallest |gamma_i|, certified
 * by intervals with exact element comparison breaking ties (smallest index
 * wins); |gamma_{i0}|^3 <= m always, m being |F_{n,a}(x, y)|. */
struct gamma_triple {
    long long n = 0;
    long long a = 0;
    mpz_class x;
    mpz_class y;
    mpz_class m;
    std::array<order_element, 3> gamma;
    int i0 = 0;
};

/* Requires n >= 0, a >= 1 and F_{n,a}(x, y) != 0 (zero_value_error
 * otherwise, only reachable at (x, y) = (0, 0)). */
gamma_triple make_gamma_triple(long long n, long long a, const mpz_class& x,
                               const mpz_class& y);

/* Real solution of the 2x2 log-embedding system
 *   c0 = A log(lambda0)  + B log|lambda2|
 *   c1 = A log|lambda1|  + B log(lambda0)
 * whose determinant R = log(lambda0)^2 - log|lambda1| log|lambda2| exceeds
 * log(lambda0)^2, the two right log factors having opposite signs. When an
 * order element gamma decomposes as delta lambda0^A lambda2^B with all
 * |delta_i| moderate, feeding c_i = log|gamma_i| - (1/3)log|norm(gamma)|
 * recovers A and B up to a small error. */
struct regulator_solution {
    interval A_real;
    interval B_real;
    interval R;
};

regulator_solution regulator_system(long long n, const interval& c0,
                                    const interval& c1);

/* gamma_0 = delta lambda0^A lambda2^B exactly; norm(delta) = +-m. */
struct unit_decomposition {
    long long A = 0;
    long long B = 0;
    order_element delta;
    bool delta_is_pm_one = false;
    /* Certified verdicts on |delta_0| in [m^(1/3)/(n+3), (n+3) m^(1/3)] and
     * |delta_1|, |delta_2| in [m^(1/3)/sqrt(n+3), sqrt(n+3) m^(1/3)],
     * evaluated only for n >= 3 (checked == true). A failing or undecided
     * verdict is reported, never thrown. */
    bool conjugate_bounds_checked = false;
    std::array<refined_verdict, 3> conjugate_bounds{
        refined_verdict::undecided, refined_verdict::undecided,
        refined_verdict::undecided};
    /* (1/3) sum_i max(0, log|delta_i|) <= (2/3)log(n+3) + (1/3)log(m). */
    refined_verdict height_bound = refined_verdict::undecided;
};

/* Find (A, B, delta): round the regulator_system solution, then search the
 * 5x5 neighborhood of the rounded point. For m = 1 the decomposition must
 * reach delta = +-1 (units of the order); if no neighbor does, throws
 * decomposition_error carrying the best candidate. For m > 1 the candidate
 * certifying the conjugate bounds is preferred and bound violations are
 * flagged in the result. The returned identity is always exact. */
unit_decomposition decompose(const gamma_triple& g);

/* Exact check, in the order, of
 *   gamma_{i0}(L_{i1} - L_{i2}) + gamma_{i1}(L_{i2} - L_{i0})
 *     + gamma_{i2}(L_{i0} - L_{i1}) = 0,   L_i = lambda_i^a,
 * the three-term relation the whole approximation method pivots on. */
bool siegel_check(const gamma_triple& g);

/* Exponents of the unit part of the conjugate ratio
 * gamma_{i1}(L_{i2} - L_{i0}) / (gamma_{i2}(L_{i1} - L_{i0})): with
 * gamma_0 = delta lambda0^A lambda2^B, the ratio is mu lambda0^A'
 * lambda2^B' with
 *   i0 = 0: (A', B') = (-A + 2B, -2A + B)
 *   i0 = 1: (A', B') = (-A - B,   A - 2B)
 *   i0 = 2: (A', B') = (2A - B,   A + B)
 * and |A'| + |B'| <= 3(|A| + |B|). */
std::pair<long long, long long> ab_prime(int i0, long long A, long long B);

/* Certified data for the linear-forms-in-logs stage: the conjugate ratio,
 * its unit decomposition mu lambda0^A' lambda2^B', the linear form
 * Lambda = A' log(lambda0) + B' log|lambda2| + log|mu|, and the comparator
 * 2m/(y^3 lambda0^a). Inequalities among them are reported, not asserted;
 * their sharp forms hold only in asymptotic regimes. */
struct lambda_report {
    long long A_prime = 0;
    long long B_prime = 0;
    interval mu;
    interval Lambda;
    interval ratio_minus_one;  // nonzero, certified
    interval rhs;              // 2m/(y^3 lambda0^a)
    interval c0;
    interval c1;
    interval R;
    interval h_mu_upper;        // certified upper estimate of h(mu)
    interval h_mu_paper_bound;  // 3(log m + a log(n+3))
    refined_verdict ratio_inequality = refined_verdict::undecided;
    refined_verdict h_mu_within_bound = refined_verdict::undecided;
    /* ratio - 1 recomputed through the three-term relation overlaps the
     * direct evaluation. */
    bool siegel_rearrangement_consistent = false;
    /* Lambda overlaps log|ratio|. */
    bool lambda_matches_log_ratio = false;
    /* mu from exact numerator/denominator elements overlaps ratio divided
     * by the unit part. */
    bool mu_consistent = false;
};

/* Requires y >= 1 and d obtained from g. */
lambda_report lambda_diagnostics(const gamma_triple& g,
                                 const unit_decomposition& d);

}  // namespace thue
