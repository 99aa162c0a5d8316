#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "thue/interval.hpp"

namespace thue {

/* The defining cubic of the family:
 *   f_n(X) = X^3 - (n-1) X^2 - (n+2) X - 1.
 * It is totally real for every integer n, with exactly one root in each of
 * (0, inf), (-1, 0) and (-inf, -1); we label them lambda0 > 0 > lambda1 > -1
 * > lambda2. f_n has no rational roots (f_n(1) = -2n - 1, f_n(-1) = 1), so
 * being a cubic it is irreducible over Q; this is relied on, never checked. */

/* Sign of f_n at an exact rational point. Never 0 at a root bracket endpoint
 * by irreducibility. */
int sign_f_at(long long n, const mpq_class& r);

/* Bracket (lo, hi) around a single root, certified by a sign change:
 * sign_f_at(lo) == sign_lo != sign_f_at(hi). */
struct root_bracket {
    mpq_class lo;
    mpq_class hi;
    int sign_lo;

    mpq_class width() const { return hi - lo; }
    interval to_interval(mpfr_prec_t prec) const {
        return interval::of_endpoints(lo, hi, prec);
    }
};

struct root_triple {
    long long n = 0;
    long precision_bits = 0;
    /* Index 0 -> lambda0, 1 -> lambda1, 2 -> lambda2. */
    std::array<root_bracket, 3> lam;

    interval lam_interval(int i, mpfr_prec_t prec) const {
        return lam.at(i).to_interval(prec);
    }
};

/* Isolate the three real roots of f_n to bracket width <= 2^-(prec/2),
 * each certified by an exact sign change and pairwise disjoint. */
root_triple isolate_roots(long long n, long precision_bits);

/* Which side of root `which` (0/1/2) of f_n does the rational r fall on?
 * Returns -1 (r < root), +1 (r > root). Exact; r must lie in the root's
 * sign region: (0,inf) for lambda0, (-1,0) for lambda1, (-inf,-1) for
 * lambda2. */
int compare_to_root(long long n, int which, const mpq_class& r);

/* One inequality of the classical bracket display
 *   n + 1/n < n + 2/(n+1) < lambda0 < n + 2/n
 *   -1/(n+1) < lambda1 < -1/(n+2)
 *   -1 - 1/n < lambda2 < -1 - 1/(n+1).
 * Verdicts are exact (rational sign evaluations only). */
struct bound_check {
    std::string name;
    bool holds;
};

struct bound_report {
    long long n = 0;
    /* Inequalities are asserted (a false verdict throws internal_error) for
     * n >= 3; for n in {1, 2} verdicts are reported as found. The display is
     * genuinely false for n = 1 and n = 2 in its middle lower bound. */
    bool asserted = false;
    std::vector<bound_check> checks;

    bool all_hold() const {
        for (const auto& c : checks)
            if (!c.holds) return false;
        return true;
    }
};

/* Check the bracket display for n >= 1. */
bound_report check_root_bounds(long long n);

}  // namespace thue
