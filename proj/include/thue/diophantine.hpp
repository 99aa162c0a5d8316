#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "thue/interval.hpp"
#include "thue/verdict.hpp"

namespace thue {

/* A real number that can be re-enclosed at any requested precision. */
using refinable_real = std::function<interval(mpfr_prec_t)>;

struct convergent {
    mpz_class p;
    mpz_class q;
};

/* First k continued-fraction convergents of an exact rational (Euclid);
 * returns fewer when the expansion terminates earlier. */
std::vector<convergent> convergents_of_rational(const mpq_class& alpha,
                                                int k);

/* First k convergents of an irrational, every partial quotient certified by
 * interval refinement (starting at 128 bits, doubling up to prec_cap). */
std::vector<convergent> convergents(const refinable_real& alpha, int k,
                                    long prec_cap = 100000);

/* A certified small-value input pair for F_{n,a}: y |x - lambda2^a y| <= 1/2
 * (interval-certified) and |F_{n,a}(x, y)| <= y (n+4)^a (exact). The
 * `refined` verdict concerns the sharper bound
 * |F| <= (1/2) y (1+eps) |l2^a - l1^a| |l0^a - l2^a|, which can only be
 * certified false when y_condition_met is false. */
struct witness {
    long long n = 0;
    long long a = 0;
    mpz_class x;
    mpz_class y;
    mpz_class value;
    mpz_class bound;  // y (n+4)^a
    /* Whether 1/(2y^2) <= (eps/3) min{|l2^a - l1^a|, |l0^a - l2^a|} at this y
     * (the sufficient condition for the refined bound), eps = 1/8. */
    bool y_condition_met = false;
    refined_verdict refined = refined_verdict::undecided;
};

/* `count` witnesses with strictly increasing y, built by walking the
 * convergents of lambda2^a. Requires a >= 1. */
std::vector<witness> small_value_witnesses(long long n, long long a, int count,
                                           long prec_cap = 100000);

}  // namespace thue
