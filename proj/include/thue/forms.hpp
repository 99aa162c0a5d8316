#pragma once

#include <gmpxx.h>

#include <cstddef>

namespace thue {

/* The family of binary cubic forms
 *   F_{n,a}(X, Y) = X^3 - u_a X^2 Y + (-1)^a v_a X Y^2 - Y^3
 * with u_a, v_a the integer sequences
 *   u_0 = 3, u_1 = n - 1, u_2 = n^2 + 5,
 *   u_{a+3} = (n-1) u_{a+2} + (n+2) u_{a+1} + u_a,
 *   v_0 = 3, v_1 = n + 2, v_2 = n^2 + 2n + 6,
 *   v_{a+3} = (n+2) v_{a+2} - (n-1) v_{a+1} - v_a.
 * F_{n,a}(X, Y) = prod_i (X - lambda_i^a Y) over the roots of f_n, so
 * F_{n,a}(x, y) is the norm of x - lambda0^a y. */
struct form_coeffs {
    long long n = 0;
    long long a = 0;
    mpz_class u;
    mpz_class v;
};

/* Coefficients by the recurrence (memoized per n). a < 0 is rejected;
 * use eval_form, which resolves negative a through F_{n,-a}(X,Y) =
 * -F_{n,a}(Y,X). */
form_coeffs coeffs(long long n, long long a);

/* Independent computation: u_a = trace(M^a) and v_a = (-1)^a trace(M^-a)
 * for the companion matrix M of f_n (det M = 1, so M^-1 is integral). */
form_coeffs coeffs_oracle(long long n, long long a);

/* Cap on memoized (u, v) pairs across all n (default 10^6); 0 disables
 * caching. Safe for concurrent use. */
void set_coeffs_cache_limit(std::size_t limit);

/* F_{n,a}(x, y), exact. a = 0 degenerates to (x - y)^3 and is only allowed
 * with the explicit flag; negative a goes through the flip identity. */
mpz_class eval_form(long long n, long long a, const mpz_class& x,
                    const mpz_class& y, bool allow_degenerate = false);

/* Evaluation against precomputed coefficients (the search hot path). */
mpz_class eval_with(const form_coeffs& fc, const mpz_class& x,
                    const mpz_class& y);

/* The three exact symmetries of the family:
 *   negate: F_{n,a}(-x, -y) = -F_{n,a}(x, y)
 *   flip_n: F_{n,a}(x, y)  =  F_{-n-1,a}(-y, -x)
 *   flip_a: F_{n,-a}(x, y) = -F_{n,a}(y, x)
 * symmetry_image(s) returns (n', a', x', y', sign) with
 * F_{n',a'}(x', y') = sign * F_{n,a}(x, y). */
enum class symmetry { negate, flip_n, flip_a };

struct sym_image {
    long long n;
    long long a;
    mpz_class x;
    mpz_class y;
    int sign;
};

sym_image symmetry_image(long long n, long long a, const mpz_class& x,
                         const mpz_class& y, symmetry s);

}  // namespace thue
