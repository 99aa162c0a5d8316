#include "thue/roots.hpp"

#include "thue/mp_util.hpp"

#include <cstdlib>

namespace thue {

int sign_f_at(long long n, const mpq_class& r) {
    /* f_n(p/q) has sign of p^3 - (n-1) p^2 q - (n+2) p q^2 - q^3, q > 0. */
    const mpz_class& p = r.get_num();
    const mpz_class& q = r.get_den();
    mpz_class p2 = p * p;
    mpz_class q2 = q * q;
    mpz_class num = p2 * p - zz(n - 1) * p2 * q - zz(n + 2) * p * q2 - q2 * q;
    return sgn(num);
}

namespace {

struct seed {
    mpq_class lo;
    mpq_class hi;
};

/* Narrow a certified bracket by bisection until width <= target. */
root_bracket bisect(long long n, mpq_class lo, mpq_class hi, int sign_lo,
                    const mpq_class& target) {
    while (hi - lo > target) {
        mpq_class mid = (lo + hi) / 2;
        int s = sign_f_at(n, mid);
        if (s == 0)
            throw internal_error("rational root of irreducible cubic");
        if (s == sign_lo)
            lo = mid;
        else
            hi = mid;
    }
    return root_bracket{lo, hi, sign_lo};
}

bool seed_certified(long long n, const seed& s, int sign_lo) {
    return sign_f_at(n, s.lo) == sign_lo && sign_f_at(n, s.hi) == -sign_lo;
}

}  // namespace

root_triple isolate_roots(long long n, long precision_bits) {
    if (precision_bits < 32)
        throw argument_error("root isolation requires precision >= 32");

    /* Region seeds valid for every integer n: f_n(0) = -1 and f_n(-1) = +1
     * identically, and B = |n| + 3 exceeds the Cauchy bound on |roots|. */
    long long B = std::llabs(n) + 3;
    seed s0{qq(0), qq(B)};
    seed s1{qq(-1), qq(0)};
    seed s2{qq(-B), qq(-1)};

    /* Tighter classical seeds for n >= 2, each verified by exact signs. */
    if (n >= 2) {
        seed t0{qq(n) + qq(1, n), qq(n) + qq(2, n)};
        seed t1{qq(-1, n + 1), qq(-1, n + 2)};
        seed t2{qq(-1) - qq(1, n), qq(-1) - qq(1, n + 1)};
        if (seed_certified(n, t0, -1)) s0 = t0;
        if (seed_certified(n, t1, +1)) s1 = t1;
        if (seed_certified(n, t2, -1)) s2 = t2;
    }

    /* On (lambda1, lambda0) the cubic is negative, on (lambda2, lambda1)
     * positive, below lambda2 negative; hence the bracket orientations. */
    if (!seed_certified(n, s0, -1) || !seed_certified(n, s1, +1) ||
        !seed_certified(n, s2, -1))
        throw internal_error("root region seeds failed sign certification");

    mpq_class target(1);
    target >>= static_cast<unsigned long>((precision_bits + 1) / 2);

    root_triple rt;
    rt.n = n;
    rt.precision_bits = precision_bits;
    rt.lam[0] = bisect(n, s0.lo, s0.hi, -1, target);
    rt.lam[1] = bisect(n, s1.lo, s1.hi, +1, target);
    rt.lam[2] = bisect(n, s2.lo, s2.hi, -1, target);
    return rt;
}

int compare_to_root(long long n, int which, const mpq_class& r) {
    /* Signs of f_n on the five intervals cut by the roots alternate
     * -, +, -, + from left to right. Knowing which region r lies in turns
     * one sign evaluation into an exact comparison. */
    int s = sign_f_at(n, r);
    if (s == 0) throw internal_error("rational root of irreducible cubic");
    switch (which) {
        case 0:
            if (r <= 0) throw argument_error("lambda0 comparison needs r > 0");
            return s < 0 ? -1 : +1;
        case 1:
            if (r <= -1 || r >= 0)
                throw argument_error("lambda1 comparison needs r in (-1,0)");
            return s > 0 ? -1 : +1;
        case 2:
            if (r >= -1)
                throw argument_error("lambda2 comparison needs r < -1");
            return s < 0 ? -1 : +1;
        default:
            throw argument_error("root index out of range");
    }
}

bound_report check_root_bounds(long long n) {
    if (n < 1) throw argument_error("bound display is stated for n >= 1");

    bound_report rep;
    rep.n = n;
    rep.asserted = n >= 3;

    mpq_class l0_low_outer = qq(n) + qq(1, n);
    mpq_class l0_low_mid = qq(n) + qq(2, n + 1);
    mpq_class l0_high = qq(n) + qq(2, n);
    mpq_class l1_low = qq(-1, n + 1);
    mpq_class l1_high = qq(-1, n + 2);
    mpq_class l2_low = qq(-1) - qq(1, n);
    mpq_class l2_high = qq(-1) - qq(1, n + 1);

    rep.checks.push_back({"n + 1/n < n + 2/(n+1)", l0_low_outer < l0_low_mid});
    rep.checks.push_back(
        {"n + 2/(n+1) < lambda0", compare_to_root(n, 0, l0_low_mid) < 0});
    rep.checks.push_back(
        {"lambda0 < n + 2/n", compare_to_root(n, 0, l0_high) > 0});
    rep.checks.push_back(
        {"-1/(n+1) < lambda1", compare_to_root(n, 1, l1_low) < 0});
    rep.checks.push_back(
        {"lambda1 < -1/(n+2)", compare_to_root(n, 1, l1_high) > 0});
    rep.checks.push_back(
        {"-1 - 1/n < lambda2", compare_to_root(n, 2, l2_low) < 0});
    rep.checks.push_back(
        {"lambda2 < -1 - 1/(n+1)", compare_to_root(n, 2, l2_high) > 0});

    if (rep.asserted && !rep.all_hold())
        throw internal_error("bracket display violated for n >= 3, n = " +
                             std::to_string(n));
    return rep;
}

}  // namespace thue
