#include "thue/diophantine.hpp"

#include <optional>

#include "thue/forms.hpp"
#include "thue/mp_util.hpp"
#include "thue/roots.hpp"

namespace thue {

const char* verdict_name(refined_verdict v) {
    switch (v) {
        case refined_verdict::holds: return "holds";
        case refined_verdict::fails: return "fails";
        case refined_verdict::undecided: return "undecided";
    }
    throw internal_error("verdict_name: bad enum value");
}

std::vector<convergent> convergents_of_rational(const mpq_class& alpha,
                                                int k) {
    if (k < 0) throw argument_error("convergent count must be >= 0");
    std::vector<convergent> out;
    mpz_class num = alpha.get_num();
    mpz_class den = alpha.get_den();
    mpz_class pm1(1), pm2(0), qm1(0), qm2(1);

    while (static_cast<int>(out.size()) < k && den != 0) {
        mpz_class digit, rem;
        mpz_fdiv_qr(digit.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                    den.get_mpz_t());
        mpz_class p = digit * pm1 + pm2;
        mpz_class q = digit * qm1 + qm2;
        out.push_back({p, q});
        pm2 = pm1;
        pm1 = p;
        qm2 = qm1;
        qm1 = q;
        num = den;
        den = rem;
    }
    return out;
}

namespace {

/* One certified extraction attempt at fixed precision. Returns nullopt when
 * the enclosure is too coarse to pin the next partial quotient. */
std::optional<std::vector<convergent>> try_extract(const interval& alpha0,
                                                   int k) {
    std::vector<convergent> out;
    mpz_class pm1(1), pm2(0), qm1(0), qm2(1);
    interval x = alpha0;
    while (static_cast<int>(out.size()) < k) {
        /* The partial quotient is certain only when floor(lo) == floor(hi). */
        mpz_class lo_floor = x.floor_lo();
        mpz_class hi_floor;
        mpfr_get_z(hi_floor.get_mpz_t(), x.hi(), MPFR_RNDD);
        if (lo_floor != hi_floor) return std::nullopt;
        mpz_class digit = lo_floor;

        mpz_class p = digit * pm1 + pm2;
        mpz_class q = digit * qm1 + qm2;
        out.push_back({p, q});
        pm2 = pm1;
        pm1 = p;
        qm2 = qm1;
        qm1 = q;
        if (static_cast<int>(out.size()) == k) break;

        interval frac = x - interval::exact(digit, x.precision());
        /* frac encloses a value in [0, 1); a lower endpoint <= 0 means the
         * reciprocal is not certified. */
        if (!frac.is_strictly_positive()) return std::nullopt;
        x = interval::exact(1L, x.precision()) / frac;
    }
    return out;
}

}  // namespace

std::vector<convergent> convergents(const refinable_real& alpha, int k,
                                    long prec_cap) {
    if (k < 0) throw argument_error("convergent count must be >= 0");
    if (k == 0) return {};
    for (long prec = 128; prec <= prec_cap; prec *= 2) {
        auto r = try_extract(alpha(prec), k);
        if (r) return *r;
    }
    throw precision_exhausted_error(
        "continued fraction did not certify within the precision cap");
}

namespace {

enum class cmp_result { below, above };

/* Decide value vs the exact real enclosed by maker(prec), refining until the
 * interval excludes the value: below when value < real, above when
 * value > real. The enclosed real must be irrational (or at least known
 * != value) for termination. */
std::optional<cmp_result> decide_against(
    const mpq_class& value, const std::function<interval(mpfr_prec_t)>& maker,
    long prec_cap) {
    for (long prec = 128; prec <= prec_cap; prec *= 2) {
        interval iv = maker(prec);
        if (iv.strictly_greater(value)) return cmp_result::below;
        if (iv.strictly_less(value)) return cmp_result::above;
    }
    return std::nullopt;
}

}  // namespace

std::vector<witness> small_value_witnesses(long long n, long long a, int count,
                                           long prec_cap) {
    if (a < 1) throw argument_error("witnesses require a >= 1");
    if (n < 0) throw argument_error("witnesses require n >= 0");
    if (count < 0) throw argument_error("witness count must be >= 0");

    refinable_real alpha = [n, a](mpfr_prec_t prec) {
        return isolate_roots(n, prec).lam_interval(2, prec).pow_int(a);
    };

    auto root_pow = [n, a](int i, mpfr_prec_t prec) {
        return isolate_roots(n, prec).lam_interval(i, prec).pow_int(a);
    };

    mpz_class plain_base = zz(n + 4);
    mpz_class plain_pow;
    mpz_pow_ui(plain_pow.get_mpz_t(), plain_base.get_mpz_t(),
               static_cast<unsigned long>(a));

    std::vector<witness> out;
    mpz_class last_y(0);
    int k = count + 4;
    while (static_cast<int>(out.size()) < count) {
        std::vector<convergent> conv = convergents(alpha, k, prec_cap);
        out.clear();
        last_y = 0;
        for (const auto& c : conv) {
            if (static_cast<int>(out.size()) >= count) break;
            if (c.q <= last_y) continue;

            /* Certify q|p - alpha q| <= 1/2. Equality is impossible: it would
             * force lambda2^a rational. */
            auto err = [&](mpfr_prec_t prec) {
                interval al = alpha(prec);
                interval p = interval::exact(c.p, prec);
                interval q = interval::exact(c.q, prec);
                return (p - al * q).abs() * q;
            };
            auto half = decide_against(mpq_class(1, 2), err, prec_cap);
            if (!half) throw precision_exhausted_error(
                "half-condition undecidable within the precision cap");
            if (*half == cmp_result::below) continue;

            witness w;
            w.n = n;
            w.a = a;
            w.x = c.p;
            w.y = c.q;
            w.value = eval_form(n, a, c.p, c.q);
            w.bound = c.q * plain_pow;
            if (::abs(w.value) > w.bound)
                throw internal_error(
                    "small-value witness violated the exact bound");

            /* Y-condition: 1/(2y^2) <= (1/24) min{|l2^a-l1^a|, |l0^a-l2^a|}
             * (eps = 1/8). LHS exact rational, RHS irrational. */
            mpq_class lhs = mpq_class(1) / mpq_class(2 * c.q * c.q);
            auto y_rhs = [&](mpfr_prec_t prec) {
                interval l0 = root_pow(0, prec);
                interval l1 = root_pow(1, prec);
                interval l2 = root_pow(2, prec);
                return min_abs(l2 - l1, l0 - l2) *
                       interval::of_rational(mpq_class(1, 24), prec);
            };
            auto ycond = decide_against(lhs, y_rhs, prec_cap);
            w.y_condition_met = ycond && *ycond == cmp_result::below;

            /* Refined bound |F| <= (9/16) y |l2^a-l1^a| |l0^a-l2^a|. */
            mpq_class absval(::abs(w.value));
            auto refined_rhs = [&](mpfr_prec_t prec) {
                interval l0 = root_pow(0, prec);
                interval l1 = root_pow(1, prec);
                interval l2 = root_pow(2, prec);
                return (l2 - l1).abs() * (l0 - l2).abs() *
                       interval::exact(c.q, prec) *
                       interval::of_rational(mpq_class(9, 16), prec);
            };
            auto refined = decide_against(absval, refined_rhs, prec_cap);
            if (!refined)
                w.refined = refined_verdict::undecided;
            else if (*refined == cmp_result::below)
                w.refined = refined_verdict::holds;
            else
                w.refined = refined_verdict::fails;
            if (w.y_condition_met && w.refined == refined_verdict::fails)
                throw internal_error(
                    "refined witness bound failed despite its sufficient "
                    "condition");

            last_y = c.q;
            out.push_back(std::move(w));
        }
        if (static_cast<int>(out.size()) < count) {
            k += 4;
            /* One of any two consecutive convergents qualifies, so 2*count+2
             * always suffices; well past that is a bug. */
            if (k > 4 * count + 64)
                throw internal_error("witness walk failed to accumulate");
        }
    }
    return out;
}

}  // namespace thue
