#include "thue/forms.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "thue/errors.hpp"
#include "thue/mp_util.hpp"

namespace thue {

namespace {

struct coeff_cache {
    std::mutex mu;
    std::map<long long, std::vector<std::pair<mpz_class, mpz_class>>> chains;
    std::size_t entries = 0;
    std::size_t limit = 1000000;
};

coeff_cache& cache() {
    static coeff_cache c;
    return c;
}

void extend_chain(long long n,
                  std::vector<std::pair<mpz_class, mpz_class>>& ch,
                  std::size_t upto) {
    const mpz_class p = zz(n - 1);
    const mpz_class q = zz(n + 2);
    if (ch.empty()) {
        ch.emplace_back(mpz_class(3), mpz_class(3));
        ch.emplace_back(p, q);
        ch.emplace_back(zz(n) * zz(n) + 5, zz(n) * zz(n) + 2 * zz(n) + 6);
    }
    while (ch.size() <= upto) {
        std::size_t a = ch.size();
        mpz_class u = p * ch[a - 1].first + q * ch[a - 2].first +
                      ch[a - 3].first;
        mpz_class v = q * ch[a - 1].second - p * ch[a - 2].second -
                      ch[a - 3].second;
        ch.emplace_back(std::move(u), std::move(v));
    }
}

}  // namespace

void set_coeffs_cache_limit(std::size_t limit) {
    coeff_cache& c = cache();
    std::lock_guard<std::mutex> lock(c.mu);
    c.limit = limit;
    if (limit == 0 || c.entries > limit) {
        c.chains.clear();
        c.entries = 0;
    }
}

form_coeffs coeffs(long long n, long long a) {
    if (a < 0)
        throw argument_error(
            "coefficients are defined for a >= 0; negative a is handled by "
            "the flip identity in eval_form");
    coeff_cache& c = cache();
    {
        std::lock_guard<std::mutex> lock(c.mu);
        if (c.limit > 0) {
            auto& ch = c.chains[n];
            std::size_t before = ch.size();
            if (ch.size() <= static_cast<std::size_t>(a) &&
                c.entries + (a + 1 - ch.size()) <= c.limit) {
                extend_chain(n, ch, static_cast<std::size_t>(a));
                c.entries += ch.size() - before;
            }
            if (ch.size() > static_cast<std::size_t>(a))
                return {n, a, ch[a].first, ch[a].second};
            if (ch.empty()) c.chains.erase(n);
        }
    }
    /* Cache full or disabled: compute without storing. */
    std::vector<std::pair<mpz_class, mpz_class>> ch;
    extend_chain(n, ch, static_cast<std::size_t>(a));
    return {n, a, ch[a].first, ch[a].second};
}

namespace {

/* 3x3 integer matrices for the companion oracle. */
struct mat3 {
    mpz_class m[3][3];

    static mat3 identity() {
        mat3 r;
        for (int i = 0; i < 3; i++) r.m[i][i] = 1;
        return r;
    }

    mat3 operator*(const mat3& o) const {
        mat3 r;
        for (int i = 0; i < 3; i++)
            for (int j = 0; j < 3; j++) {
                mpz_class s = m[i][0] * o.m[0][j];
                s += m[i][1] * o.m[1][j];
                s += m[i][2] * o.m[2][j];
                r.m[i][j] = std::move(s);
            }
        return r;
    }

    mat3 power(unsigned long e) const {
        mat3 acc = identity();
        mat3 base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    mpz_class trace() const { return m[0][0] + m[1][1] + m[2][2]; }
};

}  // namespace

form_coeffs coeffs_oracle(long long n, long long a) {
    if (a < 0) throw argument_error("oracle coefficients require a >= 0");
    /* Companion matrix of f_n on {1, lambda, lambda^2}; det = 1. */
    mat3 M;
    M.m[0][2] = 1;
    M.m[1][0] = 1;
    M.m[1][2] = zz(n + 2);
    M.m[2][1] = 1;
    M.m[2][2] = zz(n - 1);
    /* Multiplication by lambda^-1 = lambda^2 - (n-1) lambda - (n+2). */
    mat3 Minv;
    Minv.m[0][0] = zz(-(n + 2));
    Minv.m[0][1] = 1;
    Minv.m[1][0] = zz(-(n - 1));
    Minv.m[1][2] = 1;
    Minv.m[2][0] = 1;

    mpz_class u = M.power(static_cast<unsigned long>(a)).trace();
    mpz_class v = Minv.power(static_cast<unsigned long>(a)).trace();
    if (a % 2 == 1) v = -v;
    return {n, a, std::move(u), std::move(v)};
}

mpz_class eval_with(const form_coeffs& fc, const mpz_class& x,
                    const mpz_class& y) {
    mpz_class x2 = x * x;
    mpz_class y2 = y * y;
    mpz_class r = x2 * x - y2 * y;
    r -= fc.u * x2 * y;
    if (fc.a % 2 == 0)
        r += fc.v * x * y2;
    else
        r -= fc.v * x * y2;
    return r;
}

mpz_class eval_form(long long n, long long a, const mpz_class& x,
                    const mpz_class& y, bool allow_degenerate) {
    if (a == 0) {
        if (!allow_degenerate)
            throw degenerate_form_error(
                "a = 0 degenerates to (x - y)^3; pass the degenerate flag to "
                "evaluate it");
        mpz_class d = x - y;
        return d * d * d;
    }
    if (a < 0) return -eval_form(n, -a, y, x);
    return eval_with(coeffs(n, a), x, y);
}

sym_image symmetry_image(long long n, long long a, const mpz_class& x,
                         const mpz_class& y, symmetry s) {
    switch (s) {
        case symmetry::negate:
            return {n, a, -x, -y, -1};
        case symmetry::flip_n:
            return {-n - 1, a, -y, -x, +1};
        case symmetry::flip_a:
            return {n, -a, y, x, -1};
    }
    throw argument_error("unknown symmetry");
}

}  // namespace thue
