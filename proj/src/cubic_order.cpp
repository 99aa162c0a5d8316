#include "thue/cubic_order.hpp"

#include <sstream>

#include "thue/mp_util.hpp"
#include "thue/roots.hpp"

namespace thue {

order_element order_element::integer(long long n, const mpz_class& k) {
    return order_element(n, k, 0, 0);
}

order_element order_element::lambda0(long long n) {
    return order_element(n, 0, 1, 0);
}

order_element order_element::lambda1(long long n) {
    /* (lambda0 + 1)(lambda0^2 - n lambda0 - 2) = f_n(lambda0) - 1 = -1. */
    return order_element(n, -2, zz(-n), 1);
}

order_element order_element::lambda2(long long n) {
    /* -1 - lambda0^{-1}, with lambda0^{-1} = lambda0^2 - (n-1)lambda0 - (n+2). */
    return order_element(n, zz(n + 1), zz(n - 1), -1);
}

void order_element::require_same_family(const order_element& o) const {
    if (n_ != o.n_)
        throw argument_error("order elements from different families: n = " +
                             std::to_string(n_) + " vs " +
                             std::to_string(o.n_));
}

bool order_element::operator==(const order_element& o) const {
    return n_ == o.n_ && c_ == o.c_;
}

order_element order_element::operator-() const {
    return order_element(n_, -c_[0], -c_[1], -c_[2]);
}

order_element order_element::operator+(const order_element& o) const {
    require_same_family(o);
    return order_element(n_, c_[0] + o.c_[0], c_[1] + o.c_[1],
                         c_[2] + o.c_[2]);
}

order_element order_element::operator-(const order_element& o) const {
    require_same_family(o);
    return order_element(n_, c_[0] - o.c_[0], c_[1] - o.c_[1],
                         c_[2] - o.c_[2]);
}

order_element order_element::operator*(const order_element& o) const {
    require_same_family(o);
    const mpz_class p = zz(n_ - 1);  // lambda^3 = p lambda^2 + q lambda + 1
    const mpz_class q = zz(n_ + 2);

    mpz_class e0 = c_[0] * o.c_[0];
    mpz_class e1 = c_[0] * o.c_[1] + c_[1] * o.c_[0];
    mpz_class e2 = c_[0] * o.c_[2] + c_[1] * o.c_[1] + c_[2] * o.c_[0];
    mpz_class e3 = c_[1] * o.c_[2] + c_[2] * o.c_[1];
    mpz_class e4 = c_[2] * o.c_[2];

    /* lambda^4 = (p^2 + q) lambda^2 + (pq + 1) lambda + p. */
    e0 += e3 + e4 * p;
    e1 += e3 * q + e4 * (p * q + 1);
    e2 += e3 * p + e4 * (p * p + q);
    return order_element(n_, e0, e1, e2);
}

order_element order_element::operator*(const mpz_class& k) const {
    return order_element(n_, c_[0] * k, c_[1] * k, c_[2] * k);
}

order_element order_element::pow(unsigned long e) const {
    order_element acc = integer(n_, 1);
    order_element base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

namespace {

/* Columns of the multiplication-by-e matrix on {1, lambda, lambda^2}. */
void mult_matrix(const order_element& e, mpz_class m[3][3]) {
    const mpz_class p = zz(e.n() - 1);
    const mpz_class q = zz(e.n() + 2);
    const mpz_class& c0 = e.coeff(0);
    const mpz_class& c1 = e.coeff(1);
    const mpz_class& c2 = e.coeff(2);

    m[0][0] = c0;
    m[1][0] = c1;
    m[2][0] = c2;
    /* e * lambda */
    m[0][1] = c2;
    m[1][1] = c0 + q * c2;
    m[2][1] = c1 + p * c2;
    /* e * lambda^2 */
    m[0][2] = c1 + p * c2;
    m[1][2] = q * c1 + (p * q + 1) * c2;
    m[2][2] = c0 + p * c1 + (p * p + q) * c2;
}

mpz_class det3(const mpz_class m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

mpz_class order_element::norm() const {
    mpz_class m[3][3];
    mult_matrix(*this, m);
    return det3(m);
}

order_element order_element::galois() const {
    order_element l1 = lambda1(n_);
    order_element r = integer(n_, c_[0]) + l1 * c_[1] + (l1 * l1) * c_[2];
    return r;
}

order_element order_element::invert_unit() const {
    mpz_class m[3][3];
    mult_matrix(*this, m);
    mpz_class det = det3(m);
    if (det != 1 && det != -1)
        throw not_a_unit_error("norm is " + det.get_str() +
                               ", inversion needs a unit");
    /* Solve M x = e_1: x_i = cofactor(0, i) / det. */
    mpz_class x0 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    mpz_class x1 = -(m[1][0] * m[2][2] - m[1][2] * m[2][0]);
    mpz_class x2 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    order_element inv(n_, x0 * det, x1 * det, x2 * det);
    if (!(inv * *this).is_one())
        throw internal_error("unit inverse failed to verify");
    return inv;
}

std::array<interval, 3> order_element::embed(mpfr_prec_t prec) const {
    if (prec < 32) throw argument_error("embedding requires precision >= 32");
    root_triple rt = isolate_roots(n_, prec);
    std::array<interval, 3> out;
    for (int i = 0; i < 3; i++) {
        interval x = rt.lam_interval(i, prec);
        interval acc = interval::exact(c_[2], prec);
        acc = acc * x + interval::exact(c_[1], prec);
        acc = acc * x + interval::exact(c_[0], prec);
        out[i] = acc;
    }
    return out;
}

std::string order_element::str() const {
    std::ostringstream os;
    os << c_[0].get_str() << " + " << c_[1].get_str() << "*L + "
       << c_[2].get_str() << "*L^2 (n=" << n_ << ")";
    return os.str();
}

}  // namespace thue
