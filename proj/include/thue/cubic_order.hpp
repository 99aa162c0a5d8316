#pragma once

#include <gmpxx.h>

#include <array>
#include <string>

#include "thue/interval.hpp"

namespace thue {

/* Element of Z[lambda0] for the cubic f_n(X) = X^3 - (n-1)X^2 - (n+2)X - 1,
 * stored on the power basis {1, lambda0, lambda0^2}:
 *   c0 + c1*lambda0 + c2*lambda0^2.
 * Multiplication reduces with lambda0^3 = (n-1)lambda0^2 + (n+2)lambda0 + 1.
 * Whether Z[lambda0] is the maximal order is irrelevant here: every operation
 * below stays inside the order. */
class order_element {
  public:
    order_element() : n_(0) {}
    order_element(long long n, mpz_class c0, mpz_class c1, mpz_class c2)
        : n_(n), c_{std::move(c0), std::move(c1), std::move(c2)} {}

    static order_element integer(long long n, const mpz_class& k);
    static order_element lambda0(long long n);
    /* lambda1 = -1/(lambda0 + 1) = lambda0^2 - n lambda0 - 2. */
    static order_element lambda1(long long n);
    /* lambda2 = -(lambda0 + 1)/lambda0 = -lambda0^2 + (n-1) lambda0 + (n+1). */
    static order_element lambda2(long long n);

    long long n() const { return n_; }
    const mpz_class& coeff(int i) const { return c_.at(i); }

    bool operator==(const order_element& o) const;
    bool operator!=(const order_element& o) const { return !(*this == o); }

    order_element operator-() const;
    order_element operator+(const order_element& o) const;
    order_element operator-(const order_element& o) const;
    /* Throws argument_error when the family parameters differ. */
    order_element operator*(const order_element& o) const;
    order_element operator*(const mpz_class& k) const;
    order_element pow(unsigned long e) const;

    bool is_rational() const { return c_[1] == 0 && c_[2] == 0; }
    bool is_one() const { return is_rational() && c_[0] == 1; }

    /* Field norm = det of the multiplication-by-this matrix on the power
     * basis. Multiplicative; norm(x - lambda0^a y) equals the form value
     * F_{n,a}(x, y). */
    mpz_class norm() const;

    /* The order automorphism sigma determined by lambda0 -> lambda1.
     * sigma cycles the real embeddings: lambda0 -> lambda1 -> lambda2. */
    order_element galois() const;

    /* Inverse of a unit (norm +-1); throws not_a_unit_error otherwise. */
    order_element invert_unit() const;

    /* Certified enclosures of the three real embeddings, index i evaluating
     * at lambda_i. Requires prec >= 32. */
    std::array<interval, 3> embed(mpfr_prec_t prec) const;

    std::string str() const;

  private:
    void require_same_family(const order_element& o) const;

    long long n_;
    std::array<mpz_class, 3> c_{};
};

inline order_element operator*(const mpz_class& k, const order_element& e) {
    return e * k;
}

}  // namespace thue
