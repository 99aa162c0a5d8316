#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "thue/errors.hpp"

namespace thue {

/* Closed interval [lo, hi] with mpfr endpoints, always rounded outward, so the
 * exact real a computation tracks is contained in the result of every
 * operation. Precision is per-endpoint and fixed at construction; binary
 * operations work at the max of the operand precisions. */
class interval {
  public:
    interval();
    interval(const interval& o);
    interval(interval&& o) noexcept;
    interval& operator=(interval o) noexcept;
    ~interval();

    static interval exact(long v, mpfr_prec_t prec);
    static interval exact(const mpz_class& v, mpfr_prec_t prec);
    static interval of_rational(const mpq_class& v, mpfr_prec_t prec);
    /* [lo, hi] from exact rational endpoints, rounded outward. */
    static interval of_endpoints(const mpq_class& lo, const mpq_class& hi,
                                 mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }

    interval operator-() const;
    interval operator+(const interval& o) const;
    interval operator-(const interval& o) const;
    interval operator*(const interval& o) const;
    /* Throws interval_domain_error when o contains 0. */
    interval operator/(const interval& o) const;

    interval abs() const;
    /* Pointwise max(x, 0); encloses the positive part. */
    interval max_with_zero() const;
    /* Integer power; e < 0 requires 0 to be excluded. */
    interval pow_int(long e) const;
    /* log|x|; requires 0 excluded. */
    interval log_abs() const;

    bool contains_zero() const;
    bool is_strictly_positive() const;
    bool is_strictly_negative() const;
    bool contains(const mpq_class& v) const;
    /* Certified comparisons: true means the exact value provably compares. */
    bool strictly_less(const mpq_class& v) const;
    bool strictly_greater(const mpq_class& v) const;
    bool strictly_less(const interval& o) const;  // hi < o.lo
    bool intersects(const interval& o) const;

    /* hi - lo (rounded up) compared against an exact rational. */
    bool width_less_than(const mpq_class& w) const;

    /* Nearest integer to the midpoint. */
    mpz_class midpoint_integer() const;
    /* floor(lo) and ceil(hi); the integers bracketing the interval. */
    mpz_class floor_lo() const;
    mpz_class ceil_hi() const;

    /* Decimal rendering, outward-rounded, so the printed interval still
     * contains the exact value. */
    std::string str(int digits = 20) const;

  private:
    interval(mpfr_prec_t prec, bool);
    void check_valid(const char* op) const;

    mpfr_t lo_;
    mpfr_t hi_;
    mpfr_prec_t prec_;

    friend interval min_abs(const interval& a, const interval& b);
};

inline interval pow(const interval& x, long e) { return x.pow_int(e); }
inline interval log_abs(const interval& x) { return x.log_abs(); }
inline interval abs(const interval& x) { return x.abs(); }

/* Interval of min(|a|, |b|): [min(lo_a, lo_b), min(hi_a, hi_b)] on abs. */
interval min_abs(const interval& a, const interval& b);

}  // namespace thue
