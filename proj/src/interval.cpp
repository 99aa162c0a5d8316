#include "thue/interval.hpp"

#include <cstdio>
#include <algorithm>

namespace thue {

namespace {

mpfr_prec_t combine(const interval& a, const interval& b) {
    return std::max(a.precision(), b.precision());
}

}  // namespace

interval::interval() : interval(64, true) {
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

interval::interval(mpfr_prec_t prec, bool) : prec_(prec) {
    if (prec < MPFR_PREC_MIN) prec_ = MPFR_PREC_MIN;
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
}

interval::interval(const interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

interval::interval(interval&& o) noexcept : prec_(o.prec_) {
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    /* Leave the source valid for its destructor. */
    mpfr_init2(o.lo_, MPFR_PREC_MIN);
    mpfr_init2(o.hi_, MPFR_PREC_MIN);
    mpfr_set_zero(o.lo_, 1);
    mpfr_set_zero(o.hi_, 1);
}

interval& interval::operator=(interval o) noexcept {
    std::swap(prec_, o.prec_);
    std::swap(lo_[0], o.lo_[0]);
    std::swap(hi_[0], o.hi_[0]);
    return *this;
}

interval::~interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void interval::check_valid(const char* op) const {
    if (!mpfr_number_p(lo_) || !mpfr_number_p(hi_) || mpfr_cmp(lo_, hi_) > 0)
        throw internal_error(std::string("interval invariant broken in ") + op);
}

interval interval::exact(long v, mpfr_prec_t prec) {
    interval r(prec, true);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

interval interval::exact(const mpz_class& v, mpfr_prec_t prec) {
    interval r(prec, true);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

interval interval::of_rational(const mpq_class& v, mpfr_prec_t prec) {
    interval r(prec, true);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

interval interval::of_endpoints(const mpq_class& lo, const mpq_class& hi,
                                mpfr_prec_t prec) {
    if (lo > hi) throw argument_error("interval endpoints out of order");
    interval r(prec, true);
    mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

interval interval::operator-() const {
    interval r(prec_, true);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

interval interval::operator+(const interval& o) const {
    interval r(combine(*this, o), true);
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    r.check_valid("add");
    return r;
}

interval interval::operator-(const interval& o) const {
    interval r(combine(*this, o), true);
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    r.check_valid("sub");
    return r;
}

interval interval::operator*(const interval& o) const {
    interval r(combine(*this, o), true);
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    const mpfr_srcptr a[2] = {lo_, hi_};
    const mpfr_srcptr b[2] = {o.lo_, o.hi_};
    bool first = true;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            mpfr_mul(t, a[i], b[j], MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, a[i], b[j], MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    r.check_valid("mul");
    return r;
}

interval interval::operator/(const interval& o) const {
    if (o.contains_zero())
        throw interval_domain_error("division by interval containing 0");
    interval r(combine(*this, o), true);
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    const mpfr_srcptr a[2] = {lo_, hi_};
    const mpfr_srcptr b[2] = {o.lo_, o.hi_};
    bool first = true;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            mpfr_div(t, a[i], b[j], MPFR_RNDD);
            if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_div(t, a[i], b[j], MPFR_RNDU);
            if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    r.check_valid("div");
    return r;
}

interval interval::abs() const {
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    interval r(prec_, true);
    mpfr_set_zero(r.lo_, 1);
    if (mpfr_cmpabs(lo_, hi_) >= 0)
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    else
        mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

interval interval::max_with_zero() const {
    if (mpfr_sgn(lo_) >= 0) return *this;
    interval r(prec_, true);
    mpfr_set_zero(r.lo_, 1);
    if (mpfr_sgn(hi_) <= 0)
        mpfr_set_zero(r.hi_, 1);
    else
        mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

interval interval::pow_int(long e) const {
    if (e == 0) return exact(1L, prec_);
    if (e < 0) return exact(1L, prec_) / pow_int(-e);
    interval r(prec_, true);
    if (mpfr_sgn(lo_) > 0 || (e % 2 == 1)) {
        /* x^e is increasing on the whole line for odd e, and on x > 0. */
        mpfr_pow_si(r.lo_, lo_, e, MPFR_RNDD);
        mpfr_pow_si(r.hi_, hi_, e, MPFR_RNDU);
    } else if (mpfr_sgn(hi_) < 0) {
        /* Even power of a negative interval: decreasing. */
        mpfr_pow_si(r.lo_, hi_, e, MPFR_RNDD);
        mpfr_pow_si(r.hi_, lo_, e, MPFR_RNDU);
    } else {
        /* Even power across 0. */
        mpfr_set_zero(r.lo_, 1);
        mpfr_t t;
        mpfr_init2(t, prec_);
        mpfr_pow_si(t, lo_, e, MPFR_RNDU);
        mpfr_pow_si(r.hi_, hi_, e, MPFR_RNDU);
        if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
    }
    r.check_valid("pow");
    return r;
}

interval interval::log_abs() const {
    interval a = abs();
    if (mpfr_sgn(a.lo_) <= 0)
        throw interval_domain_error("log of interval containing 0");
    interval r(prec_, true);
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    r.check_valid("log");
    return r;
}

bool interval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool interval::is_strictly_positive() const { return mpfr_sgn(lo_) > 0; }

bool interval::is_strictly_negative() const { return mpfr_sgn(hi_) < 0; }

bool interval::contains(const mpq_class& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool interval::strictly_less(const mpq_class& v) const {
    return mpfr_cmp_q(hi_, v.get_mpq_t()) < 0;
}

bool interval::strictly_greater(const mpq_class& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) > 0;
}

bool interval::strictly_less(const interval& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
}

bool interval::intersects(const interval& o) const {
    return !(strictly_less(o) || o.strictly_less(*this));
}

bool interval::width_less_than(const mpq_class& w) const {
    mpfr_t t;
    mpfr_init2(t, prec_ + 8);
    mpfr_sub(t, hi_, lo_, MPFR_RNDU);
    bool r = mpfr_cmp_q(t, w.get_mpq_t()) < 0;
    mpfr_clear(t);
    return r;
}

mpz_class interval::midpoint_integer() const {
    mpfr_t t;
    mpfr_init2(t, prec_ + 8);
    mpfr_add(t, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(t, t, 1, MPFR_RNDN);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    return z;
}

mpz_class interval::floor_lo() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), lo_, MPFR_RNDD);
    return z;
}

mpz_class interval::ceil_hi() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDU);
    return z;
}

std::string interval::str(int digits) const {
    char* s_lo = nullptr;
    char* s_hi = nullptr;
    mpfr_asprintf(&s_lo, "%.*RDe", digits, lo_);
    mpfr_asprintf(&s_hi, "%.*RUe", digits, hi_);
    std::string r = std::string("[") + s_lo + ", " + s_hi + "]";
    mpfr_free_str(s_lo);
    mpfr_free_str(s_hi);
    return r;
}

interval min_abs(const interval& a, const interval& b) {
    interval x = a.abs();
    interval y = b.abs();
    interval r(std::max(x.precision(), y.precision()), true);
    mpfr_min(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
    return r;
}

}  // namespace thue
