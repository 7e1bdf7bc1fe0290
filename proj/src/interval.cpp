#include "z2pcf/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace z2pcf {

RealInterval::RealInterval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const RealInterval& other) : prec_(other.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& other) noexcept : prec_(other.prec_) {
    mpfr_init2(lo_, 2);
    mpfr_init2(hi_, 2);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    std::swap(prec_, other.prec_);
}

RealInterval& RealInterval::operator=(RealInterval other) noexcept {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    std::swap(prec_, other.prec_);
    return *this;
}

RealInterval::~RealInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RealInterval RealInterval::from_long(long v, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_rat(const mpq_class& q, mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::pi(mpfr_prec_t prec) {
    RealInterval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::two_cos_2pi(long k, int log2_denom, mpfr_prec_t prec) {
    const long denom = 1L << log2_denom;
    k %= denom;
    if (k < 0) k += denom;
    if (k > denom / 2) k = denom - k;  // cos(2pi - x) = cos(x)
    // Angle is now k*2pi/denom in [0, pi].
    if (k == 0) return from_long(2, prec);
    if (2 * k == denom) return from_long(-2, prec);
    // Strictly inside (0, pi), where cos is decreasing: evaluate endpoints.
    RealInterval r(prec);
    mpfr_t arg;
    mpfr_init2(arg, prec);
    // hi = 2*cos(arg_lo rounded down)
    mpfr_const_pi(arg, MPFR_RNDD);
    mpfr_mul_si(arg, arg, 2 * k, MPFR_RNDD);
    mpfr_div_si(arg, arg, denom, MPFR_RNDD);
    mpfr_cos(r.hi_, arg, MPFR_RNDU);
    mpfr_mul_si(r.hi_, r.hi_, 2, MPFR_RNDU);
    // lo = 2*cos(arg_hi rounded up)
    mpfr_const_pi(arg, MPFR_RNDU);
    mpfr_mul_si(arg, arg, 2 * k, MPFR_RNDU);
    mpfr_div_si(arg, arg, denom, MPFR_RNDU);
    mpfr_cos(r.lo_, arg, MPFR_RNDD);
    mpfr_mul_si(r.lo_, r.lo_, 2, MPFR_RNDD);
    mpfr_clear(arg);
    return r;
}

bool RealInterval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool RealInterval::is_exact_zero() const {
    return mpfr_zero_p(lo_) && mpfr_zero_p(hi_);
}

bool RealInterval::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool RealInterval::is_negative() const { return mpfr_sgn(hi_) < 0; }

int RealInterval::sign() const {
    if (is_positive()) return 1;
    if (is_negative()) return -1;
    return 0;
}

double RealInterval::width_d() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

std::string RealInterval::str(int sig_digits) const {
    mpfr_t mid;
    mpfr_init2(mid, prec_);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_si(mid, mid, 2, MPFR_RNDN);
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRg", sig_digits);
    char* out = nullptr;
    mpfr_asprintf(&out, fmt, mid);
    std::string s(out);
    mpfr_free_str(out);
    mpfr_clear(mid);
    return s;
}

std::string RealInterval::str_with_radius(int sig_digits) const {
    mpfr_t rad;
    mpfr_init2(rad, 64);
    mpfr_sub(rad, hi_, lo_, MPFR_RNDU);
    mpfr_div_si(rad, rad, 2, MPFR_RNDU);
    char* out = nullptr;
    mpfr_asprintf(&out, "%.3Rg", rad);
    std::string s = str(sig_digits) + " +- " + out;
    mpfr_free_str(out);
    mpfr_clear(rad);
    return s;
}

namespace {

mpfr_prec_t join_prec(const RealInterval& a, const RealInterval& b) {
    return std::max(a.precision(), b.precision());
}

}  // namespace

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
    RealInterval r(join_prec(a, b));
    mpfr_add(const_cast<mpfr_ptr>(r.lo()), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_add(const_cast<mpfr_ptr>(r.hi()), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
    RealInterval r(join_prec(a, b));
    mpfr_sub(const_cast<mpfr_ptr>(r.lo()), a.lo(), b.hi(), MPFR_RNDD);
    mpfr_sub(const_cast<mpfr_ptr>(r.hi()), a.hi(), b.lo(), MPFR_RNDU);
    return r;
}

RealInterval operator-(const RealInterval& a) {
    RealInterval r(a.precision());
    mpfr_neg(const_cast<mpfr_ptr>(r.lo()), a.hi(), MPFR_RNDD);
    mpfr_neg(const_cast<mpfr_ptr>(r.hi()), a.lo(), MPFR_RNDU);
    return r;
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
    const mpfr_prec_t prec = join_prec(a, b);
    RealInterval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_ptr rlo = const_cast<mpfr_ptr>(r.lo());
    mpfr_ptr rhi = const_cast<mpfr_ptr>(r.hi());
    const mpfr_srcptr as[2] = {a.lo(), a.hi()};
    const mpfr_srcptr bs[2] = {b.lo(), b.hi()};
    bool first = true;
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, rlo) < 0) mpfr_set(rlo, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, rhi) > 0) mpfr_set(rhi, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) {
    if (b.contains_zero()) throw DomainError("interval division by an enclosure of zero");
    const mpfr_prec_t prec = join_prec(a, b);
    RealInterval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_ptr rlo = const_cast<mpfr_ptr>(r.lo());
    mpfr_ptr rhi = const_cast<mpfr_ptr>(r.hi());
    const mpfr_srcptr as[2] = {a.lo(), a.hi()};
    const mpfr_srcptr bs[2] = {b.lo(), b.hi()};
    bool first = true;
    for (auto x : as) {
        for (auto y : bs) {
            mpfr_div(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, rlo) < 0) mpfr_set(rlo, t, MPFR_RNDD);
            mpfr_div(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, rhi) > 0) mpfr_set(rhi, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

RealInterval sqr(const RealInterval& a) {
    RealInterval r = a * a;
    // The product enclosure can dip below 0 when a straddles; a square cannot.
    mpfr_ptr rlo = const_cast<mpfr_ptr>(r.lo());
    if (mpfr_sgn(rlo) < 0 && a.contains_zero()) mpfr_set_zero(rlo, 1);
    return r;
}

RealInterval sqrt(const RealInterval& a) {
    if (mpfr_sgn(a.lo()) < 0)
        throw UndecidedError("sqrt of an enclosure dipping below zero", a.precision());
    RealInterval r(a.precision());
    mpfr_sqrt(const_cast<mpfr_ptr>(r.lo()), a.lo(), MPFR_RNDD);
    mpfr_sqrt(const_cast<mpfr_ptr>(r.hi()), a.hi(), MPFR_RNDU);
    return r;
}

RealInterval log(const RealInterval& a) {
    if (mpfr_sgn(a.lo()) <= 0)
        throw UndecidedError("log of an enclosure touching zero", a.precision());
    RealInterval r(a.precision());
    mpfr_log(const_cast<mpfr_ptr>(r.lo()), a.lo(), MPFR_RNDD);
    mpfr_log(const_cast<mpfr_ptr>(r.hi()), a.hi(), MPFR_RNDU);
    return r;
}

RealInterval abs(const RealInterval& a) {
    if (!a.contains_zero()) {
        return a.is_negative() ? -a : a;
    }
    RealInterval r(a.precision());
    mpfr_ptr rlo = const_cast<mpfr_ptr>(r.lo());
    mpfr_ptr rhi = const_cast<mpfr_ptr>(r.hi());
    mpfr_set_zero(rlo, 1);
    mpfr_t na;
    mpfr_init2(na, a.precision());
    mpfr_neg(na, a.lo(), MPFR_RNDU);
    if (mpfr_cmp(na, a.hi()) > 0)
        mpfr_set(rhi, na, MPFR_RNDU);
    else
        mpfr_set(rhi, a.hi(), MPFR_RNDU);
    mpfr_clear(na);
    return r;
}

bool certainly_less(const RealInterval& a, const RealInterval& b) {
    return mpfr_cmp(a.hi(), b.lo()) < 0;
}

bool certainly_greater(const RealInterval& a, const RealInterval& b) {
    return mpfr_cmp(a.lo(), b.hi()) > 0;
}

bool overlaps(const RealInterval& a, const RealInterval& b) {
    return !certainly_less(a, b) && !certainly_greater(a, b);
}

bool RealInterval::contains(const RealInterval& b) const {
    return mpfr_cmp(lo_, b.lo()) <= 0 && mpfr_cmp(hi_, b.hi()) >= 0;
}

bool RealInterval::contains_rat(const mpq_class& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

}  // namespace z2pcf
