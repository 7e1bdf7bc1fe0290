#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "z2pcf/errors.hpp"

namespace z2pcf {

/// Closed real interval [lo, hi] with MPFR endpoints, rounded outward.
///
/// Every operation returns an interval that contains the exact image of the
/// inputs; the working precision of a result is the maximum of the operand
/// precisions. Comparisons are only reported when the intervals separate, so
/// a decision taken through this class is a certificate, never a guess.
class RealInterval {
  public:
    explicit RealInterval(mpfr_prec_t prec = 128);
    RealInterval(const RealInterval& other);
    RealInterval(RealInterval&& other) noexcept;
    RealInterval& operator=(RealInterval other) noexcept;
    ~RealInterval();

    static RealInterval from_long(long v, mpfr_prec_t prec);
    static RealInterval from_rat(const mpq_class& q, mpfr_prec_t prec);
    /// [pi_lo, pi_hi] at the given precision.
    static RealInterval pi(mpfr_prec_t prec);
    /// Certified enclosure of 2*cos(2*pi*k/2^log2_denom).
    static RealInterval two_cos_2pi(long k, int log2_denom, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }

    bool contains_zero() const;
    bool is_exact_zero() const;
    bool is_positive() const;  // lo > 0
    bool is_negative() const;  // hi < 0
    /// +1 / -1 when separated from zero, 0 when the interval straddles it.
    int sign() const;

    /// Midpoint rendered with the given number of significant digits.
    std::string str(int sig_digits = 17) const;
    /// "mid +- rad" form used by the CLI.
    std::string str_with_radius(int sig_digits = 17) const;
    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_d() const { return (lo_d() + hi_d()) / 2; }
    double width_d() const;

    friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator-(const RealInterval& a);
    friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
    /// Throws DomainError if the divisor straddles zero.
    friend RealInterval operator/(const RealInterval& a, const RealInterval& b);

    friend RealInterval sqr(const RealInterval& a);
    /// Requires lo >= 0; throws UndecidedError if the enclosure dips below 0.
    friend RealInterval sqrt(const RealInterval& a);
    /// Requires lo > 0; throws UndecidedError otherwise.
    friend RealInterval log(const RealInterval& a);
    friend RealInterval abs(const RealInterval& a);

    /// a.hi < b.lo
    friend bool certainly_less(const RealInterval& a, const RealInterval& b);
    friend bool certainly_greater(const RealInterval& a, const RealInterval& b);
    friend bool overlaps(const RealInterval& a, const RealInterval& b);
    /// True when b is contained in a.
    bool contains(const RealInterval& b) const;
    bool contains_rat(const mpq_class& q) const;

  private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

}  // namespace z2pcf
