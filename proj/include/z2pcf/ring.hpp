#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "z2pcf/errors.hpp"

namespace z2pcf {

using Int = mpz_class;
using Rat = mpq_class;

/// Highest tower layer the per-level context tables are built for.
inline constexpr int kMaxLevel = 8;

/// Coefficients of f_n, constant term first, monic of degree 2^n.
/// f_0(t) = t and f_n(t) = f_{n-1}(t^2 - 2); the real root used throughout is
/// X_n = 2*cos(2*pi/2^(n+2)).
const std::vector<Int>& minimal_poly(int level);

/// Tr(X_n^k) for 0 <= k <= 2^(n+1) - 2 (enough for Gram matrices of the
/// power basis).
const std::vector<Int>& power_traces(int level);

/// Element of Q(X_n) in power-basis coordinates at a fixed level.
///
/// Arithmetic reduces modulo f_n. An element lies in Z[X_n] exactly when all
/// power-basis coordinates are integers; values are immutable after
/// construction and safe to share across threads.
class RingElem {
  public:
    RingElem() : level_(0), c_(1, Rat(0)) {}

    static RingElem zero(int level);
    static RingElem one(int level);
    static RingElem constant(int level, Rat value);
    static RingElem constant(int level, long value) { return constant(level, Rat(value)); }
    /// X_n at the given level. generator(0) is 0 (X_0 = 2*cos(pi/2)).
    static RingElem generator(int level);
    /// coeffs.size() must equal 2^level; constant term first.
    static RingElem from_coeffs(int level, std::vector<Rat> coeffs);

    int level() const { return level_; }
    int dim() const { return static_cast<int>(c_.size()); }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& coeff(int i) const { return c_[static_cast<size_t>(i)]; }

    bool is_zero() const;
    bool is_integral() const;
    /// True when all non-constant coordinates vanish.
    bool is_rational() const;
    Rat rational_value() const;  // requires is_rational()

    bool operator==(const RingElem& other) const;
    bool operator!=(const RingElem& other) const { return !(*this == other); }

  private:
    int level_;
    std::vector<Rat> c_;
};

RingElem operator+(const RingElem& a, const RingElem& b);
RingElem operator-(const RingElem& a, const RingElem& b);
RingElem operator-(const RingElem& a);
RingElem operator*(const RingElem& a, const RingElem& b);
RingElem operator*(const Rat& s, const RingElem& a);
RingElem operator+(const RingElem& a, long v);
RingElem operator-(const RingElem& a, long v);
RingElem pow(const RingElem& a, unsigned long e);

/// Reinterpret a at a higher level via X_{m-1} = X_m^2 - 2.
RingElem lift(const RingElem& a, int to_level);
/// Inverse of lift; throws NotInSubfieldError when a is not in the target.
RingElem descend(const RingElem& a, int to_level);

struct TowerSplit {
    RingElem p, q;  // both at level n-1
};

/// Unique decomposition x = p + X_n q with p, q one level down. Level >= 1.
TowerSplit tower_split(const RingElem& x);
/// p + X_n q at level p.level() + 1.
RingElem tower_join(const RingElem& p, const RingElem& q);

/// N_{n/n-1}(x) = p^2 - X_n^2 q^2, returned one level down. Level >= 1.
RingElem relative_norm(const RingElem& x);

/// Product of all 2^n conjugates; requires an integral element.
/// Computed as the determinant of the multiplication matrix, independently of
/// relative_norm.
Int absolute_norm(const RingElem& x);

/// Field inverse of a nonzero element (solves the multiplication-matrix
/// system; result usually has rational coordinates).
RingElem field_inverse(const RingElem& b);

/// a/b when the quotient lies in Z[X_n]; empty otherwise. Throws on b = 0.
/// a and b must be integral and of equal level.
std::optional<RingElem> exact_div(const RingElem& a, const RingElem& b);

/// Exact element equal to 2*cos(k*pi/2^(level+1)) for 0 <= k < 2^(level+1),
/// via the recurrence D_0 = 2, D_1 = X_n, D_k = X_n D_{k-1} - D_{k-2}.
RingElem cos_element(int level, long k);

/// Trace to Q of an element (sum of its conjugates), exact.
Rat trace_to_q(const RingElem& x);

/// Canonical textual form, e.g. "L2:[1,0,3,0]" = 1 + 3*X_2^2.
std::string to_string(const RingElem& x);
/// Accepts the canonical form at any level, or a bare rational meaning a
/// level-0 constant.
RingElem parse_elem(std::string_view text);
/// Compact display: bare rational for level-0 elements, canonical form above.
std::string display_string(const RingElem& x);

}  // namespace z2pcf
