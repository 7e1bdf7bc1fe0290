#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "z2pcf/galois.hpp"
#include "z2pcf/interval.hpp"
#include "z2pcf/ring.hpp"

namespace z2pcf {

/// Periodic continued fraction with coefficients in Z[X_{n-1}], targeting
/// X_n at level coeff_level + 1. Type is (N, l) = (pre.size(), per.size()).
struct PCF {
    int coeff_level = 0;
    std::vector<RingElem> pre;
    std::vector<RingElem> per;

    int n_pre() const { return static_cast<int>(pre.size()); }
    int period() const { return static_cast<int>(per.size()); }
    int target_level() const { return coeff_level + 1; }
    /// c_i of the full expansion: preperiod first, then cyclic period.
    const RingElem& coeff(long i) const;

    bool operator==(const PCF& other) const;
};

/// 2x2 matrix over one level, row-major [[a, b], [c, d]].
struct Mat2 {
    RingElem a, b, c, d;

    static Mat2 identity(int level);
    /// [[c, 1], [1, 0]]
    static Mat2 elementary(const RingElem& coeff);
    RingElem det() const { return a * d - b * c; }
    RingElem trace() const { return a + d; }
    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    bool operator==(const Mat2& other) const;
};

/// M([c_0, ..., c_m]) as the product of elementary matrices.
Mat2 m_matrix(const std::vector<RingElem>& coeffs);

struct Convergents {
    RingElem p_k, q_k, p_km1, q_km1;
};

/// k-th convergent data of the full expansion (k >= 0).
Convergents convergents(const PCF& pcf, long k);

/// E-matrix of the PCF: M(period) for N = 0, the conjugated product
/// M([y1, x1..xl, 0, -y1, 0]) for N = 1. N >= 2 is rejected.
Mat2 e_matrix(const PCF& pcf);

/// Both variety conditions, exactly: E22 = E11 and E12 = X_n^2 E21
/// (the latter tested one level down via X_n^2 = 2 + X_{n-1}).
bool variety_member(const PCF& pcf);

struct ConvergenceReport {
    bool converges = false;
    std::string reason;  // empty when converges
};

/// The convergence criteria instantiated for l in {2, 3} and N in {0, 1}:
/// E != (sqrt(-1))^l I, every cyclic rotation of the period has a nonzero
/// lower-left M entry, and the trace condition ((-1)^l Tr(E)^2 outside
/// [0, 4) for l = 2, nonzero trace for l = 3).
ConvergenceReport convergence_check(const PCF& pcf, const PrecPolicy& pol = default_prec());

struct EvalResult {
    bool exact = false;
    int sign = 0;        // value = sign * X_n when exact
    RealInterval value;  // certified enclosure in both cases
};

/// Value of a converging PCF: exactly +-X_n when the E-matrix has the Pell
/// form [[p, X_n^2 q], [q, p]]; otherwise a certified enclosure of the
/// attracting fixed point. Throws DomainError if convergence_check fails.
EvalResult evaluate(const PCF& pcf, const PrecPolicy& pol = default_prec());

/// Certified enclosure of the finite continued fraction truncated after the
/// given number of full periods, at fixed working precision (refined
/// internally only to clear divisions by near-zero enclosures).
RealInterval evaluate_truncated(const PCF& pcf, long periods, mpfr_prec_t prec,
                                mpfr_prec_t max_prec = 1 << 16);

/// p_{l-1}^2 - X_n^2 q_{l-1}^2 == (-1)^l, exactly, from the first l
/// coefficients of the full expansion.
bool pell_identity_check(const PCF& pcf);

/// "[c0, ... | p0, p1, ...]"; level-0 coefficients print as bare rationals.
std::string to_string(const PCF& pcf);
/// Parse the textual form; bare coefficients are read at coeff_level.
PCF parse_pcf(std::string_view text, int coeff_level);

}  // namespace z2pcf
