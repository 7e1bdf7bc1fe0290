#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "z2pcf/pcf.hpp"
#include "z2pcf/ring.hpp"

namespace z2pcf {

/// Relative unit at level n: N_{n/n-1}(elem) = norm_sign in {+1, -1},
/// with the tower split cached. For elem != +-1 both parts are nonzero.
struct RelUnit {
    RingElem elem;  // level n
    RingElem p, q;  // level n-1
    int norm_sign = 1;

    int level() const { return elem.level(); }
    bool is_plus_minus_one() const { return q.is_zero(); }
    /// elem^{-1} = norm_sign * tau(elem).
    RelUnit inverse() const;
    bool operator==(const RelUnit& other) const { return elem == other.elem; }
};

/// RelUnit when the relative norm of x is exactly +-1; empty otherwise.
/// x must be integral at level >= 1.
std::optional<RelUnit> rel_unit_from(const RingElem& x);

RelUnit unit_mul(const RelUnit& a, const RelUnit& b);

/// Membership in RE_n^+(1,2): norm +1, elem != +-1, q | p - 1, and
/// sgn(p q) = +1 under the real embedding.
bool in_re12(const RelUnit& u, const PrecPolicy& pol = default_prec());

/// Membership in RE_n^-(0,3): norm -1, elem != +-1, p | X_n^2 q - 1,
/// p | q - 1, and sgn(p q) = +1.
bool in_re03(const RelUnit& u, const PrecPolicy& pol = default_prec());

/// Type-(1,2) PCF [ (p-1)/q | q, 2(p-1)/q ] of a member of RE_n^+(1,2).
PCF pcf12_from_unit(const RelUnit& u);

/// Inverse direction: eps = a0 a1 + 1 + X_n a1 for a (1,2) PCF on the
/// variety converging to X_n. Throws DomainError when preconditions fail.
RelUnit unit_from_pcf12(const PCF& pcf, const PrecPolicy& pol = default_prec());

/// Type-(0,3) PCF [ | (X_n^2 q - 1)/p, p, (q-1)/p ] of a member of
/// RE_n^-(0,3).
PCF pcf03_from_unit(const RelUnit& u);

/// Inverse direction: eps = a2 + X_n (a2 a3 + 1).
RelUnit unit_from_pcf03(const PCF& pcf, const PrecPolicy& pol = default_prec());

/// delta_n = (X_n + 2)/(X_n - 2), a relative unit of norm +1 (n >= 1).
RelUnit delta(int n);

/// eta_n = 1 + sum_{k=1}^{2^n - 1} 2 cos(k pi / 2^(n+1)) as a plain element
/// (n >= 0; eta_0 = 1).
RingElem eta_elem(int n);

/// eta_n as a relative unit of norm -1 (n >= 1).
RelUnit eta(int n);

/// x^2 - X_n^2 y^2 = rhs with x, y one level down.
struct PellSolution {
    RingElem x, y;
    int rhs = 1;
};

/// The (1,3)-type relaxation [a1 | a2, a3, a1] of eta_n's (0,3) PCF together
/// with the Pell solution (p_2, q_2) of its second convergent, which
/// reassembles to eta_n.
std::pair<PCF, PellSolution> pcf13(int n);

/// (p(eps), q(eps), norm) -- the Pell-solution side of the bijection
/// RE_n -> Sol_n.
PellSolution pell_map(const RelUnit& u);

/// Log-embedding coordinates of the unit (level n >= 1, 2^(n-1) entries).
std::vector<RealInterval> log_embedding(const RelUnit& u, const PrecPolicy& pol = default_prec());

}  // namespace z2pcf
