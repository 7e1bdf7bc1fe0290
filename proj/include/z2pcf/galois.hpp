#pragma once

#include <vector>

#include "z2pcf/interval.hpp"
#include "z2pcf/ring.hpp"

namespace z2pcf {

/// Adaptive-precision policy for certified decisions: start at `start` bits
/// and double until `max` before giving up with UndecidedError.
struct PrecPolicy {
    mpfr_prec_t start = 128;
    mpfr_prec_t max = 4096;
};

/// Process-wide default policy (the CLI adjusts it from flags/environment).
PrecPolicy& default_prec();

/// Order of Gal(B_n/Q), i.e. 2^n.
long galois_order(int level);

/// j-th power of the fixed generator of Gal(B_n/Q) applied to x.
/// The generator sends X_n to X_n^3 - 3*X_n (2cos t -> 2cos 3t).
RingElem sigma(const RingElem& x, long j = 1);

/// Generator of Gal(B_n/B_{n-1}): p + X_n q -> p - X_n q. Level >= 1.
RingElem tau(const RingElem& x);

/// Certified enclosure of the j-th real conjugate of X_level,
/// i.e. 2*cos(3^j * 2pi / 2^(level+2)).
RealInterval conj_value(int level, long j, mpfr_prec_t prec);

/// Extended embedding value of X_n for sigma^j in Gal(B_{n-1}/Q):
/// the positive root +sqrt(2 + sigma^j(X_{n-1})).
RealInterval ext_gen_value(int level, long j, mpfr_prec_t prec);

/// Enclosure of sigma^j(x) under the real embedding (0 <= j < 2^level of x).
RealInterval embed(const RingElem& x, long j, mpfr_prec_t prec);

/// Enclosure of x under the extended embedding indexed by
/// sigma^j in Gal(B_{n-1}/Q), 0 <= j < 2^(n-1); x at level n >= 1.
RealInterval embed_ext(const RingElem& x, long j, mpfr_prec_t prec);

/// Exact sign of the j-th conjugate of x; decided by adaptive refinement.
/// Throws DomainError when x = 0, UndecidedError past pol.max bits.
int sign_of(const RingElem& x, long j = 0, const PrecPolicy& pol = default_prec());

/// Sign of x under the extended embedding j (x at level n >= 1).
int sign_of_ext(const RingElem& x, long j, const PrecPolicy& pol = default_prec());

/// Log-embedding coordinates (log|sigma_ext^j(x)|)_j of a nonzero element at
/// level n >= 1; the 2^(n-1) coordinates use the extended embeddings.
/// Precision is refined until every |sigma(x)| is bounded away from zero.
std::vector<RealInterval> log_embedding(const RingElem& x, const PrecPolicy& pol = default_prec());

}  // namespace z2pcf
