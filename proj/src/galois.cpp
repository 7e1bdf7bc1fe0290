#include "z2pcf/galois.hpp"

#include "level_context.hpp"

namespace z2pcf {

PrecPolicy& default_prec() {
    static PrecPolicy policy;
    return policy;
}

long galois_order(int level) {
    detail::level_context(level);
    return 1L << level;
}

namespace {

RingElem sigma_once(const RingElem& x) {
    const auto& ctx = detail::level_context(x.level());
    std::vector<Rat> c(static_cast<size_t>(ctx.dim), Rat(0));
    for (int i = 0; i < ctx.dim; ++i) {
        if (x.coeff(i) == 0) continue;
        const auto& basis = ctx.sigma_basis[static_cast<size_t>(i)];
        for (int j = 0; j < ctx.dim; ++j)
            if (basis[static_cast<size_t>(j)] != 0)
                c[static_cast<size_t>(j)] += x.coeff(i) * basis[static_cast<size_t>(j)];
    }
    return RingElem::from_coeffs(x.level(), std::move(c));
}

// 3^j mod 2^m
long pow3_mod(long j, int m) {
    const long mod = 1L << m;
    long r = 1 % mod;
    long base = 3 % mod;
    while (j > 0) {
        if (j & 1) r = (r * base) % mod;
        base = (base * base) % mod;
        j >>= 1;
    }
    return r;
}

}  // namespace

RingElem sigma(const RingElem& x, long j) {
    const long order = galois_order(x.level());
    j %= order;
    if (j < 0) j += order;
    RingElem r = x;
    for (long i = 0; i < j; ++i) r = sigma_once(r);
    return r;
}

RingElem tau(const RingElem& x) {
    if (x.level() < 1) throw DomainError("tau requires level >= 1");
    // Negate odd power-basis coordinates: X_n -> -X_n.
    std::vector<Rat> c(x.coeffs());
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return RingElem::from_coeffs(x.level(), std::move(c));
}

RealInterval conj_value(int level, long j, mpfr_prec_t prec) {
    const long order = galois_order(level);
    j %= order;
    if (j < 0) j += order;
    return RealInterval::two_cos_2pi(pow3_mod(j, level + 2), level + 2, prec);
}

RealInterval ext_gen_value(int level, long j, mpfr_prec_t prec) {
    if (level < 1) throw DomainError("extended embedding requires level >= 1");
    RealInterval below = conj_value(level - 1, j, prec);
    return sqrt(below + RealInterval::from_long(2, prec));
}

namespace {

RealInterval horner(const RingElem& x, const RealInterval& v, mpfr_prec_t prec) {
    RealInterval acc = RealInterval::from_rat(x.coeff(x.dim() - 1), prec);
    for (int i = x.dim() - 2; i >= 0; --i)
        acc = acc * v + RealInterval::from_rat(x.coeff(i), prec);
    return acc;
}

}  // namespace

RealInterval embed(const RingElem& x, long j, mpfr_prec_t prec) {
    if (x.dim() == 1) return RealInterval::from_rat(x.coeff(0), prec);
    return horner(x, conj_value(x.level(), j, prec), prec);
}

RealInterval embed_ext(const RingElem& x, long j, mpfr_prec_t prec) {
    if (x.level() < 1) throw DomainError("embed_ext requires level >= 1");
    TowerSplit s = tower_split(x);
    RealInterval xp = embed(s.p, j, prec);
    RealInterval xq = embed(s.q, j, prec);
    return xp + ext_gen_value(x.level(), j, prec) * xq;
}

namespace {

template <typename EvalFn>
int adaptive_sign(const RingElem& x, const PrecPolicy& pol, EvalFn eval) {
    if (x.is_zero()) throw DomainError("sign of the zero element");
    if (x.is_rational()) return sgn(x.rational_value()) > 0 ? 1 : -1;
    for (mpfr_prec_t prec = pol.start; prec <= pol.max; prec *= 2) {
        RealInterval v = eval(prec);
        int s = v.sign();
        if (s != 0) return s;
    }
    throw UndecidedError("sign_of", pol.max);
}

}  // namespace

int sign_of(const RingElem& x, long j, const PrecPolicy& pol) {
    return adaptive_sign(x, pol, [&](mpfr_prec_t prec) { return embed(x, j, prec); });
}

int sign_of_ext(const RingElem& x, long j, const PrecPolicy& pol) {
    if (x.level() < 1) throw DomainError("sign_of_ext requires level >= 1");
    if (x.is_zero()) throw DomainError("sign of the zero element");
    for (mpfr_prec_t prec = pol.start; prec <= pol.max; prec *= 2) {
        RealInterval v = embed_ext(x, j, prec);
        int s = v.sign();
        if (s != 0) return s;
    }
    throw UndecidedError("sign_of_ext", pol.max);
}

std::vector<RealInterval> log_embedding(const RingElem& x, const PrecPolicy& pol) {
    if (x.level() < 1) throw DomainError("log_embedding requires level >= 1");
    if (x.is_zero()) throw DomainError("log_embedding of zero");
    const long coords = 1L << (x.level() - 1);
    std::vector<RealInterval> out;
    out.reserve(static_cast<size_t>(coords));
    for (long j = 0; j < coords; ++j) {
        bool done = false;
        for (mpfr_prec_t prec = pol.start; prec <= pol.max && !done; prec *= 2) {
            RealInterval v = abs(embed_ext(x, j, prec));
            if (v.contains_zero()) continue;  // refine until bounded away from 0
            out.push_back(log(v));
            done = true;
        }
        if (!done) throw UndecidedError("log_embedding coordinate " + std::to_string(j), pol.max);
    }
    return out;
}

}  // namespace z2pcf
