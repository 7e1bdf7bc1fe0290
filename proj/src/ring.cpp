#include "z2pcf/ring.hpp"

#include <array>
#include <cctype>
#include <memory>
#include <mutex>
#include <sstream>

#include "level_context.hpp"

namespace z2pcf {

namespace detail {
namespace {

// Dense integer polynomial helpers, constant term first.
using IPoly = std::vector<Int>;

IPoly ipoly_mul(const IPoly& a, const IPoly& b) {
    IPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// a(b(t)) by Horner over the coefficients of a.
IPoly ipoly_compose(const IPoly& a, const IPoly& b) {
    IPoly r{a.back()};
    for (size_t i = a.size() - 1; i-- > 0;) {
        r = ipoly_mul(r, b);
        r[0] += a[i];
    }
    return r;
}

// t^(dim+i) mod f for 0 <= i < dim-1, where f is monic of degree dim.
std::vector<IPoly> reduction_rows(const IPoly& f, int dim) {
    std::vector<IPoly> rows;
    if (dim < 2) return rows;
    IPoly r(dim);
    for (int i = 0; i < dim; ++i) r[i] = -f[i];  // t^dim mod f
    rows.push_back(r);
    for (int i = 1; i < dim - 1; ++i) {
        IPoly next(dim, Int(0));
        const IPoly& prev = rows.back();
        for (int j = 0; j + 1 < dim; ++j) next[j + 1] = prev[j];
        const Int top = prev[dim - 1];
        if (top != 0)
            for (int j = 0; j < dim; ++j) next[j] += top * rows[0][j];
        rows.push_back(std::move(next));
    }
    return rows;
}

IPoly reduce_int(const std::vector<IPoly>& rows, IPoly c, int dim) {
    if (static_cast<int>(c.size()) <= dim) {
        c.resize(dim, Int(0));
        return c;
    }
    for (int i = static_cast<int>(c.size()) - 1; i >= dim; --i) {
        if (c[i] != 0) {
            const IPoly& row = rows[i - dim];
            for (int j = 0; j < dim; ++j) c[j] += c[i] * row[j];
        }
    }
    c.resize(dim);
    return c;
}

// Newton's identities for the power sums of the roots of monic f.
std::vector<Int> newton_traces(const IPoly& f, int dim) {
    std::vector<Int> p(2 * dim - 1 > 0 ? 2 * dim - 1 : 1);
    p[0] = dim;
    for (int k = 1; k < static_cast<int>(p.size()); ++k) {
        Int s = 0;
        if (k <= dim) s = -Int(k) * f[dim - k];
        for (int i = 1; i < k && i <= dim; ++i) s -= f[dim - i] * p[k - i];
        p[k] = s;
    }
    return p;
}

std::unique_ptr<LevelContext> build_context(int level) {
    auto ctx = std::make_unique<LevelContext>();
    ctx->level = level;
    ctx->dim = 1 << level;
    if (level == 0) {
        ctx->fcoeffs = {Int(0), Int(1)};  // f_0 = t
        ctx->sigma_basis = {{Int(1)}};
        ctx->traces = {Int(1)};
        return ctx;
    }
    const LevelContext& below = level_context(level - 1);
    ctx->fcoeffs = ipoly_compose(below.fcoeffs, IPoly{Int(-2), Int(0), Int(1)});
    ctx->red = reduction_rows(ctx->fcoeffs, ctx->dim);

    const int half = ctx->dim / 2;
    IPoly lift_p{Int(1)}, split_p{Int(1)};
    for (int i = 0; i < half; ++i) {
        IPoly lp = lift_p, sp = split_p;
        lp.resize(ctx->dim, Int(0));
        sp.resize(half, Int(0));
        ctx->lift_pow.push_back(std::move(lp));
        ctx->split_pow.push_back(std::move(sp));
        if (i + 1 < half) {
            lift_p = ipoly_mul(lift_p, IPoly{Int(-2), Int(0), Int(1)});
            split_p = ipoly_mul(split_p, IPoly{Int(2), Int(1)});
        }
    }

    IPoly g = reduce_int(ctx->red, IPoly{Int(0), Int(-3), Int(0), Int(1)}, ctx->dim);
    IPoly gp{Int(1)};
    gp.resize(ctx->dim, Int(0));
    ctx->sigma_basis.push_back(gp);
    IPoly acc = g;
    for (int i = 1; i < ctx->dim; ++i) {
        ctx->sigma_basis.push_back(acc);
        if (i + 1 < ctx->dim) acc = reduce_int(ctx->red, ipoly_mul(acc, g), ctx->dim);
    }

    ctx->traces = newton_traces(ctx->fcoeffs, ctx->dim);
    return ctx;
}

std::array<std::once_flag, kMaxLevel + 1> g_once;
std::array<std::unique_ptr<LevelContext>, kMaxLevel + 1> g_ctx;

}  // namespace

const LevelContext& level_context(int level) {
    if (level < 0 || level > kMaxLevel)
        throw DomainError("level out of range [0, " + std::to_string(kMaxLevel) + "]");
    std::call_once(g_once[static_cast<size_t>(level)],
                   [level] { g_ctx[static_cast<size_t>(level)] = build_context(level); });
    return *g_ctx[static_cast<size_t>(level)];
}

void reduce_mod_f(const LevelContext& ctx, std::vector<Rat>& c) {
    const int dim = ctx.dim;
    for (int i = static_cast<int>(c.size()) - 1; i >= dim; --i) {
        if (c[static_cast<size_t>(i)] != 0) {
            const auto& row = ctx.red[static_cast<size_t>(i - dim)];
            for (int j = 0; j < dim; ++j)
                c[static_cast<size_t>(j)] += c[static_cast<size_t>(i)] * row[static_cast<size_t>(j)];
        }
    }
    c.resize(static_cast<size_t>(dim));
}

}  // namespace detail

using detail::level_context;

const std::vector<Int>& minimal_poly(int level) { return level_context(level).fcoeffs; }
const std::vector<Int>& power_traces(int level) { return level_context(level).traces; }

RingElem RingElem::zero(int level) {
    level_context(level);
    RingElem r;
    r.level_ = level;
    r.c_.assign(static_cast<size_t>(1) << level, Rat(0));
    return r;
}

RingElem RingElem::one(int level) { return constant(level, Rat(1)); }

RingElem RingElem::constant(int level, Rat value) {
    RingElem r = zero(level);
    r.c_[0] = std::move(value);
    return r;
}

RingElem RingElem::generator(int level) {
    RingElem r = zero(level);
    if (level >= 1) r.c_[1] = 1;
    return r;  // X_0 = 0
}

RingElem RingElem::from_coeffs(int level, std::vector<Rat> coeffs) {
    if (coeffs.size() != (static_cast<size_t>(1) << level))
        throw DomainError("coefficient count does not match 2^level");
    level_context(level);
    RingElem r;
    r.level_ = level;
    r.c_ = std::move(coeffs);
    return r;
}

bool RingElem::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool RingElem::is_integral() const {
    for (const auto& x : c_)
        if (x.get_den() != 1) return false;
    return true;
}

bool RingElem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat RingElem::rational_value() const {
    if (!is_rational()) throw DomainError("element is not rational");
    return c_[0];
}

bool RingElem::operator==(const RingElem& other) const {
    return level_ == other.level_ && c_ == other.c_;
}

namespace {

void require_same_level(const RingElem& a, const RingElem& b) {
    if (a.level() != b.level())
        throw LevelMismatchError("operands at levels " + std::to_string(a.level()) + " and " +
                                 std::to_string(b.level()) + "; lift explicitly");
}

}  // namespace

RingElem operator+(const RingElem& a, const RingElem& b) {
    require_same_level(a, b);
    std::vector<Rat> c(a.coeffs());
    for (int i = 0; i < a.dim(); ++i) c[static_cast<size_t>(i)] += b.coeff(i);
    return RingElem::from_coeffs(a.level(), std::move(c));
}

RingElem operator-(const RingElem& a, const RingElem& b) {
    require_same_level(a, b);
    std::vector<Rat> c(a.coeffs());
    for (int i = 0; i < a.dim(); ++i) c[static_cast<size_t>(i)] -= b.coeff(i);
    return RingElem::from_coeffs(a.level(), std::move(c));
}

RingElem operator-(const RingElem& a) {
    std::vector<Rat> c(a.coeffs());
    for (auto& x : c) x = -x;
    return RingElem::from_coeffs(a.level(), std::move(c));
}

RingElem operator*(const RingElem& a, const RingElem& b) {
    require_same_level(a, b);
    const auto& ctx = level_context(a.level());
    const int d = a.dim();
    std::vector<Rat> c(static_cast<size_t>(2 * d - 1), Rat(0));
    for (int i = 0; i < d; ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (b.coeff(j) == 0) continue;
            c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    detail::reduce_mod_f(ctx, c);
    return RingElem::from_coeffs(a.level(), std::move(c));
}

RingElem operator*(const Rat& s, const RingElem& a) {
    std::vector<Rat> c(a.coeffs());
    for (auto& x : c) x *= s;
    return RingElem::from_coeffs(a.level(), std::move(c));
}

RingElem operator+(const RingElem& a, long v) {
    std::vector<Rat> c(a.coeffs());
    c[0] += v;
    return RingElem::from_coeffs(a.level(), std::move(c));
}

RingElem operator-(const RingElem& a, long v) { return a + (-v); }

RingElem pow(const RingElem& a, unsigned long e) {
    RingElem r = RingElem::one(a.level());
    RingElem base = a;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

RingElem lift(const RingElem& a, int to_level) {
    if (to_level < a.level()) throw DomainError("lift target below source level");
    RingElem r = a;
    for (int n = a.level() + 1; n <= to_level; ++n) {
        const auto& ctx = level_context(n);
        std::vector<Rat> c(static_cast<size_t>(ctx.dim), Rat(0));
        for (int i = 0; i < r.dim(); ++i) {
            if (r.coeff(i) == 0) continue;
            const auto& p = ctx.lift_pow[static_cast<size_t>(i)];
            for (int j = 0; j < ctx.dim; ++j)
                if (p[static_cast<size_t>(j)] != 0)
                    c[static_cast<size_t>(j)] += r.coeff(i) * p[static_cast<size_t>(j)];
        }
        r = RingElem::from_coeffs(n, std::move(c));
    }
    return r;
}

TowerSplit tower_split(const RingElem& x) {
    if (x.level() < 1) throw DomainError("tower_split requires level >= 1");
    const auto& ctx = level_context(x.level());
    const int half = ctx.dim / 2;
    std::vector<Rat> p(static_cast<size_t>(half), Rat(0)), q(static_cast<size_t>(half), Rat(0));
    for (int i = 0; i < half; ++i) {
        const auto& sp = ctx.split_pow[static_cast<size_t>(i)];
        const Rat& ce = x.coeff(2 * i);
        const Rat& co = x.coeff(2 * i + 1);
        for (int j = 0; j < half; ++j) {
            if (sp[static_cast<size_t>(j)] == 0) continue;
            if (ce != 0) p[static_cast<size_t>(j)] += ce * sp[static_cast<size_t>(j)];
            if (co != 0) q[static_cast<size_t>(j)] += co * sp[static_cast<size_t>(j)];
        }
    }
    return {RingElem::from_coeffs(x.level() - 1, std::move(p)),
            RingElem::from_coeffs(x.level() - 1, std::move(q))};
}

RingElem tower_join(const RingElem& p, const RingElem& q) {
    require_same_level(p, q);
    const int n = p.level() + 1;
    RingElem lp = lift(p, n), lq = lift(q, n);
    std::vector<Rat> c(lp.coeffs());
    // lq has even-degree support only; X_n * lq shifts it to odd positions.
    for (int j = lp.dim() - 2; j >= 0; --j)
        if (lq.coeff(j) != 0) c[static_cast<size_t>(j + 1)] += lq.coeff(j);
    return RingElem::from_coeffs(n, std::move(c));
}

RingElem descend(const RingElem& a, int to_level) {
    if (to_level > a.level()) throw DomainError("descend target above source level");
    RingElem r = a;
    while (r.level() > to_level) {
        TowerSplit s = tower_split(r);
        if (!s.q.is_zero())
            throw NotInSubfieldError("element does not lie in level " + std::to_string(to_level));
        r = std::move(s.p);
    }
    return r;
}

RingElem relative_norm(const RingElem& x) {
    if (x.level() < 1) throw DomainError("relative_norm requires level >= 1");
    TowerSplit s = tower_split(x);
    RingElem xn_sq = RingElem::generator(x.level() - 1) + 2;  // X_n^2 = 2 + X_{n-1}
    return s.p * s.p - xn_sq * (s.q * s.q);
}

namespace {

// Multiplication matrix of x in the power basis: column j = x * t^j mod f.
std::vector<std::vector<Rat>> mult_matrix(const RingElem& x) {
    const auto& ctx = level_context(x.level());
    const int d = ctx.dim;
    std::vector<std::vector<Rat>> cols;
    cols.reserve(static_cast<size_t>(d));
    std::vector<Rat> cur(x.coeffs());
    cols.push_back(cur);
    for (int j = 1; j < d; ++j) {
        std::vector<Rat> next(static_cast<size_t>(d + 1), Rat(0));
        for (int i = 0; i < d; ++i) next[static_cast<size_t>(i + 1)] = cur[static_cast<size_t>(i)];
        detail::reduce_mod_f(ctx, next);
        cur = next;
        cols.push_back(cur);
    }
    return cols;  // cols[j][i]
}

}  // namespace

Int absolute_norm(const RingElem& x) {
    if (!x.is_integral()) throw DomainError("absolute_norm requires an integral element");
    const int d = x.dim();
    auto cols = mult_matrix(x);
    // det by fraction-tracking Gaussian elimination.
    std::vector<std::vector<Rat>> m(static_cast<size_t>(d), std::vector<Rat>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
    Rat det(1);
    for (int col = 0; col < d; ++col) {
        int piv = -1;
        for (int r = col; r < d; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Int(0);
        if (piv != col) {
            std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(col)]);
            det = -det;
        }
        const Rat pv = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det *= pv;
        for (int r = col + 1; r < d; ++r) {
            Rat factor = m[static_cast<size_t>(r)][static_cast<size_t>(col)] / pv;
            if (factor == 0) continue;
            for (int c2 = col; c2 < d; ++c2)
                m[static_cast<size_t>(r)][static_cast<size_t>(c2)] -=
                    factor * m[static_cast<size_t>(col)][static_cast<size_t>(c2)];
        }
    }
    if (det.get_den() != 1) throw Error("norm of an integral element came out non-integer");
    return det.get_num();
}

RingElem field_inverse(const RingElem& b) {
    if (b.is_zero()) throw DomainError("inverse of zero");
    if (b.is_rational()) return RingElem::constant(b.level(), Rat(1) / b.rational_value());
    const int d = b.dim();
    auto cols = mult_matrix(b);
    // Solve M y = e0 by Gaussian elimination on the augmented system.
    std::vector<std::vector<Rat>> m(static_cast<size_t>(d),
                                    std::vector<Rat>(static_cast<size_t>(d + 1), Rat(0)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
    m[0][static_cast<size_t>(d)] = 1;
    for (int col = 0; col < d; ++col) {
        int piv = -1;
        for (int r = col; r < d; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw Error("multiplication matrix singular for a nonzero element");
        std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(col)]);
        const Rat pv = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (int c2 = col; c2 <= d; ++c2) m[static_cast<size_t>(col)][static_cast<size_t>(c2)] /= pv;
        for (int r = 0; r < d; ++r) {
            if (r == col) continue;
            Rat factor = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (factor == 0) continue;
            for (int c2 = col; c2 <= d; ++c2)
                m[static_cast<size_t>(r)][static_cast<size_t>(c2)] -=
                    factor * m[static_cast<size_t>(col)][static_cast<size_t>(c2)];
        }
    }
    std::vector<Rat> y(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) y[static_cast<size_t>(i)] = m[static_cast<size_t>(i)][static_cast<size_t>(d)];
    return RingElem::from_coeffs(b.level(), std::move(y));
}

std::optional<RingElem> exact_div(const RingElem& a, const RingElem& b) {
    require_same_level(a, b);
    if (b.is_zero()) throw DomainError("exact_div by zero");
    if (!a.is_integral() || !b.is_integral())
        throw DomainError("exact_div requires integral operands");
    RingElem q = a * field_inverse(b);
    if (!q.is_integral()) return std::nullopt;
    return q;
}

RingElem cos_element(int level, long k) {
    const long span = 1L << (level + 1);
    if (k < 0 || k >= span)
        throw DomainError("cos_element index out of [0, 2^(level+1))");
    RingElem d0 = RingElem::constant(level, 2);
    if (k == 0) return d0;
    RingElem x = RingElem::generator(level);
    RingElem d1 = x;
    for (long i = 2; i <= k; ++i) {
        RingElem d2 = x * d1 - d0;
        d0 = std::move(d1);
        d1 = std::move(d2);
    }
    return d1;
}

Rat trace_to_q(const RingElem& x) {
    const auto& tr = power_traces(x.level());
    Rat s(0);
    for (int i = 0; i < x.dim(); ++i)
        if (x.coeff(i) != 0) s += x.coeff(i) * tr[static_cast<size_t>(i)];
    return s;
}

std::string to_string(const RingElem& x) {
    std::ostringstream os;
    os << 'L' << x.level() << ":[";
    for (int i = 0; i < x.dim(); ++i) {
        if (i) os << ',';
        os << x.coeff(i);
    }
    os << ']';
    return os.str();
}

std::string display_string(const RingElem& x) {
    if (x.level() == 0) {
        std::ostringstream os;
        os << x.coeff(0);
        return os.str();
    }
    return to_string(x);
}

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Rat parse_rat(std::string_view tok) {
    tok = strip(tok);
    if (tok.empty()) throw ParseError("empty coefficient");
    for (char ch : tok)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw ParseError("bad character '" + std::string(1, ch) + "' in coefficient");
    try {
        Rat q(std::string(tok));
        q.canonicalize();
        return q;
    } catch (const std::exception&) {
        throw ParseError("cannot parse coefficient '" + std::string(tok) + "'");
    }
}

}  // namespace

RingElem parse_elem(std::string_view text) {
    std::string_view s = strip(text);
    if (s.empty()) throw ParseError("empty element");
    if (s.front() != 'L') return RingElem::constant(0, parse_rat(s));
    s.remove_prefix(1);
    size_t colon = s.find(':');
    if (colon == std::string_view::npos) throw ParseError("missing ':' in element");
    int level = 0;
    {
        std::string lv(strip(s.substr(0, colon)));
        try {
            size_t pos = 0;
            level = std::stoi(lv, &pos);
            if (pos != lv.size()) throw std::invalid_argument(lv);
        } catch (const std::exception&) {
            throw ParseError("bad level '" + lv + "'");
        }
    }
    if (level < 0 || level > kMaxLevel) throw ParseError("level out of range");
    std::string_view body = strip(s.substr(colon + 1));
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw ParseError("element coefficients must be bracketed");
    body = body.substr(1, body.size() - 2);
    std::vector<Rat> coeffs;
    size_t start = 0;
    for (size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size() || body[i] == ',') {
            coeffs.push_back(parse_rat(body.substr(start, i - start)));
            start = i + 1;
        }
    }
    if (coeffs.size() != (static_cast<size_t>(1) << level))
        throw ParseError("expected " + std::to_string(1 << level) + " coefficients at level " +
                         std::to_string(level));
    return RingElem::from_coeffs(level, std::move(coeffs));
}

}  // namespace z2pcf
