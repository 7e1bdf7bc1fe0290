#include "z2pcf/pcf.hpp"

#include <sstream>

namespace z2pcf {

const RingElem& PCF::coeff(long i) const {
    const long n = n_pre();
    if (i < n) return pre[static_cast<size_t>(i)];
    return per[static_cast<size_t>((i - n) % period())];
}

bool PCF::operator==(const PCF& other) const {
    return coeff_level == other.coeff_level && pre == other.pre && per == other.per;
}

Mat2 Mat2::identity(int level) {
    return {RingElem::one(level), RingElem::zero(level), RingElem::zero(level),
            RingElem::one(level)};
}

Mat2 Mat2::elementary(const RingElem& coeff) {
    const int lv = coeff.level();
    return {coeff, RingElem::one(lv), RingElem::one(lv), RingElem::zero(lv)};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
}

bool Mat2::operator==(const Mat2& other) const {
    return a == other.a && b == other.b && c == other.c && d == other.d;
}

Mat2 m_matrix(const std::vector<RingElem>& coeffs) {
    if (coeffs.empty()) throw DomainError("M-matrix of an empty word");
    Mat2 m = Mat2::elementary(coeffs[0]);
    for (size_t i = 1; i < coeffs.size(); ++i) m = m * Mat2::elementary(coeffs[i]);
    return m;
}

Convergents convergents(const PCF& pcf, long k) {
    if (k < 0) throw DomainError("convergent index must be >= 0");
    if (pcf.per.empty()) throw DomainError("PCF period must be nonempty");
    Mat2 m = Mat2::elementary(pcf.coeff(0));
    for (long i = 1; i <= k; ++i) m = m * Mat2::elementary(pcf.coeff(i));
    return {m.a, m.c, m.b, m.d};
}

Mat2 e_matrix(const PCF& pcf) {
    if (pcf.per.empty()) throw DomainError("PCF period must be nonempty");
    if (pcf.n_pre() == 0) return m_matrix(pcf.per);
    if (pcf.n_pre() == 1) {
        std::vector<RingElem> word;
        word.reserve(pcf.per.size() + 4);
        word.push_back(pcf.pre[0]);
        for (const auto& x : pcf.per) word.push_back(x);
        word.push_back(RingElem::zero(pcf.coeff_level));
        word.push_back(-pcf.pre[0]);
        word.push_back(RingElem::zero(pcf.coeff_level));
        return m_matrix(word);
    }
    throw DomainError("E-matrix only supports preperiod length 0 or 1");
}

namespace {

RingElem xn_squared(int coeff_level) {
    // X_n^2 = 2 + X_{n-1}, written one level down.
    return RingElem::generator(coeff_level) + 2;
}

}  // namespace

bool variety_member(const PCF& pcf) {
    Mat2 e = e_matrix(pcf);
    if (!(e.d == e.a)) return false;
    return e.b == xn_squared(pcf.coeff_level) * e.c;
}

ConvergenceReport convergence_check(const PCF& pcf, const PrecPolicy& pol) {
    const int ell = pcf.period();
    const int n_pre = pcf.n_pre();
    if ((ell != 2 && ell != 3) || n_pre > 1)
        throw DomainError("convergence criteria implemented for period 2 or 3 with preperiod 0 or 1");
    Mat2 e = e_matrix(pcf);

    // (sqrt(-1))^l * I is real only for even l; for l = 3 the check is vacuous.
    if (ell == 2) {
        Mat2 minus_i = Mat2::identity(pcf.coeff_level);
        minus_i.a = -minus_i.a;
        minus_i.d = -minus_i.d;
        if (e == minus_i) return {false, "E equals (sqrt(-1))^2 I"};
    }

    std::vector<RingElem> rot = pcf.per;
    for (int r = 0; r < ell; ++r) {
        if (m_matrix(rot).c.is_zero())
            return {false, "cyclic M[..]_{21} vanishes at rotation " + std::to_string(r)};
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }

    RingElem tr = e.trace();
    if (ell == 3) {
        if (tr.is_zero()) return {false, "trace of E vanishes ((-1)^3 Tr^2 must be < 0)"};
        return {true, {}};
    }
    // l = 2: need Tr(E)^2 >= 4 under the real embedding.
    RingElem u = tr * tr - 4;
    if (u.is_zero()) return {true, {}};
    if (sign_of(u, 0, pol) > 0) return {true, {}};
    return {false, "Tr(E)^2 < 4"};
}

EvalResult evaluate(const PCF& pcf, const PrecPolicy& pol) {
    ConvergenceReport rep = convergence_check(pcf, pol);
    if (!rep.converges) throw DomainError("divergent PCF: " + rep.reason);
    Mat2 e = e_matrix(pcf);
    const RingElem xsq = xn_squared(pcf.coeff_level);

    EvalResult res;
    if (e.d == e.a && e.b == xsq * e.c && !e.c.is_zero()) {
        // Pell form [[p, X_n^2 q], [q, p]]: the value is sgn(pq) X_n.
        res.exact = true;
        res.sign = sign_of(e.a * e.c, 0, pol);
        RealInterval xn = conj_value(pcf.target_level(), 0, pol.start);
        res.value = res.sign > 0 ? xn : -xn;
        return res;
    }

    // General attracting fixed point of E.
    const int tr_sign = sign_of(e.trace(), 0, pol);
    for (mpfr_prec_t prec = pol.start; prec <= pol.max; prec *= 2) {
        try {
            RealInterval tr = embed(e.trace(), 0, prec);
            RealInterval det = embed(e.det(), 0, prec);
            RealInterval disc = sqr(tr) - RealInterval::from_long(4, prec) * det;
            RealInterval lam =
                (tr_sign > 0 ? tr + sqrt(disc) : tr - sqrt(disc)) /
                RealInterval::from_long(2, prec);
            RealInterval z = e.c.is_zero()
                                 ? embed(e.b, 0, prec) / (lam - embed(e.a, 0, prec))
                                 : (lam - embed(e.d, 0, prec)) / embed(e.c, 0, prec);
            res.exact = false;
            res.sign = 0;
            res.value = z;
            return res;
        } catch (const DomainError&) {
            // division straddled zero: refine
        } catch (const UndecidedError&) {
        }
    }
    throw UndecidedError("evaluate fixed point", pol.max);
}

RealInterval evaluate_truncated(const PCF& pcf, long periods, mpfr_prec_t prec,
                                mpfr_prec_t max_prec) {
    if (periods < 1) throw DomainError("need at least one full period");
    const long count = pcf.n_pre() + periods * pcf.period();
    for (mpfr_prec_t p = prec; p <= max_prec; p *= 2) {
        RealInterval pk = RealInterval::from_long(1, p), pk1(p);    // p_{-1}=1, p_{-2}=0
        RealInterval qk(p), qk1 = RealInterval::from_long(1, p);    // q_{-1}=0, q_{-2}=1
        for (long i = 0; i < count; ++i) {
            RealInterval ci = embed(pcf.coeff(i), 0, p);
            RealInterval pn = ci * pk + pk1;
            RealInterval qn = ci * qk + qk1;
            pk1 = std::move(pk);
            qk1 = std::move(qk);
            pk = std::move(pn);
            qk = std::move(qn);
        }
        if (qk.contains_zero()) continue;
        return pk / qk;
    }
    throw UndecidedError("truncated evaluation", max_prec);
}

bool pell_identity_check(const PCF& pcf) {
    const int ell = pcf.period();
    Convergents cv = convergents(pcf, ell - 1);
    RingElem lhs = cv.p_k * cv.p_k - xn_squared(pcf.coeff_level) * (cv.q_k * cv.q_k);
    return lhs == RingElem::constant(pcf.coeff_level, (ell % 2 == 0) ? 1 : -1);
}

std::string to_string(const PCF& pcf) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < pcf.pre.size(); ++i) {
        if (i) os << ", ";
        os << display_string(pcf.pre[i]);
    }
    if (!pcf.pre.empty()) os << ' ';
    os << '|';
    for (size_t i = 0; i < pcf.per.size(); ++i) {
        os << (i ? ", " : " ");
        os << display_string(pcf.per[i]);
    }
    os << ']';
    return os.str();
}

namespace {

std::vector<std::string> split_top_level(std::string_view body, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size() || (body[i] == sep && depth == 0)) {
            parts.emplace_back(body.substr(start, i - start));
            start = i + 1;
        } else if (i < body.size() && body[i] == '[') {
            ++depth;
        } else if (i < body.size() && body[i] == ']') {
            --depth;
        }
    }
    return parts;
}

bool blank(const std::string& s) {
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    return true;
}

RingElem parse_pcf_coeff(const std::string& tok, int coeff_level) {
    RingElem e = parse_elem(tok);
    if (e.level() == coeff_level) return e;
    if (e.level() == 0 && e.is_rational())
        return RingElem::constant(coeff_level, e.rational_value());
    throw ParseError("coefficient '" + tok + "' is at level " + std::to_string(e.level()) +
                     ", expected " + std::to_string(coeff_level));
}

}  // namespace

PCF parse_pcf(std::string_view text, int coeff_level) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("PCF must be bracketed: [pre... | period...]");
    std::string body = s.substr(1, s.size() - 2);
    auto halves = split_top_level(body, '|');
    if (halves.size() != 2) throw ParseError("PCF needs exactly one '|' separator");
    PCF pcf;
    pcf.coeff_level = coeff_level;
    if (!blank(halves[0]))
        for (const auto& tok : split_top_level(halves[0], ','))
            pcf.pre.push_back(parse_pcf_coeff(tok, coeff_level));
    if (blank(halves[1])) throw ParseError("PCF period must be nonempty");
    for (const auto& tok : split_top_level(halves[1], ','))
        pcf.per.push_back(parse_pcf_coeff(tok, coeff_level));
    return pcf;
}

}  // namespace z2pcf
