#include "km/ratfun.hpp"

#include <algorithm>
#include <cctype>

namespace km {

Rational rational_parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (!s.empty() && s[0] == '+') s.erase(s.begin());
    if (s.empty()) fail(errc::parse_error, "empty rational literal");
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (c == '-' && i == 0);
        if (!ok) fail(errc::parse_error, "bad rational literal: " + std::string(text));
    }
    try {
        Rational r(s, 10);
        if (r.get_den() == 0) fail(errc::parse_error, "zero denominator: " + std::string(text));
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail(errc::parse_error, "bad rational literal: " + std::string(text));
    }
}

std::string rational_str(const Rational& r) {
    return r.get_str();
}

Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    Rational n = b.norm();
    if (n == 0) fail(errc::invalid_parameter, "division by zero");
    Gaussian c = a * b.conj();
    return {c.re / n, c.im / n};
}

bool ext_less(const ExtValue& a, const ExtValue& b) {
    if (a.infinite || b.infinite) return !a.infinite && b.infinite;
    if (a.z.re != b.z.re) return a.z.re < b.z.re;
    return a.z.im < b.z.im;
}

ExtValue ext_parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s == "inf" || s == "Inf" || s == "INF") return ExtValue::inf();
    if (s.empty()) fail(errc::parse_error, "empty value literal");

    // split "re(+|-)im i"; any sign past position 0 separates the two parts
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-') {
            split = i;
            break;
        }
    auto imag_coeff = [&](std::string tok) -> Rational {
        if (tok.empty() || tok.back() != 'i')
            fail(errc::parse_error, "expected imaginary part in: " + std::string(text));
        tok.pop_back();
        if (tok.empty() || tok == "+") return Rational(1);
        if (tok == "-") return Rational(-1);
        return rational_parse(tok);
    };
    if (split == std::string::npos) {
        if (s.back() == 'i') return ExtValue::of(Gaussian(Rational(0), imag_coeff(s)));
        return ExtValue::of(rational_parse(s));
    }
    Rational re = rational_parse(s.substr(0, split));
    Rational im = imag_coeff(s.substr(split));
    return ExtValue::of(Gaussian(std::move(re), std::move(im)));
}

std::string ext_str(const ExtValue& v) {
    if (v.infinite) return "inf";
    if (v.z.is_real()) return rational_str(v.z.re);
    Rational a = abs(v.z.im);
    return rational_str(v.z.re) + (v.z.im < 0 ? "-" : "+") + rational_str(a) + "i";
}

namespace {

using Poly = std::vector<Rational>; // coefficient of X^i

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) {
    return static_cast<int>(p.size()) - 1; // -1 for the zero polynomial
}

Poly add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

Poly scale(Poly p, const Rational& c) {
    for (auto& x : p) x *= c;
    trim(p);
    return p;
}

Poly derivative(const Poly& p) {
    Poly out;
    for (size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rational(static_cast<long>(i)));
    trim(out);
    return out;
}

Gaussian eval_gaussian(const Poly& p, const Gaussian& z) {
    Gaussian acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + Gaussian(*it);
    return acc;
}

Rational eval_rational(const Poly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// exact division by (X - r); remainder must vanish
Poly deflate(const Poly& p, const Rational& r) {
    Poly q(p.size() - 1, Rational(0));
    Rational carry(0);
    for (int i = static_cast<int>(p.size()) - 1; i >= 1; --i) {
        carry = p[i] + carry * r;
        q[i - 1] = carry;
    }
    if (p[0] + carry * r != 0) fail(errc::internal_check, "deflate: nonzero remainder");
    trim(q);
    return q;
}

bool rational_sqrt(const Rational& r, Rational& out) {
    if (r < 0) return false;
    const mpz_class& num = r.get_num();
    const mpz_class& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    out = Rational(sn) / Rational(sd);
    return true;
}

} // namespace

RealRationalMap RealRationalMap::identity() {
    return RealRationalMap{};
}

RealRationalMap RealRationalMap::moebius(const Rational& a, const Rational& b, const Rational& c,
                                         const Rational& d) {
    if (a * d - b * c == 0) fail(errc::invalid_parameter, "moebius: ad - bc = 0");
    RealRationalMap m;
    m.num = {b, a};
    m.den = {d, c};
    trim(m.num);
    trim(m.den);
    return m;
}

RealRationalMap RealRationalMap::quadratic(const Rational& a, const Rational& b) {
    RealRationalMap m;
    m.num = {b, a, Rational(1)};
    m.den = {Rational(1)};
    return m;
}

int RealRationalMap::degree() const {
    return std::max(deg(num), deg(den));
}

ExtValue RealRationalMap::eval(const ExtValue& v) const {
    if (v.infinite) {
        int dn = deg(num), dd = deg(den);
        if (dn > dd) return ExtValue::inf();
        if (dn < dd) return ExtValue::of(Rational(0));
        return ExtValue::of(Gaussian(num.back() / den.back()));
    }
    Gaussian top = eval_gaussian(num, v.z);
    Gaussian bot = eval_gaussian(den, v.z);
    if (bot == Gaussian()) {
        if (top == Gaussian()) fail(errc::internal_check, "eval: common root of num and den");
        return ExtValue::inf();
    }
    return ExtValue::of(top / bot);
}

RealRationalMap RealRationalMap::after(const RealRationalMap& inner) const {
    const int d = degree();
    // this = P/Q evaluated at u/v: sum p_i u^i v^(d-i) over sum q_i u^i v^(d-i)
    auto push = [&](const Poly& coeffs) {
        Poly acc;
        Poly upow{Rational(1)};
        std::vector<Poly> us(d + 1);
        for (int i = 0; i <= d; ++i) {
            us[i] = upow;
            upow = mul(upow, inner.num);
        }
        Poly vpow{Rational(1)};
        for (int i = d; i >= 0; --i) {
            if (i < static_cast<int>(coeffs.size()) && coeffs[i] != 0)
                acc = add(acc, scale(mul(us[i], vpow), coeffs[i]));
            vpow = mul(vpow, inner.den);
        }
        return acc;
    };
    RealRationalMap out;
    out.num = push(num);
    out.den = push(den);
    if (out.den.empty()) fail(errc::invalid_parameter, "composition has zero denominator");
    return out;
}

std::vector<ExtValue> critical_values(const RealRationalMap& h) {
    Poly num = h.num, den = h.den;
    trim(num);
    trim(den);
    if (den.empty()) fail(errc::invalid_parameter, "denominator is identically zero");
    const int d = std::max(deg(num), deg(den));
    if (d > 4) fail(errc::degree_unsupported, "degree " + std::to_string(d) + " > 4");

    std::vector<ExtValue> values;
    auto record_point = [&](const ExtValue& pt) { values.push_back(h.eval(pt)); };

    Poly D = add(mul(derivative(num), den), scale(mul(num, derivative(den)), Rational(-1)));
    if (!D.empty()) {
        // roots of the derivative numerator
        if (D[0] == 0) {
            record_point(ExtValue::of(Rational(0)));
            while (!D.empty() && D[0] == 0) D.erase(D.begin());
        }
        while (deg(D) >= 1) {
            if (deg(D) == 1) {
                record_point(ExtValue::of(-D[0] / D[1]));
                break;
            }
            if (deg(D) == 2) {
                Rational disc = D[1] * D[1] - 4 * D[2] * D[0];
                Rational s;
                if (disc == 0) {
                    record_point(ExtValue::of(-D[1] / (2 * D[2])));
                } else if (disc > 0 && rational_sqrt(disc, s)) {
                    record_point(ExtValue::of((-D[1] + s) / (2 * D[2])));
                    record_point(ExtValue::of((-D[1] - s) / (2 * D[2])));
                } else if (disc < 0 && rational_sqrt(-disc, s)) {
                    Rational re = -D[1] / (2 * D[2]), im = s / (2 * D[2]);
                    record_point(ExtValue::of(Gaussian(re, im)));
                    record_point(ExtValue::of(Gaussian(re, -im)));
                } else {
                    fail(errc::degree_unsupported, "irrational critical point");
                }
                break;
            }
            // cubic or higher: look for small rational roots before giving up
            bool found = false;
            for (int q = 1; q <= 24 && !found; ++q)
                for (int p = -24 * q; p <= 24 * q && !found; ++p) {
                    Rational r(p, q);
                    r.canonicalize();
                    if (eval_rational(D, r) == 0) {
                        record_point(ExtValue::of(r));
                        D = deflate(D, r);
                        while (!D.empty() && D[0] == 0) {
                            record_point(ExtValue::of(Rational(0)));
                            D.erase(D.begin());
                        }
                        found = true;
                    }
                }
            if (!found) fail(errc::degree_unsupported, "critical points are not rational here");
        }
    }

    // local degree at infinity via X = 1/T
    if (d >= 1) {
        Poly nrev(d + 1, Rational(0)), drev(d + 1, Rational(0));
        for (int i = 0; i <= deg(num); ++i) nrev[d - i] = num[i];
        for (int i = 0; i <= deg(den); ++i) drev[d - i] = den[i];
        int e;
        if (drev[0] != 0) {
            Rational v = nrev[0] / drev[0];
            Poly w = add(nrev, scale(drev, -v));
            e = 0;
            while (e < static_cast<int>(w.size()) && w[e] == 0) ++e;
            if (e >= static_cast<int>(w.size())) e = d + 1; // constant map
        } else {
            e = 0;
            while (e < static_cast<int>(drev.size()) && drev[e] == 0) ++e;
        }
        if (e >= 2) record_point(ExtValue::inf());
    }

    std::sort(values.begin(), values.end(), ext_less);
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

RealRationalMap moebius_to_standard(const ExtValue& v1, const ExtValue& v2, const ExtValue& v3) {
    const ExtValue* vs[3] = {&v1, &v2, &v3};
    for (const auto* v : vs)
        if (!v->is_real_or_inf()) fail(errc::not_real, "value is not real: " + ext_str(*v));
    if (v1 == v2 || v1 == v3 || v2 == v3)
        fail(errc::not_distinct, "values must be pairwise distinct");

    if (v1.infinite) {
        // z -> (v2 - v3) / (z - v3)
        return RealRationalMap::moebius(Rational(0), v2.z.re - v3.z.re, Rational(1), -v3.z.re);
    }
    if (v2.infinite) {
        // z -> (z - v1) / (z - v3)
        return RealRationalMap::moebius(Rational(1), -v1.z.re, Rational(1), -v3.z.re);
    }
    if (v3.infinite) {
        // z -> (z - v1) / (v2 - v1)
        return RealRationalMap::moebius(Rational(1), -v1.z.re, Rational(0), v2.z.re - v1.z.re);
    }
    Rational a = v2.z.re - v3.z.re;
    Rational c = v2.z.re - v1.z.re;
    return RealRationalMap::moebius(a, -v1.z.re * a, c, -v3.z.re * c);
}

RealRationalMap fold_quadratic(const Gaussian& p) {
    if (p.is_real()) fail(errc::real_input, "fold_quadratic requires a non-real value");
    return RealRationalMap::quadratic(-2 * p.re, p.norm());
}

CriticalSet CriticalSet::of(std::vector<ExtValue> vals) {
    std::sort(vals.begin(), vals.end(), ext_less);
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    if (vals.size() > 3)
        fail(errc::invalid_parameter, "a critical set holds at most 3 values");
    for (const auto& v : vals) {
        if (v.infinite || v.z.is_real()) continue;
        ExtValue c = ExtValue::of(v.z.conj());
        if (std::find(vals.begin(), vals.end(), c) == vals.end())
            fail(errc::invalid_parameter,
                 "critical set is not closed under conjugation: missing " + ext_str(c));
    }
    return CriticalSet{std::move(vals)};
}

namespace {

bool is_standard(const ExtValue& v) {
    return v.infinite || (v.z.is_real() && (v.z.re == 0 || v.z.re == 1));
}

} // namespace

NormalizeResult normalize(const CriticalSet& cs) {
    int pairs = 0;
    for (const auto& v : cs.values)
        if (!v.infinite && v.z.im > 0) ++pairs;
    if (pairs > 1)
        fail(errc::too_many_nonreal_pairs, "more than one conjugate pair of critical values");

    NormalizeResult result;
    auto& cert = result.certificate;

    if (pairs == 0) {
        // all real or inf: one Moebius map, padded deterministically
        std::vector<ExtValue> sources = cs.values; // already sorted, finite first
        const ExtValue targets[3] = {ExtValue::of(Rational(0)), ExtValue::of(Rational(1)),
                                     ExtValue::inf()};
        auto used = [&](const ExtValue& v) {
            return std::find(sources.begin(), sources.end(), v) != sources.end();
        };
        size_t pinned = sources.size();
        while (sources.size() < 3) {
            const ExtValue& target = targets[sources.size()];
            ExtValue pick = target;
            if (used(pick)) {
                for (long k = 0;; ++k) {
                    pick = ExtValue::of(Rational(k));
                    if (!used(pick)) break;
                }
            }
            cert.padding.emplace_back(pick, target);
            sources.push_back(pick);
        }
        result.h = moebius_to_standard(sources[0], sources[1], sources[2]);
        cert.steps.push_back("moebius(" + ext_str(sources[0]) + "," + ext_str(sources[1]) + "," +
                             ext_str(sources[2]) + " -> 0,1,inf)");
        (void)pinned;
    } else {
        Gaussian p;
        const ExtValue* q = nullptr;
        for (const auto& v : cs.values) {
            if (!v.infinite && v.z.im > 0)
                p = v.z;
            else if (v.infinite || v.z.is_real())
                q = &v;
        }
        result.h = RealRationalMap::identity();
        if (q && !q->infinite) {
            // send the real critical value to infinity first
            RealRationalMap m1 =
                RealRationalMap::moebius(Rational(0), Rational(1), Rational(1), -q->z.re);
            result.h = m1;
            cert.steps.push_back("moebius(z -> 1/(z-" + rational_str(q->z.re) + "))");
            ExtValue moved = m1.eval(ExtValue::of(p));
            p = moved.z;
        }
        RealRationalMap r = fold_quadratic(p);
        cert.steps.push_back("fold(X^2+" + rational_str(-2 * p.re) + "X+" + rational_str(p.norm()) +
                             ")");
        result.h = r.after(result.h);
        Rational c = p.norm() - p.re * p.re; // b - a^2/4 = Im(p)^2 > 0
        if (c != 1) {
            RealRationalMap m2 = RealRationalMap::moebius(Rational(1), Rational(0), Rational(0), c);
            cert.steps.push_back("moebius(z -> z / (" + rational_str(c) + "))");
            result.h = m2.after(result.h);
        }
    }

    for (const auto& v : cs.values) {
        ExtValue image = result.h.eval(v);
        if (!is_standard(image))
            fail(errc::internal_check, "normalize image " + ext_str(image) + " not in {0,1,inf}");
        cert.images.emplace_back(v, image);
    }
    cert.own_critical_values = critical_values(result.h);
    for (const auto& v : cert.own_critical_values)
        if (!is_standard(v))
            fail(errc::internal_check, "normalize critical value " + ext_str(v) + " not in {0,1,inf}");
    return result;
}

Rational j_invariant(const Rational& g2, const Rational& g3) {
    Rational cube = g2 * g2 * g2;
    Rational denom = cube - 27 * g3 * g3;
    if (denom == 0) fail(errc::singular_curve, "g2^3 - 27 g3^2 = 0");
    return cube / denom;
}

} // namespace km
