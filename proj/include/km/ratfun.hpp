#ifndef KM_RATFUN_HPP
#define KM_RATFUN_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "km/errors.hpp"

namespace km {

/// Exact rational arithmetic; no floating point appears anywhere in this
/// module, so certificates are proofs.
using Rational = mpq_class;

Rational rational_parse(std::string_view text); // "p/q", "-3", "7"
std::string rational_str(const Rational& r);    // reduced; "p" or "p/q"

struct Gaussian {
    Rational re, im;

    Gaussian() : re(0), im(0) {}
    Gaussian(Rational r) : re(std::move(r)), im(0) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return im == 0; }
    Gaussian conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
    friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b);
    friend bool operator==(const Gaussian& a, const Gaussian& b) = default;
};

/// Gaussian rational or the point at infinity.
struct ExtValue {
    bool infinite = false;
    Gaussian z;

    static ExtValue inf() { return ExtValue{true, {}}; }
    static ExtValue of(Gaussian g) { return ExtValue{false, std::move(g)}; }
    static ExtValue of(Rational r) { return ExtValue{false, Gaussian(std::move(r))}; }

    bool is_real_or_inf() const { return infinite || z.is_real(); }
    friend bool operator==(const ExtValue& a, const ExtValue& b) {
        return a.infinite == b.infinite && (a.infinite || a.z == b.z);
    }
};

/// Total order used for deterministic output: finite values by (re, im),
/// infinity last.
bool ext_less(const ExtValue& a, const ExtValue& b);

ExtValue ext_parse(std::string_view text); // "inf" | "p/q" | "p/q+r/si" | "i" | "2-3i" ...
std::string ext_str(const ExtValue& v);

/// Rational function with exact real-rational coefficients, num/den kept
/// coprime by the construction paths used here; degree <= 4 after composition.
struct RealRationalMap {
    std::vector<Rational> num{Rational(0), Rational(1)}; // coefficient of X^i
    std::vector<Rational> den{Rational(1)};

    static RealRationalMap identity();
    static RealRationalMap moebius(const Rational& a, const Rational& b, const Rational& c,
                                   const Rational& d); // (aX+b)/(cX+d), ad != bc
    static RealRationalMap quadratic(const Rational& a, const Rational& b); // X^2 + aX + b

    int degree() const;
    ExtValue eval(const ExtValue& v) const;
    RealRationalMap after(const RealRationalMap& inner) const; // this o inner

    friend bool operator==(const RealRationalMap&, const RealRationalMap&) = default;
};

/// Exact critical values: images of the rational (or conjugate Gaussian pair)
/// roots of the derivative numerator, plus the value at infinity when the
/// local degree there is >= 2. Throws DegreeUnsupported when degree > 4 or a
/// critical point falls outside the solvable range occurring here.
std::vector<ExtValue> critical_values(const RealRationalMap& h);

/// Degree-1 real map sending (v1, v2, v3) to (0, 1, inf).
RealRationalMap moebius_to_standard(const ExtValue& v1, const ExtValue& v2, const ExtValue& v3);

/// r = X^2 + aX + b with a = -2 Re(P), b = |P|^2; r(P) = r(conj P) = 0 and
/// the critical values of r are {b - a^2/4, inf}.
RealRationalMap fold_quadratic(const Gaussian& p);

/// Up to 3 values closed under complex conjugation.
struct CriticalSet {
    std::vector<ExtValue> values; // sorted by ext_less, unique

    static CriticalSet of(std::vector<ExtValue> vals);
};

struct NormalizeCertificate {
    std::vector<std::pair<ExtValue, ExtValue>> images;  // input -> h(input)
    std::vector<ExtValue> own_critical_values;          // of h itself
    std::vector<std::pair<ExtValue, ExtValue>> padding; // extra pinned source -> target
    std::vector<std::string> steps;                     // composition summary
};

struct NormalizeResult {
    RealRationalMap h;
    NormalizeCertificate certificate;
};

/// Composite of at most one real quadratic and two real Moebius maps taking
/// the critical set into {0,1,inf}; every certificate entry is verified by
/// exact arithmetic before returning.
NormalizeResult normalize(const CriticalSet& cs);

/// j = g2^3 / (g2^3 - 27 g3^2), normalized so j = 0 and j = 1 at the special
/// curves.
Rational j_invariant(const Rational& g2, const Rational& g3);

} // namespace km

#endif
