#pragma once

// Exact rational / Gaussian-rational arithmetic and exact angular predicates.
// Phases are never stored as floating-point numbers: a phase is an integer
// number of half-turns plus a direction vector, and all comparisons reduce to
// sign tests on integer cross products.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orbiline {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// num/den with canonical sign (den > 0), reduced to lowest terms.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

/// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input.
inline Rat parse_rat(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("parse_rat: empty string");
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rat(Int(std::string(text)));
        Int num(std::string(text.substr(0, slash)));
        Int den(std::string(text.substr(slash + 1)));
        if (den == 0) throw std::invalid_argument("parse_rat: zero denominator");
        return make_rat(std::move(num), std::move(den));
    } catch (std::runtime_error const&) {
        throw std::invalid_argument("parse_rat: malformed rational '" + std::string(text) + "'");
    }
}

inline std::string rat_str(Rat const& q) { return q.str(); }

inline double rat_float(Rat const& q) { return q.convert_to<double>(); }

/// Element of Q(i).
struct GaussRat {
    Rat re;
    Rat im;

    bool operator==(GaussRat const&) const = default;
};

inline GaussRat operator+(GaussRat const& a, GaussRat const& b) { return {a.re + b.re, a.im + b.im}; }
inline GaussRat operator-(GaussRat const& a, GaussRat const& b) { return {a.re - b.re, a.im - b.im}; }
inline GaussRat operator-(GaussRat const& a) { return {-a.re, -a.im}; }
inline GaussRat operator*(GaussRat const& a, GaussRat const& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline GaussRat operator*(Rat const& s, GaussRat const& a) { return {s * a.re, s * a.im}; }

inline GaussRat conj(GaussRat const& a) { return {a.re, -a.im}; }
inline bool is_zero(GaussRat const& a) { return a.re == 0 && a.im == 0; }

/// |z|^2, exact. The mass m(E) itself is generically irrational; only its
/// square is exposed.
inline Rat norm2(GaussRat const& a) { return a.re * a.re + a.im * a.im; }

namespace detail {

// Rays and open quadrants of C*, indexed in increasing principal argument
// over (-pi, pi]:
//   0 (-pi,-pi/2)   1 -pi/2   2 (-pi/2,0)   3 0
//   4 (0,pi/2)      5 pi/2    6 (pi/2,pi)   7 pi
inline int arg_region(GaussRat const& w) {
    int sr = w.re.sign();
    int si = w.im.sign();
    if (si < 0) return sr < 0 ? 0 : (sr == 0 ? 1 : 2);
    if (si == 0) return sr > 0 ? 3 : 7;
    return sr > 0 ? 4 : (sr == 0 ? 5 : 6);
}

inline Rat cross(GaussRat const& a, GaussRat const& b) { return a.re * b.im - a.im * b.re; }

}  // namespace detail

/// Compares principal arguments in (-pi, pi], exactly. Quadrant
/// classification first; within an open quadrant the angle between the two
/// vectors is below pi/2, so the sign of the cross product decides.
inline std::strong_ordering arg_compare(GaussRat const& w1, GaussRat const& w2) {
    if (is_zero(w1) || is_zero(w2)) throw std::domain_error("arg_compare: zero argument");
    int r1 = detail::arg_region(w1);
    int r2 = detail::arg_region(w2);
    if (r1 != r2) return r1 <=> r2;
    if (r1 == 1 || r1 == 3 || r1 == 5 || r1 == 7) return std::strong_ordering::equal;
    int s = detail::cross(w1, w2).sign();
    if (s > 0) return std::strong_ordering::less;
    if (s < 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

/// Exact point of R written as offset + arg(dir)/pi with arg(dir) in (0, pi],
/// i.e. the fractional part lies in (0, 1]. The integer offset carries shift
/// actions; the direction carries the angle.
struct Phase {
    long long offset = 0;
    GaussRat dir;
};

/// Canonical form: rotate dir by pi (and decrement offset) until
/// arg(dir) lands in (0, pi]. Throws on a zero direction.
inline Phase make_phase(long long offset, GaussRat dir) {
    if (is_zero(dir)) throw std::domain_error("make_phase: zero direction");
    int si = dir.im.sign();
    if (si > 0 || (si == 0 && dir.re.sign() < 0)) return {offset, std::move(dir)};
    return {offset - 1, -dir};
}

inline std::strong_ordering phase_compare(Phase const& p1, Phase const& p2) {
    if (p1.offset != p2.offset) return p1.offset <=> p2.offset;
    return arg_compare(p1.dir, p2.dir);
}

inline bool phase_eq(Phase const& p1, Phase const& p2) {
    return phase_compare(p1, p2) == std::strong_ordering::equal;
}

/// The phase difference b - a, again as an exact Phase. Both fractional
/// parts lie in (0, 1], so the difference of arguments is in (-pi, pi) and
/// the product b.dir * conj(a.dir) represents it faithfully.
inline Phase phase_sub(Phase const& b, Phase const& a) {
    return make_phase(b.offset - a.offset, b.dir * conj(a.dir));
}

inline Phase phase_shift(Phase const& p, long long k) { return {p.offset + k, p.dir}; }

/// The phase with value exactly 1 (torsion slice).
inline Phase phase_one() { return {0, GaussRat{Rat(-1), Rat(0)}}; }

/// Float rendering, display only; never used for decisions.
inline double phase_float(Phase const& p) {
    double y = rat_float(p.dir.im);
    double x = rat_float(p.dir.re);
    return static_cast<double>(p.offset) + std::atan2(y, x) / std::numbers::pi;
}

/// Exact rational value of a phase when the direction lies on an axis or a
/// diagonal (fraction 1/4, 1/2, 3/4 or 1); nullopt otherwise.
inline std::optional<Rat> phase_exact_rational(Phase const& p) {
    Rat off(p.offset);
    if (p.dir.im == 0) return off + 1;               // arg = pi
    if (p.dir.re == 0) return off + make_rat(1, 2);  // arg = pi/2
    if (p.dir.re == p.dir.im) return off + make_rat(1, 4);
    if (p.dir.re == -p.dir.im) return off + make_rat(3, 4);
    return std::nullopt;
}

}  // namespace orbiline
