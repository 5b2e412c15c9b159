#pragma once

// The weight lattice L(A): rank-1 abelian group generated by x1..xr modulo
// a_i*x_i = a_j*x_j, with normal forms, degree, canonical and dualizing
// elements, the effectivity order and the Euler-characteristic trichotomy.
//
// Point labels (lambda values) are stored for presentation only. Every
// quantity computed downstream -- graded dimensions, K-classes, charges --
// is independent of the label values, so no computation reads them.

#include "orbiline/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <vector>

namespace orbiline {

enum class OrbifoldType { Domestic, Tubular, Wild };

inline char const* type_name(OrbifoldType t) {
    switch (t) {
        case OrbifoldType::Domestic: return "Domestic";
        case OrbifoldType::Tubular: return "Tubular";
        case OrbifoldType::Wild: return "Wild";
    }
    return "?";
}

/// Element of L(A) in normal form: l*c + sum parts[i]*x_{i+1} with
/// 0 <= parts[i] < a_{i+1}. Weight-1 indices always carry parts[i] = 0.
struct LVec {
    Int l;
    std::vector<int> parts;

    bool operator==(LVec const&) const = default;
};

class WeightSpec {
   public:
    explicit WeightSpec(std::vector<int> weights, std::vector<std::string> labels = {})
        : weights_(std::move(weights)), labels_(std::move(labels)) {
        if (weights_.size() < 3) throw std::invalid_argument("WeightSpec: need r >= 3 weights");
        for (int a : weights_)
            if (a < 1) throw std::invalid_argument("WeightSpec: weights must be positive");
        if (labels_.empty()) {
            labels_ = {"inf", "0", "1"};
            for (std::size_t i = 3; i < weights_.size(); ++i)
                labels_.push_back("l" + std::to_string(i + 1));
        }
        if (labels_.size() != weights_.size())
            throw std::invalid_argument("WeightSpec: label count must match weight count");
        for (std::size_t i = 0; i < labels_.size(); ++i)
            for (std::size_t k = i + 1; k < labels_.size(); ++k)
                if (labels_[i] == labels_[k])
                    throw std::invalid_argument("WeightSpec: labels must be pairwise distinct");
        lcm_ = 1;
        for (int a : weights_) lcm_ = boost::multiprecision::lcm(lcm_, Int(a));
    }

    std::size_t count() const { return weights_.size(); }
    int weight(std::size_t idx) const { return weights_[idx]; }
    std::vector<int> const& weights() const { return weights_; }
    std::vector<std::string> const& labels() const { return labels_; }
    /// a = lcm(a_1, ..., a_r)
    Int const& lcm() const { return lcm_; }

    bool operator==(WeightSpec const& o) const { return weights_ == o.weights_; }

    LVec zero() const { return {Int(0), std::vector<int>(count(), 0)}; }

    /// The canonical element c = a_i * x_i.
    LVec canonical() const { return {Int(1), std::vector<int>(count(), 0)}; }

    /// The dualizing element (r-2)*c - sum x_i. For all-weights >= 2 its
    /// normal form is l = -2, parts = (a_i - 1).
    LVec omega() const {
        return normalize(Int(static_cast<long long>(count()) - 2),
                         std::vector<Int>(count(), Int(-1)));
    }

    /// Unique normal form of c_mult*c + sum raw[i]*x_{i+1}: Euclidean
    /// division in each coordinate with carries into the c coefficient;
    /// weight-1 coordinates carry entirely (x_i = c when a_i = 1).
    LVec normalize(Int c_mult, std::vector<Int> const& raw) const {
        if (raw.size() != count())
            throw std::invalid_argument("normalize: expected " + std::to_string(count()) +
                                        " coefficients");
        LVec out{std::move(c_mult), std::vector<int>(count(), 0)};
        for (std::size_t i = 0; i < count(); ++i) {
            Int a(weights_[i]);
            if (weights_[i] == 1) {
                out.l += raw[i];
                continue;
            }
            Int q = raw[i] / a;
            Int rem = raw[i] - q * a;
            if (rem < 0) {
                rem += a;
                q -= 1;
            }
            out.parts[i] = rem.convert_to<int>();
            out.l += q;
        }
        return out;
    }

    LVec normalize(long long c_mult, std::vector<long long> const& raw) const {
        std::vector<Int> r(raw.begin(), raw.end());
        return normalize(Int(c_mult), r);
    }

    /// x_{i+1} as an LVec (0-based idx).
    LVec generator(std::size_t idx) const {
        std::vector<Int> raw(count(), Int(0));
        raw.at(idx) = 1;
        return normalize(Int(0), raw);
    }

    LVec add(LVec const& x, LVec const& y) const {
        check(x);
        check(y);
        std::vector<Int> raw(count());
        for (std::size_t i = 0; i < count(); ++i) raw[i] = Int(x.parts[i]) + y.parts[i];
        return normalize(x.l + y.l, raw);
    }

    LVec neg(LVec const& x) const {
        check(x);
        std::vector<Int> raw(count());
        for (std::size_t i = 0; i < count(); ++i) raw[i] = -Int(x.parts[i]);
        return normalize(-x.l, raw);
    }

    LVec sub(LVec const& x, LVec const& y) const { return add(x, neg(y)); }

    /// deg(x) = l*a + sum parts[i] * a/a_i; a group homomorphism to Z.
    Int deg(LVec const& x) const {
        check(x);
        Int d = x.l * lcm_;
        for (std::size_t i = 0; i < count(); ++i) d += Int(x.parts[i]) * (lcm_ / weights_[i]);
        return d;
    }

    /// chi = 2 + sum (1/a_i - 1), the Euler characteristic.
    Rat euler_char() const {
        Rat chi(2);
        for (int a : weights_) chi += make_rat(1, a) - 1;
        return chi;
    }

    /// Domestic / tubular / wild by the sign of chi.
    OrbifoldType classify() const {
        int s = euler_char().sign();
        if (s > 0) return OrbifoldType::Domestic;
        if (s == 0) return OrbifoldType::Tubular;
        return OrbifoldType::Wild;
    }

    /// x >= 0. Parts are nonnegative by normal form, so only l decides.
    bool is_effective(LVec const& x) const {
        check(x);
        return x.l >= 0;
    }

    bool leq(LVec const& x, LVec const& y) const { return is_effective(sub(y, x)); }

   private:
    void check(LVec const& x) const {
        if (x.parts.size() != count()) throw std::invalid_argument("LVec: wrong coordinate count");
        for (std::size_t i = 0; i < count(); ++i)
            if (x.parts[i] < 0 || x.parts[i] >= weights_[i])
                throw std::invalid_argument("LVec: coordinate out of range");
    }

    std::vector<int> weights_;
    std::vector<std::string> labels_;
    Int lcm_;
};

/// Text form "l*c+l1*x1+...+lr*xr", e.g. "-2*c+1*x1+2*x2+6*x3".
inline std::string lvec_str(WeightSpec const& spec, LVec const& x) {
    std::string out = x.l.str() + "*c";
    for (std::size_t i = 0; i < spec.count(); ++i)
        out += "+" + std::to_string(x.parts[i]) + "*x" + std::to_string(i + 1);
    return out;
}

/// Parses a sum of terms k*c / k*xN (bare c / xN allowed, any order, any
/// integer coefficients) and returns the normal form.
inline LVec parse_lvec(WeightSpec const& spec, std::string_view text) {
    Int c_mult(0);
    std::vector<Int> raw(spec.count(), Int(0));
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](std::string const& why) {
        throw std::invalid_argument("parse_lvec: " + why + " in '" + std::string(text) + "'");
    };
    skip_ws();
    if (pos == text.size()) fail("empty literal");
    bool first = true;
    while (pos < text.size()) {
        skip_ws();
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        skip_ws();
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        Int coeff = digits.empty() ? Int(1) : Int(digits);
        if (sign < 0) coeff = -coeff;
        skip_ws();
        if (!digits.empty()) {
            if (pos == text.size() || text[pos] != '*') fail("expected '*' after coefficient");
            ++pos;
            skip_ws();
        }
        if (pos == text.size()) fail("missing generator");
        if (text[pos] == 'c') {
            ++pos;
            c_mult += coeff;
        } else if (text[pos] == 'x') {
            ++pos;
            std::string idx;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                idx += text[pos++];
            if (idx.empty()) fail("missing generator index");
            std::size_t i = std::stoul(idx);
            if (i < 1 || i > spec.count()) fail("generator index out of range");
            raw[i - 1] += coeff;
        } else {
            fail("unknown generator");
        }
        skip_ws();
    }
    return spec.normalize(std::move(c_mult), raw);
}

/// Comma list "2,3,7" -> weight tuple (user order preserved).
inline WeightSpec parse_weights(std::string_view text) {
    std::vector<int> w;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        try {
            std::size_t used = 0;
            int v = std::stoi(std::string(piece), &used);
            if (used != piece.size()) throw std::invalid_argument("trailing junk");
            w.push_back(v);
        } catch (std::exception const&) {
            throw std::invalid_argument("parse_weights: malformed weight list '" +
                                        std::string(text) + "'");
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return WeightSpec(std::move(w));
}

}  // namespace orbiline
