#pragma once

// The Grothendieck group in the basis {[O], [S], [S_{i,j}] : 1 <= j <= a_i-1}
// together with the catalogued sheaf objects (line bundles, generic torsion,
// tube torsion) and the line-bundle twist action.
//
// [S_{i,0}] is not a basis element; it is eliminated through the tube
// relation [S] = sum_{j mod a_i} [S_{i,j}].

#include "orbiline/lattice.hpp"

#include <string>
#include <variant>
#include <vector>

namespace orbiline {

/// Integer vector over the K0 basis. Tube coefficients are flattened:
/// for tube i (1-based) the entries j = 1..a_i-1 sit at
/// tube[offset_i + j - 1] with offset_i = sum_{k<i} (a_k - 1).
struct K0Class {
    Int coeff_O;
    Int coeff_S;
    std::vector<Int> tube;

    bool operator==(K0Class const&) const = default;
};

inline std::size_t k0_dim(WeightSpec const& spec) {
    std::size_t n = 2;
    for (int a : spec.weights()) n += static_cast<std::size_t>(a - 1);
    return n;
}

inline std::size_t tube_offset(WeightSpec const& spec, int i) {
    std::size_t off = 0;
    for (int k = 1; k < i; ++k) off += static_cast<std::size_t>(spec.weight(k - 1) - 1);
    return off;
}

inline K0Class k0_zero(WeightSpec const& spec) {
    return {Int(0), Int(0), std::vector<Int>(k0_dim(spec) - 2, Int(0))};
}

inline K0Class k0_add(K0Class const& x, K0Class const& y) {
    if (x.tube.size() != y.tube.size()) throw std::invalid_argument("k0_add: size mismatch");
    K0Class out{x.coeff_O + y.coeff_O, x.coeff_S + y.coeff_S, x.tube};
    for (std::size_t k = 0; k < out.tube.size(); ++k) out.tube[k] += y.tube[k];
    return out;
}

inline K0Class k0_sub(K0Class const& x, K0Class const& y) {
    if (x.tube.size() != y.tube.size()) throw std::invalid_argument("k0_sub: size mismatch");
    K0Class out{x.coeff_O - y.coeff_O, x.coeff_S - y.coeff_S, x.tube};
    for (std::size_t k = 0; k < out.tube.size(); ++k) out.tube[k] -= y.tube[k];
    return out;
}

/// Adds mult * [S_{i,j}] (i 1-based, j any residue mod a_i), eliminating
/// j = 0 through the tube relation.
inline void k0_add_simple(WeightSpec const& spec, K0Class& cls, int i, int j, Int const& mult) {
    int a = spec.weight(static_cast<std::size_t>(i - 1));
    int jj = ((j % a) + a) % a;
    if (jj == 0) {
        cls.coeff_S += mult;
        std::size_t off = tube_offset(spec, i);
        for (int k = 1; k < a; ++k) cls.tube[off + static_cast<std::size_t>(k - 1)] -= mult;
    } else {
        cls.tube[tube_offset(spec, i) + static_cast<std::size_t>(jj - 1)] += mult;
    }
}

/// [O(x)] = [O] + l*[S] + sum_i sum_{j=0}^{l_i - 1} [S_{i,j}].
/// The j-sum is exclusive: iterating the twist sequence
/// 0 -> O(y) -> O(y + x_i) -> S_{i, l_i(y)} -> 0 from y = 0 picks up exactly
/// the factors j = 0, ..., l_i - 1.
inline K0Class class_of_line(WeightSpec const& spec, LVec const& x) {
    K0Class cls = k0_zero(spec);
    cls.coeff_O = 1;
    cls.coeff_S = x.l;
    for (std::size_t i = 0; i < spec.count(); ++i)
        for (int j = 0; j < x.parts[i]; ++j)
            k0_add_simple(spec, cls, static_cast<int>(i + 1), j, Int(1));
    return cls;
}

struct LineBundle {
    LVec x;
    bool operator==(LineBundle const&) const = default;
};

/// Length-n uniserial torsion at an unmarked point; all composition factors
/// are the generic simple.
struct GenericTorsion {
    std::string point = "*";
    int length = 1;
    bool operator==(GenericTorsion const&) const = default;
};

/// Length-n uniserial torsion in the tube at the i-th marked point
/// (i 1-based). j is the socle index; the composition factors ascend
/// S_{i,j}, S_{i,j+1}, ..., S_{i,j+n-1} (indices mod a_i), so the top is
/// S_{i,j+n-1}.
struct TubeTorsion {
    int i = 1;
    int j = 0;
    int length = 1;
    bool operator==(TubeTorsion const&) const = default;
};

/// Indecomposable bundle of rank >= 2: recognized but not catalogued.
/// Dimension and stability queries involving it report Unknown rather than
/// guessing; class and twist are undefined.
struct HigherRankBundle {
    int rank = 2;
    bool operator==(HigherRankBundle const&) const = default;
};

using SheafObject = std::variant<LineBundle, GenericTorsion, TubeTorsion, HigherRankBundle>;

inline bool is_torsion(SheafObject const& obj) {
    return std::holds_alternative<GenericTorsion>(obj) || std::holds_alternative<TubeTorsion>(obj);
}

inline void validate_object(WeightSpec const& spec, SheafObject const& obj) {
    if (auto const* line = std::get_if<LineBundle>(&obj)) {
        if (line->x.parts.size() != spec.count())
            throw std::invalid_argument("SheafObject: line bundle exponent has wrong rank");
    } else if (auto const* gt = std::get_if<GenericTorsion>(&obj)) {
        if (gt->length < 1) throw std::invalid_argument("SheafObject: torsion length must be >= 1");
    } else if (auto const* tt = std::get_if<TubeTorsion>(&obj)) {
        if (tt->i < 1 || tt->i > static_cast<int>(spec.count()))
            throw std::invalid_argument("SheafObject: tube index out of range");
        int a = spec.weight(static_cast<std::size_t>(tt->i - 1));
        if (tt->j < 0 || tt->j >= a)
            throw std::invalid_argument("SheafObject: socle index out of range");
        if (tt->length < 1) throw std::invalid_argument("SheafObject: torsion length must be >= 1");
    } else if (auto const* hb = std::get_if<HigherRankBundle>(&obj)) {
        if (hb->rank < 2) throw std::invalid_argument("SheafObject: stub rank must be >= 2");
    }
}

inline K0Class class_of(WeightSpec const& spec, SheafObject const& obj) {
    validate_object(spec, obj);
    if (auto const* line = std::get_if<LineBundle>(&obj)) return class_of_line(spec, line->x);
    if (auto const* gt = std::get_if<GenericTorsion>(&obj)) {
        K0Class cls = k0_zero(spec);
        cls.coeff_S = gt->length;
        return cls;
    }
    if (auto const* tt = std::get_if<TubeTorsion>(&obj)) {
        K0Class cls = k0_zero(spec);
        for (int k = 0; k < tt->length; ++k)
            k0_add_simple(spec, cls, tt->i, tt->j + k, Int(1));
        return cls;
    }
    throw std::invalid_argument("class_of: object is outside the catalog");
}

inline Int rank(K0Class const& cls) { return cls.coeff_O; }

inline Int degree(WeightSpec const& spec, K0Class const& cls) {
    Int d = spec.lcm() * cls.coeff_S;
    for (std::size_t i = 0; i < spec.count(); ++i) {
        Int per = spec.lcm() / spec.weight(i);
        std::size_t off = tube_offset(spec, static_cast<int>(i + 1));
        for (int j = 1; j < spec.weight(i); ++j)
            d += per * cls.tube[off + static_cast<std::size_t>(j - 1)];
    }
    return d;
}

/// - tensor O(y): lines translate, generic torsion is fixed, tube torsion
/// rotates its socle by the y-coordinate of its tube.
inline SheafObject twist(WeightSpec const& spec, SheafObject const& obj, LVec const& y) {
    validate_object(spec, obj);
    if (auto const* line = std::get_if<LineBundle>(&obj))
        return LineBundle{spec.add(line->x, y)};
    if (std::holds_alternative<GenericTorsion>(obj)) return obj;
    if (auto const* tt = std::get_if<TubeTorsion>(&obj)) {
        int a = spec.weight(static_cast<std::size_t>(tt->i - 1));
        int j = (tt->j + y.parts[static_cast<std::size_t>(tt->i - 1)]) % a;
        return TubeTorsion{tt->i, j, tt->length};
    }
    throw std::invalid_argument("twist: object is outside the catalog");
}

/// Object literals: O(<lvec>), S[*], S[*;n], S[i,j], S[i,j;n].
inline std::string object_literal(WeightSpec const& spec, SheafObject const& obj) {
    if (auto const* line = std::get_if<LineBundle>(&obj))
        return "O(" + lvec_str(spec, line->x) + ")";
    if (auto const* gt = std::get_if<GenericTorsion>(&obj)) {
        std::string out = "S[" + gt->point;
        if (gt->length != 1) out += ";" + std::to_string(gt->length);
        return out + "]";
    }
    if (auto const* tt = std::get_if<TubeTorsion>(&obj)) {
        std::string out = "S[" + std::to_string(tt->i) + "," + std::to_string(tt->j);
        if (tt->length != 1) out += ";" + std::to_string(tt->length);
        return out + "]";
    }
    return "B[rank=" + std::to_string(std::get<HigherRankBundle>(obj).rank) + "]";
}

inline SheafObject parse_object(WeightSpec const& spec, std::string_view text) {
    auto fail = [&](std::string const& why) {
        throw std::invalid_argument("parse_object: " + why + " in '" + std::string(text) + "'");
    };
    std::string_view body = text;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front())))
        body.remove_prefix(1);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
        body.remove_suffix(1);
    if (body.size() >= 3 && body.front() == 'O') {
        if (body[1] != '(' || body.back() != ')') fail("expected O(<lvec>)");
        return LineBundle{parse_lvec(spec, body.substr(2, body.size() - 3))};
    }
    if (body.size() >= 4 && body.front() == 'S' && body[1] == '[' && body.back() == ']') {
        std::string inner(body.substr(2, body.size() - 3));
        int length = 1;
        if (auto semi = inner.find(';'); semi != std::string::npos) {
            try {
                std::size_t used = 0;
                length = std::stoi(inner.substr(semi + 1), &used);
                if (used != inner.size() - semi - 1) fail("malformed length");
            } catch (std::invalid_argument const&) {
                fail("malformed length");
            } catch (std::out_of_range const&) {
                fail("malformed length");
            }
            if (length < 1) fail("length must be >= 1");
            inner.resize(semi);
        }
        if (inner == "*") return GenericTorsion{"*", length};
        auto comma = inner.find(',');
        if (comma == std::string::npos) fail("expected S[i,j] or S[*]");
        int i = 0, j = 0;
        try {
            std::size_t ui = 0, uj = 0;
            i = std::stoi(inner.substr(0, comma), &ui);
            j = std::stoi(inner.substr(comma + 1), &uj);
            if (ui != comma || uj != inner.size() - comma - 1) throw std::invalid_argument("");
        } catch (std::exception const&) {
            fail("malformed tube indices");
        }
        SheafObject obj = TubeTorsion{i, j, length};
        validate_object(spec, obj);
        return obj;
    }
    fail("unrecognized object literal");
    return LineBundle{spec.zero()};  // unreachable
}

/// Class rendered over the basis, e.g. "1*[O]+1*[S]-1*[S[1,1]]".
inline std::string class_str(WeightSpec const& spec, K0Class const& cls) {
    auto term = [](std::string& out, Int const& coeff, std::string const& label) {
        if (coeff == 0) return;
        if (coeff.sign() > 0 && !out.empty()) out += "+";
        out += coeff.str() + "*" + label;
    };
    std::string out;
    term(out, cls.coeff_O, "[O]");
    term(out, cls.coeff_S, "[S]");
    for (std::size_t i = 0; i < spec.count(); ++i) {
        std::size_t off = tube_offset(spec, static_cast<int>(i + 1));
        for (int j = 1; j < spec.weight(i); ++j)
            term(out, cls.tube[off + static_cast<std::size_t>(j - 1)],
                 "[S[" + std::to_string(i + 1) + "," + std::to_string(j) + "]]");
    }
    return out.empty() ? "0" : out;
}

}  // namespace orbiline
