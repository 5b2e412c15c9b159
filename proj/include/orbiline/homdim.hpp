#pragma once

// Dimension oracles for Hom and Ext^1 between catalogued sheaves. The
// category is hereditary, so these two rows carry all derived Homs between
// heart objects; Ext^1 is routed through Serre duality,
// ext1(E, F) = hom(F, E tensor O(omega)).
//
// Pairs involving an out-of-catalog object return Unknown (nullopt), never a
// guess. All values are independent of the point labels.

#include "orbiline/k0.hpp"

#include <optional>

namespace orbiline {

/// nullopt means the dimension is not certified by the catalog formulas.
using HomDim = std::optional<Int>;

struct HomQuery {
    SheafObject source;
    SheafObject target;
    int ext_degree = 0;  // 0 or 1; the category is hereditary
};

/// Dimension of the graded piece of the section ring at x: the number of
/// monomials X_1^{m_1} X_2^{m_2} prod_{i>=3} X_i^{m_i} (m_i < a_i for
/// i >= 3) of degree x, which is l + 1 for l >= 0 and 0 otherwise.
inline Int graded_dim(WeightSpec const& spec, LVec const& x) {
    if (x.parts.size() != spec.count())
        throw std::invalid_argument("graded_dim: wrong coordinate count");
    if (x.l < 0) return Int(0);
    return x.l + 1;
}

namespace detail {

// #{k in [0, n) : k == t (mod a)} for t already reduced into [0, a).
inline Int count_congruent(int n, int a, int t) {
    if (t >= n) return Int(0);
    return Int((n - 1 - t) / a + 1);
}

inline int reduce_mod(int v, int a) { return ((v % a) + a) % a; }

}  // namespace detail

inline HomDim hom_dim(WeightSpec const& spec, SheafObject const& from, SheafObject const& to) {
    validate_object(spec, from);
    validate_object(spec, to);
    if (std::holds_alternative<HigherRankBundle>(from) ||
        std::holds_alternative<HigherRankBundle>(to))
        return std::nullopt;

    if (auto const* src = std::get_if<LineBundle>(&from)) {
        if (auto const* dst = std::get_if<LineBundle>(&to))
            return graded_dim(spec, spec.sub(dst->x, src->x));
        if (auto const* gt = std::get_if<GenericTorsion>(&to)) return Int(gt->length);
        auto const& tt = std::get<TubeTorsion>(to);
        // Exactly the composition factors S_{i, l_i - 1} receive a map from
        // O(x); count them among S_{i, j+k}, k < n.
        int a = spec.weight(static_cast<std::size_t>(tt.i - 1));
        int li = src->x.parts[static_cast<std::size_t>(tt.i - 1)];
        int t = detail::reduce_mod(li - 1 - tt.j, a);
        return detail::count_congruent(tt.length, a, t);
    }

    // Torsion into a line bundle: none.
    if (std::holds_alternative<LineBundle>(to)) return Int(0);

    if (auto const* src = std::get_if<GenericTorsion>(&from)) {
        if (auto const* dst = std::get_if<GenericTorsion>(&to))
            return src->point == dst->point ? Int(std::min(src->length, dst->length)) : Int(0);
        return Int(0);  // different points
    }

    auto const& src = std::get<TubeTorsion>(from);
    if (auto const* dst = std::get_if<TubeTorsion>(&to)) {
        if (src.i != dst->i) return Int(0);
        // A map factors through a quotient of the source (top segment, top
        // index j + n - 1) landing in a submodule of the target (socle
        // segment). With socle-aligned labels this counts
        //   #{k' in [0, min(n, n')) : j' + k' == j + n - 1 (mod a_i)}.
        int a = spec.weight(static_cast<std::size_t>(src.i - 1));
        int top = detail::reduce_mod(src.j + src.length - 1, a);
        int t = detail::reduce_mod(top - dst->j, a);
        return detail::count_congruent(std::min(src.length, dst->length), a, t);
    }
    return Int(0);  // tube torsion into generic torsion
}

/// Serre duality: ext1(E, F) = hom(F, E tensor O(omega)).
inline HomDim ext1_dim(WeightSpec const& spec, SheafObject const& from, SheafObject const& to) {
    validate_object(spec, from);
    validate_object(spec, to);
    if (std::holds_alternative<HigherRankBundle>(from) ||
        std::holds_alternative<HigherRankBundle>(to))
        return std::nullopt;
    return hom_dim(spec, to, twist(spec, from, spec.omega()));
}

inline HomDim hom_space_dim(WeightSpec const& spec, HomQuery const& q) {
    if (q.ext_degree == 0) return hom_dim(spec, q.source, q.target);
    if (q.ext_degree == 1) return ext1_dim(spec, q.source, q.target);
    throw std::invalid_argument("hom_space_dim: ext degree must be 0 or 1");
}

}  // namespace orbiline
