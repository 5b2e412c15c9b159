#pragma once

// The slope-stability central charge Z_tau = -deg + tau*rank for tau in the
// upper half-plane, exact phases and slopes for catalogued objects,
// semistability certificates, and the charge-level checker that recognizes
// the slope-stability family among central charges on the K0 basis.

#include "orbiline/homdim.hpp"

#include <map>
#include <optional>

namespace orbiline {

class StabilityParam {
   public:
    explicit StabilityParam(GaussRat tau) : tau_(std::move(tau)) {
        if (tau_.im.sign() <= 0)
            throw std::invalid_argument("StabilityParam: tau must lie in the upper half-plane");
    }

    GaussRat const& tau() const { return tau_; }

   private:
    GaussRat tau_;
};

/// Z_tau(E) = -deg(E) + tau * rank(E), exact.
inline GaussRat central_charge(WeightSpec const& spec, StabilityParam const& sigma,
                               K0Class const& cls) {
    Rat r(rank(cls));
    Rat d(degree(spec, cls));
    GaussRat z = r * sigma.tau();
    z.re -= d;
    return z;
}

/// Phase in the sheaf slice (0, 1]: torsion lands exactly at 1, positive
/// rank strictly inside (0, 1). Throws on a zero charge (zero class) and on
/// out-of-catalog objects.
inline Phase phase_of(WeightSpec const& spec, StabilityParam const& sigma,
                      SheafObject const& obj) {
    return make_phase(0, central_charge(spec, sigma, class_of(spec, obj)));
}

/// deg/rank with an exact infinity for torsion classes.
struct Slope {
    bool infinite = false;
    Rat value;

    bool operator==(Slope const&) const = default;
};

inline Slope slope(WeightSpec const& spec, K0Class const& cls) {
    Int r = rank(cls);
    Int d = degree(spec, cls);
    if (r < 0) throw std::domain_error("slope: negative rank is not a sheaf class");
    if (r == 0) {
        if (d == 0 && cls == k0_zero(spec)) throw std::domain_error("slope: zero class");
        return {true, Rat(0)};
    }
    return {false, make_rat(std::move(d), std::move(r))};
}

enum class Certificate { TorsionPhaseOne, LineBundleStable, CorollaryChiNonpositive };

inline char const* certificate_name(Certificate c) {
    switch (c) {
        case Certificate::TorsionPhaseOne: return "TorsionPhaseOne";
        case Certificate::LineBundleStable: return "LineBundleStable";
        case Certificate::CorollaryChiNonpositive: return "CorollaryChiNonpositive";
    }
    return "?";
}

struct SemistabilityVerdict {
    std::optional<Certificate> certificate;

    bool semistable() const { return certificate.has_value(); }
};

/// Torsion sits in the phase-1 slice. A line bundle is stable outright:
/// every rank-1 subsheaf is O(x - y) with y effective, and deg(y) >= 0
/// keeps every subobject slope at or below the object's. Catalogued objects
/// with chi <= 0 would fall under the total-semistability corollary; an
/// out-of-catalog object is never certified.
inline SemistabilityVerdict is_semistable(WeightSpec const& spec, StabilityParam const& sigma,
                                          SheafObject const& obj, Rat const& chi) {
    (void)sigma;
    validate_object(spec, obj);
    if (is_torsion(obj)) return {Certificate::TorsionPhaseOne};
    if (std::holds_alternative<LineBundle>(obj)) return {Certificate::LineBundleStable};
    if (!std::holds_alternative<HigherRankBundle>(obj) && chi.sign() <= 0)
        return {Certificate::CorollaryChiNonpositive};
    return {std::nullopt};
}

/// A central charge given on the K0 basis: [O], [S], and [S_{i,j}] for
/// j = 1..a_i-1 (on_tube[i][j-1], i 0-based here).
struct ChargeAssignment {
    GaussRat on_O;
    GaussRat on_S;
    std::vector<std::vector<GaussRat>> on_tube;
};

inline void validate_assignment(WeightSpec const& spec, ChargeAssignment const& z) {
    if (z.on_tube.size() != spec.count())
        throw std::invalid_argument("ChargeAssignment: wrong tube count");
    for (std::size_t i = 0; i < spec.count(); ++i)
        if (z.on_tube[i].size() != static_cast<std::size_t>(spec.weight(i) - 1))
            throw std::invalid_argument("ChargeAssignment: partial assignment on tube " +
                                        std::to_string(i + 1));
}

/// Z_tau restricted to the basis.
inline ChargeAssignment charge_table(WeightSpec const& spec, StabilityParam const& sigma) {
    ChargeAssignment z;
    z.on_O = central_charge(spec, sigma, class_of_line(spec, spec.zero()));
    z.on_S = central_charge(spec, sigma, class_of(spec, GenericTorsion{}));
    for (std::size_t i = 0; i < spec.count(); ++i) {
        std::vector<GaussRat> row;
        for (int j = 1; j < spec.weight(i); ++j)
            row.push_back(central_charge(
                spec, sigma, class_of(spec, TubeTorsion{static_cast<int>(i + 1), j, 1})));
        z.on_tube.push_back(std::move(row));
    }
    return z;
}

/// Linear extension of a basis assignment to any class.
inline GaussRat evaluate(WeightSpec const& spec, ChargeAssignment const& z, K0Class const& cls) {
    validate_assignment(spec, z);
    GaussRat out = Rat(cls.coeff_O) * z.on_O + Rat(cls.coeff_S) * z.on_S;
    for (std::size_t i = 0; i < spec.count(); ++i) {
        std::size_t off = tube_offset(spec, static_cast<int>(i + 1));
        for (int j = 1; j < spec.weight(i); ++j)
            out = out + Rat(cls.tube[off + static_cast<std::size_t>(j - 1)]) * z.on_tube[i][j - 1];
    }
    return out;
}

enum class Theorem1Clause {
    SkyscraperMass,       // Z([S]) != -a
    TubeChargeRelation,   // some Z([S_{i,j}]) != Z([S]) / a_i
    LineBundlePhaseRange, // im Z([O]) <= 0
    BasisChargeMismatch   // Z != Z_tau on a tilting line bundle
};

inline char const* clause_name(Theorem1Clause c) {
    switch (c) {
        case Theorem1Clause::SkyscraperMass: return "SkyscraperMass";
        case Theorem1Clause::TubeChargeRelation: return "TubeChargeRelation";
        case Theorem1Clause::LineBundlePhaseRange: return "LineBundlePhaseRange";
        case Theorem1Clause::BasisChargeMismatch: return "BasisChargeMismatch";
    }
    return "?";
}

struct Theorem1Verdict {
    std::optional<GaussRat> tau;  // set on acceptance
    std::optional<Theorem1Clause> rejected;

    bool accepted() const { return tau.has_value(); }
};

/// Enumerates the tilting line bundles 0 <= x <= c: 0, j*x_i, c.
inline std::vector<LVec> tilting_exponents(WeightSpec const& spec) {
    std::vector<LVec> out;
    out.push_back(spec.zero());
    for (std::size_t i = 0; i < spec.count(); ++i)
        for (int j = 1; j < spec.weight(i); ++j) {
            LVec x = spec.zero();
            x.parts[i] = j;
            out.push_back(std::move(x));
        }
    out.push_back(spec.canonical());
    return out;
}

/// Decides whether a basis charge is the slope charge of some tau in H,
/// assuming semistability of the named objects. Clauses, in order:
///   (a) Z([S]) = -a,
///   (b) Z([S_{i,j}]) = Z([S]) / a_i for every i and j mod a_i,
///   (c) im Z([O]) > 0,
///   (d) Z agrees with Z_tau on every tilting line bundle.
/// Rejects with the first failing clause.
inline Theorem1Verdict theorem1_check(WeightSpec const& spec, ChargeAssignment const& z) {
    validate_assignment(spec, z);
    GaussRat minus_a{Rat(-spec.lcm()), Rat(0)};
    if (!(z.on_S == minus_a)) return {std::nullopt, Theorem1Clause::SkyscraperMass};
    for (std::size_t i = 0; i < spec.count(); ++i) {
        GaussRat want = make_rat(1, spec.weight(i)) * z.on_S;
        for (int j = 0; j < spec.weight(i); ++j) {
            GaussRat zij =
                evaluate(spec, z, class_of(spec, TubeTorsion{static_cast<int>(i + 1), j, 1}));
            if (!(zij == want)) return {std::nullopt, Theorem1Clause::TubeChargeRelation};
        }
    }
    if (z.on_O.im.sign() <= 0) return {std::nullopt, Theorem1Clause::LineBundlePhaseRange};
    for (LVec const& x : tilting_exponents(spec)) {
        GaussRat got = evaluate(spec, z, class_of_line(spec, x));
        GaussRat want = z.on_O;
        want.re -= Rat(spec.deg(x));
        if (!(got == want)) return {std::nullopt, Theorem1Clause::BasisChargeMismatch};
    }
    return {z.on_O, std::nullopt};
}

}  // namespace orbiline
