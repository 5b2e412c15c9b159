#include "orbiline/gldim.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace orbiline;

namespace {

std::mt19937& rng() {
    static std::mt19937 r(777);
    return r;
}

GaussRat tau_i() { return {Rat(0), Rat(1)}; }

GaussRat random_tau() {
    std::uniform_int_distribution<long long> num(-8, 8);
    std::uniform_int_distribution<long long> den(1, 6);
    std::uniform_int_distribution<long long> pos(1, 9);
    return {make_rat(Int(num(rng())), Int(den(rng()))),
            make_rat(Int(pos(rng())), Int(den(rng())))};
}

Phase quarter(long long offset, long long re, long long im) {
    return make_phase(offset, GaussRat{Rat(re), Rat(im)});
}

}  // namespace

TEST(CatalogBuild, CountsAndContents) {
    WeightSpec s({2, 2, 2, 2});
    StabilityParam sigma(tau_i());
    Catalog cat = catalog_build(s, sigma, 1, 2);
    // generic: 2, tubes: 4*2*2 = 16, lines: 3 * 2^4 = 48
    EXPECT_EQ(cat.entries.size(), 2u + 16u + 48u);
    for (CatalogEntry const& e : cat.entries) EXPECT_TRUE(e.verdict.semistable());
    EXPECT_EQ(cat.entries.front().obj, SheafObject(GenericTorsion{"*", 1}));

    WeightSpec w({2, 3, 7});
    Catalog wc = catalog_build(w, sigma, 2, 7);
    bool has_omega = false;
    for (CatalogEntry const& e : wc.entries)
        if (e.obj == SheafObject(LineBundle{w.omega()})) has_omega = true;
    EXPECT_TRUE(has_omega);

    EXPECT_THROW(catalog_build(s, sigma, 0, 2), std::invalid_argument);
    EXPECT_THROW(catalog_build(s, sigma, 1, 0), std::invalid_argument);
}

TEST(MaxGap, TubularExample) {
    WeightSpec s({2, 2, 2, 2});
    StabilityParam sigma(tau_i());
    GapReport g = max_gap(catalog_build(s, sigma, 2, 4));
    EXPECT_TRUE(phase_eq(g.value, phase_one()));
    EXPECT_EQ(g.exactness, Exactness::ExactGlobal);
    EXPECT_TRUE(g.witness_ext);
    EXPECT_EQ(g.witness_a, SheafObject(GenericTorsion{"*", 1}));
    EXPECT_EQ(g.witness_b, SheafObject(GenericTorsion{"*", 1}));
}

TEST(MaxGap, WildExample) {
    WeightSpec s({2, 3, 7});
    StabilityParam sigma(tau_i());
    GapReport g = max_gap(catalog_build(s, sigma, 2, 7));
    EXPECT_TRUE(phase_eq(g.value, quarter(1, 1, 1)));  // 5/4
    EXPECT_EQ(g.exactness, Exactness::WindowLowerBound);
    EXPECT_TRUE(g.witness_ext);
    EXPECT_EQ(g.witness_a, SheafObject(LineBundle{s.zero()}));
    EXPECT_EQ(g.witness_b, SheafObject(LineBundle{s.omega()}));
    EXPECT_NEAR(g.float_value, 1.25, 1e-12);
}

TEST(MaxGap, DomesticExample) {
    WeightSpec s({2, 3, 5});
    StabilityParam sigma(tau_i());
    GapReport g = max_gap(catalog_build(s, sigma, 3, 6));
    EXPECT_TRUE(phase_eq(g.value, phase_one()));
    EXPECT_EQ(g.exactness, Exactness::ExactGlobal);
    EXPECT_TRUE(g.witness_ext);
    EXPECT_TRUE(is_torsion(g.witness_a));
    EXPECT_TRUE(is_torsion(g.witness_b));
}

TEST(MaxGap, TorsionSelfExtGivesAtLeastOne) {
    for (auto const& w : {std::vector<int>{2, 3, 5}, {2, 2, 2, 2}, {2, 3, 7}}) {
        WeightSpec spec(w);
        StabilityParam sigma(random_tau());
        GapReport g = max_gap(catalog_build(spec, sigma, 1, 1));
        EXPECT_NE(phase_compare(g.value, phase_one()), std::strong_ordering::less);
    }
}

TEST(MaxGap, WindowMonotonicity) {
    WeightSpec s({2, 3, 7});
    StabilityParam sigma(tau_i());
    Phase prev = max_gap(catalog_build(s, sigma, 1, 1)).value;
    for (auto [L, N] : {std::pair{1, 7}, {2, 7}, {2, 14}, {3, 14}}) {
        Phase cur = max_gap(catalog_build(s, sigma, L, N)).value;
        EXPECT_NE(phase_compare(cur, prev), std::strong_ordering::less);
        prev = cur;
    }
}

TEST(MaxGap, HomPairGapsWithinUnitInterval) {
    // Catalog-level check of the vanishing axiom: Hom pairs never have
    // phase(A) > phase(B), and gaps stay in [0, 1].
    for (auto const& w : {std::vector<int>{2, 3, 5}, {2, 4, 4}, {2, 3, 7}}) {
        WeightSpec spec(w);
        StabilityParam sigma(random_tau());
        Catalog cat = catalog_build(spec, sigma, 1, 4);
        for (CatalogEntry const& a : cat.entries)
            for (CatalogEntry const& b : cat.entries) {
                HomDim d = hom_dim(spec, a.obj, b.obj);
                if (!d || *d == 0) continue;
                Phase gap = phase_sub(b.phase, a.phase);
                Phase zero = make_phase(0, GaussRat{Rat(1), Rat(0)});
                EXPECT_NE(phase_compare(gap, phase_one()), std::strong_ordering::greater)
                    << object_literal(spec, a.obj) << " -> " << object_literal(spec, b.obj);
                EXPECT_NE(phase_compare(gap, zero), std::strong_ordering::less);
                EXPECT_NE(phase_compare(a.phase, b.phase), std::strong_ordering::greater);
            }
    }
}

TEST(MaxGap, SkipsUnknownDimensions) {
    WeightSpec s({2, 3, 5});
    StabilityParam sigma(tau_i());
    Catalog cat = catalog_build(s, sigma, 1, 2);
    GapReport before = max_gap(cat);
    // A stub entry participates in no certified pair and must not change
    // the result.
    CatalogEntry stub{HigherRankBundle{2}, k0_zero(s), phase_one(), {std::nullopt}};
    cat.entries.push_back(stub);
    GapReport after = max_gap(cat);
    EXPECT_TRUE(phase_eq(before.value, after.value));
    EXPECT_EQ(before.witness_a, after.witness_a);
    EXPECT_EQ(before.witness_b, after.witness_b);
}

TEST(MaxGap, EmptyCatalogThrows) {
    WeightSpec s({2, 3, 5});
    StabilityParam sigma(tau_i());
    Catalog cat{s, sigma, 1, 1, {}};
    EXPECT_THROW(max_gap(cat), std::invalid_argument);
}

TEST(GepnerCheck, MatchesTubularType) {
    for (auto const& w : {std::vector<int>{2, 2, 2, 2}, {3, 3, 3}, {2, 4, 4}, {2, 3, 6}}) {
        WeightSpec spec(w);
        for (int t = 0; t < 5; ++t) EXPECT_TRUE(gepner_check(spec, StabilityParam(random_tau())));
    }
    EXPECT_FALSE(gepner_check(WeightSpec({2, 3, 5}), StabilityParam(tau_i())));
    EXPECT_FALSE(gepner_check(WeightSpec({2, 3, 7}), StabilityParam(tau_i())));
    EXPECT_FALSE(gepner_check(WeightSpec({1, 2, 3}), StabilityParam(tau_i())));
}

TEST(WildGap, Examples) {
    WeightSpec s237({2, 3, 7});
    GapReport g = wild_gap(s237, StabilityParam(tau_i()));
    EXPECT_TRUE(phase_eq(g.value, quarter(1, 1, 1)));
    EXPECT_TRUE(g.witness_ext);
    EXPECT_EQ(g.witness_a, SheafObject(LineBundle{s237.zero()}));
    EXPECT_EQ(g.witness_b, SheafObject(LineBundle{s237.omega()}));

    GapReport g10 = wild_gap(s237, StabilityParam(GaussRat{Rat(0), Rat(10)}));
    EXPECT_NEAR(g10.float_value, 1.031725517430978, 1e-12);

    WeightSpec s2223({2, 2, 2, 3});
    EXPECT_TRUE(phase_eq(wild_gap(s2223, StabilityParam(tau_i())).value, quarter(1, 1, 1)));

    EXPECT_THROW(wild_gap(WeightSpec({2, 3, 6}), StabilityParam(tau_i())), std::invalid_argument);
}

TEST(WildGap, StrictlyAboveOneForRationalTau) {
    WeightSpec s({2, 3, 7});
    for (int t = 0; t < 10; ++t) {
        StabilityParam sigma(random_tau());
        EXPECT_EQ(phase_compare(wild_gap(s, sigma).value, phase_one()),
                  std::strong_ordering::greater);
        GapReport mg = max_gap(catalog_build(s, sigma, 2, 7));
        EXPECT_NE(phase_compare(mg.value, wild_gap(s, sigma).value),
                  std::strong_ordering::less);
    }
}

TEST(Scan, WildLimitFamily) {
    WeightSpec s({2, 3, 7});
    std::vector<GaussRat> grid;
    for (long long t : {1, 10, 100, 1000}) grid.push_back(GaussRat{Rat(0), Rat(t)});
    ScanResult result = scan(s, grid, 2, 7, 2);
    ASSERT_EQ(result.rows.size(), 4u);
    for (std::size_t i = 1; i < result.rows.size(); ++i)
        EXPECT_EQ(phase_compare(result.rows[i].report.value, result.rows[i - 1].report.value),
                  std::strong_ordering::less);
    EXPECT_LT(result.rows.back().report.float_value - 1.0, 1e-3);
    EXPECT_GT(result.rows.back().report.float_value, 1.0);
    EXPECT_EQ(result.infimum_index, 3u);
}

TEST(Scan, TubularConstantOne) {
    WeightSpec s({2, 2, 2, 2});
    std::vector<GaussRat> grid;
    for (int t = 0; t < 4; ++t) grid.push_back(random_tau());
    ScanResult result = scan(s, grid, 1, 4, 3);
    for (ScanRow const& row : result.rows) {
        EXPECT_TRUE(phase_eq(row.report.value, phase_one()));
        EXPECT_EQ(row.report.exactness, Exactness::ExactGlobal);
    }
}

TEST(Scan, DomesticConstantOne) {
    WeightSpec s({2, 3, 5});
    std::vector<GaussRat> grid;
    for (long long a = -1; a <= 1; ++a)
        for (long long b = 1; b <= 3; b += 2)
            grid.push_back(GaussRat{Rat(a), Rat(b)});
    ScanResult result = scan(s, grid, 2, 6, 0);
    for (ScanRow const& row : result.rows) {
        EXPECT_TRUE(phase_eq(row.report.value, phase_one()));
        EXPECT_EQ(row.report.exactness, Exactness::ExactGlobal);
    }
}

TEST(Scan, Validation) {
    WeightSpec s({2, 3, 5});
    EXPECT_THROW(scan(s, {}, 1, 1), std::invalid_argument);
    EXPECT_THROW(scan(s, {GaussRat{Rat(0), Rat(-1)}}, 1, 1), std::invalid_argument);
}
