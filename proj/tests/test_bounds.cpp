#include <gtest/gtest.h>

#include "support.hpp"

using namespace svcrate;

TEST(HyperplaneCut, LastCoordinateHyperplane)
{
    FieldOrder f2(2);
    auto ms = induced_multiset(simplex_generator(2));
    auto cut = hyperplane_cut(ms, Hyperplane(FieldVector(f2, {0, 1})));
    EXPECT_EQ(cut.coeffs, (RationalVector{0, 1}));
    EXPECT_EQ(cut.rhs, 2);
}

TEST(HyperplaneCut, SimplexThreeAllOnes)
{
    auto cuts = all_hyperplane_cuts(induced_multiset(simplex_generator(3)));
    EXPECT_EQ(cuts.size(), 7u);
    EXPECT_EQ(cuts.back(), (ValidInequality{{1, 1, 1}, 4}));
}

TEST(HyperplaneCut, SystematicReedMullerFourHasLeaveOneOutCuts)
{
    auto cuts = all_hyperplane_cuts(induced_multiset(rm_generator(4, RmVariant::systematic)));
    for (std::size_t j = 0; j < 4; ++j)
    {
        RationalVector c(4, Rational(1));
        c[j] = 0;
        EXPECT_NE(std::find(cuts.begin(), cuts.end(), ValidInequality{c, 4}), cuts.end()) << j;
    }
}

TEST(HyperplaneCut, EveryCutHoldsOnTheComputedRegion)
{
    support::Gen gen(21);
    for (int t = 0; t < 25; ++t)
    {
        auto g = gen.small_code(3, 6);
        auto mu = gen.rates(g.cols());
        auto region = compute_region(g, mu);
        for (const auto& c : all_hyperplane_cuts(induced_multiset(g, mu))) EXPECT_GE(cut_slack(c, region.polytope), 0);
    }
}

TEST(DistanceBound, TightCasesAndIdentity)
{
    auto s3 = compute_region(simplex_generator(3), support::unit_rates(7));
    EXPECT_EQ(min_distance_lower_bound(s3), 4);
    auto r4 = compute_region(rm_generator(4, RmVariant::systematic), support::unit_rates(8));
    EXPECT_EQ(uniform_axis_rate(r4.polytope), Rational(10, 3));
    EXPECT_EQ(min_distance_lower_bound(r4), 4);
    auto id = compute_region(FieldMatrix::identity(FieldOrder(2), 2), support::unit_rates(2));
    EXPECT_EQ(min_distance_lower_bound(id), 1);
}

TEST(DistanceBound, NeedsUnitRates)
{
    auto r = compute_region(simplex_generator(2), {1, 2, 1});
    EXPECT_THROW(min_distance_lower_bound(r), NonUnitRates);
}

TEST(DistanceBound, OneDimensionalCode)
{
    auto g = FieldMatrix(FieldOrder(2), {{1, 1, 1}});
    auto cuts = all_hyperplane_cuts(induced_multiset(g));
    ASSERT_EQ(cuts.size(), 1u);
    EXPECT_EQ(cuts[0].rhs, 3);
    EXPECT_EQ(min_distance_lower_bound(compute_region(g, support::unit_rates(3))), 3);
}
