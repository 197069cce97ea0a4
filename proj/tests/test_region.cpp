#include <gtest/gtest.h>

#include "support.hpp"

using namespace svcrate;

TEST(Region, IdentityCodeIsTheRateBox)
{
    auto g = FieldMatrix::identity(FieldOrder(3), 3);
    RationalVector mu{1, Rational(1, 2), 3};
    auto r = compute_region(g, mu);
    std::vector<RationalVector> corners;
    for (int m = 0; m < 8; ++m)
        corners.push_back({m & 1 ? mu[0] : 0, m & 2 ? mu[1] : 0, m & 4 ? mu[2] : 0});
    EXPECT_TRUE(polytope_equal(r.polytope, Polytope::from_vertices(3, corners)));
}

TEST(Region, SingleFileSumsAllServers)
{
    FieldOrder f5(5);
    auto r = compute_region(FieldMatrix(f5, {{1, 2, 4}}), {1, 2, Rational(1, 3)});
    EXPECT_EQ(r.polytope.vertices, (std::vector<RationalVector>{{0}, {Rational(10, 3)}}));
}

TEST(Region, SimplexSmallMatchesClosedForm)
{
    for (std::size_t k = 1; k <= 3; ++k)
    {
        auto g = simplex_generator(k);
        auto r = compute_region(g, support::unit_rates(g.cols()));
        EXPECT_TRUE(polytope_equal(r.polytope, known_region(CodeFamily::binary_simplex, k))) << k;
    }
}

TEST(Region, ThreadCountDoesNotChangeResult)
{
    auto cat = build_catalog(rm_generator(4, RmVariant::systematic));
    auto mu = support::unit_rates(8);
    auto a = compute_region(cat, mu, {1});
    auto b = compute_region(cat, mu, {4});
    EXPECT_EQ(a.polytope.vertices, b.polytope.vertices);
    EXPECT_EQ(a.polytope.facets, b.polytope.facets);
}

TEST(Region, ZeroRatesGiveTheOrigin)
{
    auto r = compute_region(simplex_generator(2), RationalVector(3, Rational(0)));
    EXPECT_EQ(r.polytope.vertices, (std::vector<RationalVector>{{0, 0}}));
}

TEST(Region, EveryVertexHasAWitness)
{
    auto g = rm_generator(4, RmVariant::systematic);
    auto cat = build_catalog(g);
    auto mu = support::unit_rates(8);
    for (const auto& v : compute_region(cat, mu).polytope.vertices)
    {
        auto a = membership(cat, mu, v);
        ASSERT_TRUE(a);
        EXPECT_TRUE(allocation_valid(cat, mu, v, *a));
    }
}

TEST(Oracle, AgreesOnSmallCodes)
{
    std::vector<GeneratorMatrix> codes{simplex_generator(2), simplex_generator(3), rm_generator(3, RmVariant::systematic),
                                       rm_generator(3, RmVariant::nonsystematic), FieldMatrix::identity(FieldOrder(2), 3),
                                       FieldMatrix(FieldOrder(3), {{1, 0, 1, 1}, {0, 1, 1, 2}})};
    for (const auto& g : codes)
    {
        auto cat = build_catalog(g);
        auto mu = support::unit_rates(g.cols());
        EXPECT_TRUE(polytope_equal(fm_projection_oracle(cat, mu), compute_region(cat, mu).polytope));
    }
}

TEST(Oracle, RefusesLargeCatalogs)
{
    auto cat = build_catalog(rm_generator(4, RmVariant::systematic));
    EXPECT_THROW(fm_projection_oracle(cat, support::unit_rates(8)), OracleTooLarge);
}

TEST(Region, RejectsBadRates)
{
    auto g = simplex_generator(2);
    EXPECT_THROW(compute_region(g, support::unit_rates(2)), DimensionMismatch);
    EXPECT_THROW(compute_region(g, {1, -1, 1}), DimensionMismatch);
}
