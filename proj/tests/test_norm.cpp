#include "ballhull/norm.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ballhull;

TEST(Norm, Evaluation)
{
    EXPECT_DOUBLE_EQ(NormSpec::euclidean(2).eval(Vec{3, 4}), 5.0);
    EXPECT_DOUBLE_EQ(NormSpec::l1(2).eval(Vec{3, -4}), 7.0);
    EXPECT_NEAR(NormSpec::lp(3, 2).eval(Vec{1, 1}), std::cbrt(2.0), 1e-15);
    EXPECT_DOUBLE_EQ(NormSpec::linf(3).eval(Vec{1, -7, 2}), 7.0);
}

TEST(Norm, DualEvaluation)
{
    EXPECT_DOUBLE_EQ(NormSpec::l1(2).dual_eval(Vec{3, -4}), 4.0);
    EXPECT_DOUBLE_EQ(NormSpec::euclidean(2).dual_eval(Vec{3, 4}), 5.0);
    EXPECT_NEAR(NormSpec::lp(3, 2).dual_eval(Vec{1, 1}), std::pow(2.0, 2.0 / 3.0), 1e-14);
    EXPECT_DOUBLE_EQ(NormSpec::linf(2).dual_eval(Vec{3, -4}), 7.0);
}

TEST(Norm, RejectsBadInput)
{
    EXPECT_THROW(NormSpec::euclidean(2).eval(Vec{1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(NormSpec::euclidean(2).dual_eval(Vec{1}), std::invalid_argument);
    EXPECT_THROW(NormSpec::lp(1.0, 2), std::invalid_argument);
    EXPECT_THROW(NormSpec(NormKind::l1, 0), std::invalid_argument);
    EXPECT_THROW(parse_norm_kind("l7"), std::invalid_argument);
}

TEST(Norm, SystematicSamples)
{
    const auto e = unit_sphere_samples(NormSpec::euclidean(2), SphereSide::primal, 4);
    const double expect[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int j = 0; j < 4; ++j) {
        EXPECT_NEAR(e[j][0], expect[j][0], 1e-15);
        EXPECT_NEAR(e[j][1], expect[j][1], 1e-15);
    }
    const auto q = unit_sphere_samples(NormSpec::linf(2), SphereSide::primal, 4);
    for (const Vec& d : q.directions) EXPECT_DOUBLE_EQ(std::max(std::abs(d[0]), std::abs(d[1])), 1.0);
}

TEST(Norm, SamplesAreUnit)
{
    const std::vector<NormSpec> norms = {NormSpec::euclidean(2), NormSpec::l1(3), NormSpec::linf(2),
                                         NormSpec::lp(3.5, 2), NormSpec::lp(1.5, 5), NormSpec::euclidean(1)};
    for (const NormSpec& ns : norms) {
        for (SphereSide side : {SphereSide::primal, SphereSide::dual}) {
            for (SphereSampling mode : {SphereSampling::systematic, SphereSampling::random}) {
                const auto d = unit_sphere_samples(ns, side, 97, 7, mode);
                ASSERT_EQ(d.size(), 97u);
                for (const Vec& v : d.directions) {
                    const double n = side == SphereSide::primal ? ns.eval(v) : ns.dual_eval(v);
                    EXPECT_NEAR(n, 1.0, 1e-12) << ns.name();
                }
            }
        }
    }
}

TEST(Norm, SamplesAreDeterministic)
{
    const auto a = unit_sphere_samples(NormSpec::l1(4), SphereSide::dual, 10, 42, SphereSampling::random);
    const auto b = unit_sphere_samples(NormSpec::l1(4), SphereSide::dual, 10, 42, SphereSampling::random);
    EXPECT_EQ(a.directions, b.directions);
}

class NormProperties : public ::testing::TestWithParam<NormSpec> {};

TEST_P(NormProperties, HolderHomogeneityTriangle)
{
    const NormSpec ns = GetParam();
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-5, 5);
    auto draw = [&] {
        Vec v(ns.dim());
        for (double& x : v) x = U(rng);
        return v;
    };
    for (int k = 0; k < 10000; ++k) {
        const Vec x = draw(), y = draw();
        EXPECT_LE(dot(x, y), ns.eval(x) * ns.dual_eval(y) + 1e-12);
        const double a = U(rng);
        EXPECT_NEAR(ns.eval(scale(x, a)), std::abs(a) * ns.eval(x), 1e-12 * (1 + ns.eval(x)));
        EXPECT_LE(ns.eval(add(x, y)), ns.eval(x) + ns.eval(y) + 1e-12);
    }
}

TEST_P(NormProperties, BidualFromDirections)
{
    const NormSpec ns = GetParam();
    if (ns.dim() != 2) GTEST_SKIP();
    const auto dirs = unit_sphere_samples(ns, SphereSide::dual, 720);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-3, 3);
    for (int k = 0; k < 200; ++k) {
        const Vec x{U(rng), U(rng)};
        double best = -1e300;
        for (const Vec& d : dirs.directions) best = std::max(best, dot(x, d));
        EXPECT_LE(best, ns.eval(x) + 1e-12);
        EXPECT_NEAR(best, ns.eval(x), 1e-3 * std::max(1.0, ns.eval(x)));
    }
}

INSTANTIATE_TEST_SUITE_P(AllKinds, NormProperties,
                         ::testing::Values(NormSpec::euclidean(2), NormSpec::l1(2), NormSpec::linf(2),
                                           NormSpec::lp(3, 2), NormSpec::lp(1.25, 3)));
