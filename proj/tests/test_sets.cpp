#include "ballhull/set_oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ballhull;

namespace {

const double kS3 = std::sqrt(3.0) / 2.0;

PointSet random_points(std::size_t n, std::size_t dim, std::uint64_t seed, double lo = -2, double hi = 2)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(lo, hi);
    PointSet s(dim);
    Vec p(dim);
    for (std::size_t i = 0; i < n; ++i) {
        for (double& x : p) x = U(rng);
        s.push_back(p);
    }
    return s;
}

SetOracle lens() { return SetOracle(BallRegion({{0, 0}, {1, 0}}, 1.0, NormSpec::euclidean(2))); }

} // namespace

TEST(PointSetTest, Basics)
{
    const PointSet s{{0, 0}, {1, 0}, {0, 0}};
    EXPECT_EQ(s.size(), 3u);
    EXPECT_EQ(s.deduplicated().size(), 2u);
    EXPECT_THROW(PointSet(std::vector<Vec>{}), std::invalid_argument);
    EXPECT_THROW((PointSet{{0, 0}, {1}}), std::invalid_argument);
    EXPECT_THROW((PointSet{{0, std::nan("")}}), std::invalid_argument);
    EXPECT_THROW(Ball({0, 0}, -1.0), std::invalid_argument);
    EXPECT_THROW(BallRegion(s, 0.0, NormSpec::euclidean(2)), std::invalid_argument);
}

TEST(Farthest, Finite)
{
    const auto ns = NormSpec::euclidean(2);
    const auto r = farthest_distance_finite({{0, 0}, {1, 0}}, Vec{2, 0}, ns);
    EXPECT_DOUBLE_EQ(r.value, 2.0);
    EXPECT_EQ(r.witness, 0u);
    EXPECT_DOUBLE_EQ(farthest_distance_finite({{0, 0}}, Vec{3, 4}, ns).value, 5.0);
    // ties resolve to the lowest index
    EXPECT_EQ(farthest_distance_finite({{1, 0}, {-1, 0}}, Vec{0, 0}, ns).witness, 0u);
    EXPECT_THROW(farthest_distance_finite(PointSet(2), Vec{0, 0}, ns), std::domain_error);
}

TEST(Farthest, FiniteMatchesDirectScan)
{
    for (const NormSpec& ns : {NormSpec::euclidean(2), NormSpec::l1(3), NormSpec::lp(2.5, 2)}) {
        const PointSet C = random_points(100, ns.dim(), 3);
        const PointSet X = random_points(50, ns.dim(), 4, -6, 6);
        for (std::size_t j = 0; j < X.size(); ++j) {
            double best = 0;
            for (const Vec& c : C.points()) best = std::max(best, ns.eval(sub(X[j], c)));
            EXPECT_DOUBLE_EQ(farthest_distance_finite(C, X[j], ns).value, best);
        }
    }
}

TEST(Farthest, Ball)
{
    const auto ns = NormSpec::euclidean(2);
    EXPECT_DOUBLE_EQ(farthest_distance_ball(Ball({0, 0}, 1), Vec{2, 0}, ns), 3.0);
    EXPECT_DOUBLE_EQ(farthest_distance_ball(Ball({0, 0}, 1), Vec{0, 0}, ns), 1.0);
    // brute-force maximum over a grid of the ball at h = 5e-4, frozen
    const Ball B({1, 1}, 0.5);
    const double grid[3][2] = {{0.2, 1.4999288316450439}, {0.5, 2.999914415445903}, {1.0, 5.499907862864635}};
    for (const auto& [t, val] : grid) {
        EXPECT_NEAR(farthest_distance_ball(B, Vec{1 + 3 * t, 1 + 4 * t}, ns), val, 2 * 5e-4);
    }
}

TEST(Queries, LensExact)
{
    // Frozen values from a brute-force grid over the lens at h = 5e-4.
    const double h = 5e-4;
    const SetOracle S = lens();
    ASSERT_NE(S.exact2d(), nullptr);

    const Measured d = nearest_distance(S, Vec{0.5, 2});
    EXPECT_TRUE(d.exact());
    EXPECT_NEAR(d.value, 2 - kS3, 1e-12);
    EXPECT_NEAR(d.value, 1.134, 2 * h);

    const Measured s = support_function(S, Vec{0, 1});
    EXPECT_NEAR(s.value, kS3, 1e-12);
    EXPECT_NEAR(s.value, 0.866, 2 * h);

    EXPECT_NEAR(farthest_distance(S, Vec{0.5, 0.13}).value, 0.13 + kS3, 1e-12);
    EXPECT_NEAR(farthest_distance(S, Vec{0.5, 0.13}).value, 0.996, 2 * h);
    EXPECT_NEAR(farthest_distance(S, Vec{0.5, 0.14}).value, 0.14 + kS3, 1e-12);
    EXPECT_NEAR(farthest_distance(S, Vec{0.5, 0.14}).value, 1.006, 2 * h);
    EXPECT_DOUBLE_EQ(nearest_distance(S, Vec{0.5, 0.1}).value, 0.0);
}

TEST(Queries, LensGridFallback)
{
    // p slightly above 2 is not treated as Euclidean, which forces the sampled path.
    const NormSpec ns = NormSpec::lp(2.0 + 1e-12, 2);
    const SetOracle S = SetOracle(BallRegion({{0, 0}, {1, 0}}, 1.0, ns)).with_resolution(0.005);
    ASSERT_EQ(S.exact2d(), nullptr);
    const double h = S.resolution();
    const Measured d = nearest_distance(S, Vec{0.5, 2});
    EXPECT_EQ(d.resolution, h);
    EXPECT_NEAR(d.value, 2 - kS3, 2 * h);
    EXPECT_NEAR(support_function(S, Vec{0, 1}).value, kS3, 2 * h);
    EXPECT_NEAR(farthest_distance(S, Vec{0.5, 0.13}).value, 0.13 + kS3, 2 * h);
}

TEST(Queries, BallAndPoints)
{
    const auto ns = NormSpec::euclidean(2);
    EXPECT_DOUBLE_EQ(nearest_distance(SetOracle(Ball({0, 0}, 1), ns), Vec{3, 0}).value, 2.0);
    EXPECT_DOUBLE_EQ(support_function(SetOracle(PointSet{{1, 2}}, ns), Vec{0, 1}).value, 2.0);
    EXPECT_NEAR(support_function(SetOracle(Ball({0, 0}, 2.5), ns), Vec{3, 4}).value, 12.5, 1e-12);
    EXPECT_DOUBLE_EQ(farthest_distance(SetOracle(BallRegion({{0, 0}}, 1.0, ns)), Vec{2, 0}).value, 3.0);
}

TEST(Queries, EmptyRegions)
{
    const auto ns = NormSpec::euclidean(2);
    const SetOracle exact(BallRegion({{0, 0}, {3, 0}}, 1.0, ns));
    EXPECT_TRUE(exact.is_empty_exactly());
    EXPECT_TRUE(nearest_distance(exact, Vec{0, 0}).empty_at_resolution);
    EXPECT_THROW(support_function(exact, Vec{0, 1}), std::domain_error);

    // l1 disks of radius 1 around (0,0) and (1.9,0.2) do not meet, but their
    // bounding boxes do: emptiness is only detected at resolution.
    const SetOracle grid(BallRegion({{0, 0}, {1.9, 0.2}}, 1.0, NormSpec::l1(2)));
    EXPECT_FALSE(grid.is_empty_exactly());
    const Measured m = nearest_distance(grid, Vec{0, 0});
    EXPECT_TRUE(m.empty_at_resolution);
    EXPECT_GT(m.resolution, 0.0);
    EXPECT_THROW(farthest_distance(grid, Vec{0, 0}), std::domain_error);
}

TEST(Properties, FarthestLipschitzConvexAndAboveNearest)
{
    const SetOracle S = lens();
    for (const NormSpec& ns : {NormSpec::euclidean(2), NormSpec::l1(2), NormSpec::linf(2)}) {
        const PointSet C = random_points(20, 2, 9);
        const PointSet X = random_points(400, 2, 10, -5, 5);
        for (std::size_t j = 0; j + 1 < X.size(); j += 2) {
            const auto x = X[j], y = X[j + 1];
            const double fx = farthest_distance_finite(C, x, ns).value;
            const double fy = farthest_distance_finite(C, y, ns).value;
            const double fm = farthest_distance_finite(C, midpoint(x, y), ns).value;
            EXPECT_LE(std::abs(fx - fy), ns.distance(x, y) + 1e-12);
            EXPECT_LE(fm, 0.5 * (fx + fy) + 1e-12);
            EXPECT_LE(nearest_distance_finite(C, x, ns).value, fx);
        }
    }
    const PointSet X = random_points(400, 2, 12, -3, 3);
    for (std::size_t j = 0; j < X.size(); ++j) {
        EXPECT_LE(nearest_distance(S, X[j]).value, farthest_distance(S, X[j]).value);
    }
}

TEST(Properties, MembershipIsTheFarthestIdentity)
{
    for (const NormSpec& ns : {NormSpec::euclidean(2), NormSpec::l1(2), NormSpec::lp(3, 3)}) {
        const PointSet G = random_points(12, ns.dim(), 21, -0.5, 0.5);
        const BallRegion B(G, 1.2, ns);
        const PointSet Y = random_points(5000, ns.dim(), 22, -1.5, 1.5);
        for (std::size_t j = 0; j < Y.size(); ++j) {
            EXPECT_EQ(B.contains(Y[j]), farthest_distance_finite(G, Y[j], ns).value <= 1.2);
        }
    }
}
