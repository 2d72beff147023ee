#include "ballhull/polarity.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ballhull;

namespace {

const double kS3 = std::sqrt(3.0) / 2.0;
const NormSpec kL2 = NormSpec::euclidean(2);

PointSet circle_samples(Vec c, double r, std::size_t n, double phase = 0.0)
{
    PointSet s(2);
    for (std::size_t j = 0; j < n; ++j) {
        const double a = phase + 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        s.push_back(Vec{c[0] + r * std::cos(a), c[1] + r * std::sin(a)});
    }
    return s;
}

double apex_threshold(const HullResult& H)
{
    double lo = 0.0, hi = 0.5;
    for (int k = 0; k < 200; ++k) {
        const double mid = 0.5 * (lo + hi);
        (H.contains(Vec{0.5, mid}, 0.0) ? lo : hi) = mid;
    }
    return lo;
}

} // namespace

TEST(Polar, Singleton)
{
    const BallRegion P = polar({{1, 2}}, 0.7, kL2);
    EXPECT_TRUE(P.contains(Vec{1.7, 2}));
    EXPECT_FALSE(P.contains(Vec{1.71, 2}));
    const SetOracle S(P);
    ASSERT_NE(S.exact2d(), nullptr);
    EXPECT_TRUE(S.exact2d()->full_disk());
}

TEST(Polar, BallSamples)
{
    // polar of a dense boundary sample of B(c, r) approaches B(c, R - r)
    const Vec c{0.3, -0.2};
    const SetOracle P(polar(circle_samples(c, 0.5, 720), 1.25, kL2));
    const ArcRegion* A = P.exact2d();
    ASSERT_NE(A, nullptr);
    const PointSet b = A->boundary_samples();
    for (std::size_t j = 0; j < b.size(); ++j) {
        EXPECT_NEAR(euclidean_distance(b[j], c), 0.75, 1e-4);
    }
}

TEST(StrongHull, LensExample)
{
    const PointSet C{{0, 0}, {1, 0}};
    const HullResult H = strong_hull(C, 1.0, kL2, HullBackend::exact2d);
    ASSERT_FALSE(H.whole_space);
    EXPECT_TRUE(H.contains(Vec{0.5, 0.13}));
    EXPECT_FALSE(H.contains(Vec{0.5, 0.14}));
    EXPECT_NEAR(apex_threshold(H), 1 - kS3, 1e-9);
    // frozen brute-force double-polar threshold at h = 5e-4
    EXPECT_NEAR(apex_threshold(H), 0.134, 2 * 5e-4);
    for (std::size_t i = 0; i < C.size(); ++i) EXPECT_TRUE(H.contains(C[i]));

    const HullResult G = strong_hull(C, 1.0, kL2, HullBackend::grid, 0.002);
    EXPECT_TRUE(G.contains(Vec{0.5, 0.13}));
    EXPECT_NEAR(apex_threshold(G), 1 - kS3, 2 * 0.002);
    EXPECT_GE(apex_threshold(G), 1 - kS3 - 1e-12);
}

TEST(StrongHull, ExportedRegionMatchesExactMembership)
{
    const HullResult H = strong_hull({{0, 0}, {1, 0}, {0.4, 0.5}}, 1.0, kL2, HullBackend::exact2d);
    const BallRegion exported = H.region();
    EXPECT_EQ(H.generator_count(), exported.generators().size());
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> U(-0.5, 1.5);
    for (int k = 0; k < 5000; ++k) {
        const Vec y{U(rng), U(rng) - 0.5};
        if (std::abs(H.level(y)) < 1e-4) continue;
        EXPECT_EQ(exported.contains(y), H.contains(y));
    }
}

TEST(StrongHull, BallIsItsOwnHull)
{
    const Vec c{1, 1};
    for (const double r : {0.3, 0.8, 1.0}) {
        const HullResult H = strong_hull(circle_samples(c, r, 50, 0.1), 1.0, kL2, HullBackend::exact2d);
        ASSERT_FALSE(H.whole_space);
        const ArcRegion& A = *H.hull_arcs;
        const PointSet b = A.boundary_samples();
        double dev = 0;
        for (std::size_t j = 0; j < b.size(); ++j) dev = std::max(dev, std::abs(euclidean_distance(b[j], c) - r));
        // between 50 samples the hull follows radius-1 arcs; the gap to the
        // circle of radius r is below r (1 - cos(pi / 50))
        EXPECT_LE(dev, r * (1 - std::cos(std::numbers::pi / 50)) + 1e-12);
    }
}

TEST(StrongHull, SquareBulges)
{
    const PointSet sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const std::pair<HullBackend, double> cases[] = {{HullBackend::exact2d, 10.0}, {HullBackend::grid, 3.0}};
    for (const auto& [b, R] : cases) {
        const HullResult H = strong_hull(sq, R, kL2, b, 0.005);
        const double sag = R - std::sqrt(R * R - 0.25);
        EXPECT_TRUE(H.contains(Vec{0.5, -0.5 * sag}));
        EXPECT_TRUE(H.contains(Vec{1 + 0.5 * sag, 0.5}));
        EXPECT_FALSE(H.contains(Vec{0.5, -sag - 2 * 0.005}));
    }
}

TEST(StrongHull, WholeSpace)
{
    const PointSet far{{0, 0}, {5, 0}};
    EXPECT_TRUE(strong_hull(far, 1.0, kL2, HullBackend::exact2d).whole_space);
    EXPECT_TRUE(strong_hull(far, 1.0, NormSpec::l1(2), HullBackend::grid).whole_space);
    EXPECT_TRUE(strong_hull(far, 1.0, kL2, HullBackend::exact2d).contains(Vec{100, 100}));
    EXPECT_THROW(strong_hull(far, 1.0, NormSpec::l1(2), HullBackend::exact2d), Unsupported);
}

TEST(StrongHull, GridBackendAgreesWithExactOutsideBand)
{
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> U(-0.4, 0.4);
    PointSet C(2);
    for (int i = 0; i < 12; ++i) C.push_back(Vec{U(rng), U(rng)});
    const double h = 0.01;
    const HullResult E = strong_hull(C, 1.0, kL2, HullBackend::exact2d);
    const HullResult G = strong_hull(C, 1.0, kL2, HullBackend::grid, h);
    const ArcRegion& A = *E.hull_arcs;
    std::uniform_real_distribution<double> V(-1.2, 1.2);
    for (int k = 0; k < 10000; ++k) {
        const Vec y{V(rng), V(rng)};
        if (E.contains(y) != G.contains(y)) EXPECT_LE(A.boundary_distance(y), 2 * h);
    }
}

TEST(PolarOf, ClosedForms)
{
    const SetOracle ball(Ball({1, 1}, 0.4), kL2);
    const SetOracle p = polar_of(ball, 1.0);
    const auto* b = std::get_if<Ball>(&p.rep());
    ASSERT_NE(b, nullptr);
    EXPECT_NEAR(b->radius, 0.6, 1e-15);
    EXPECT_TRUE(std::holds_alternative<EmptySet>(polar_of(ball, 0.3).rep()));
    EXPECT_TRUE(polar_of(SetOracle::empty(kL2), 1.0).is_whole_space());
    EXPECT_TRUE(std::holds_alternative<EmptySet>(polar_of(SetOracle::whole_space(1.0, kL2), 1.0).rep()));
}

TEST(PolarOf, TriplePolarOfLens)
{
    const SetOracle C(PointSet{{0, 0}, {1, 0}, {0.3, 0.4}}, kL2);
    const SetOracle P = polar_of(C, 1.0);
    const SetOracle PPP = polar_of(hull_of(C, 1.0), 1.0);
    ASSERT_NE(PPP.exact2d(), nullptr);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> U(-1, 2);
    for (int k = 0; k < 10000; ++k) {
        const Vec y{U(rng), U(rng) - 0.5};
        if (std::abs(P.exact2d()->level(y)) <= 1e-9) continue;
        EXPECT_EQ(P.contains(y, 0.0), PPP.contains(y, 0.0));
    }
}

TEST(StronglyConvex, Examples)
{
    const SetOracle disk = SetOracle(Ball({0, 0}, 1), kL2).with_resolution(0.01);
    EXPECT_TRUE(is_strongly_convex(disk, 1.0).strongly_convex);
    const ConvexityReport half = is_strongly_convex(disk, 0.5);
    EXPECT_FALSE(half.strongly_convex);
    EXPECT_TRUE(half.hull_whole_space);

    const SetOracle square(PredicateSet{[](VecView y) { return std::abs(y[0]) <= 0.5 && std::abs(y[1]) <= 0.5; },
                                        Box::cube(2, -0.5, 0.5)},
                           kL2);
    for (const double R : {1.0, 3.0, 10.0}) {
        const ConvexityReport rep = is_strongly_convex(square, R, -1.0, 0.002);
        EXPECT_FALSE(rep.strongly_convex) << R;
        EXPECT_FALSE(rep.witnesses.empty());
    }

    const SetOracle lens(BallRegion({{0, 0}, {1, 0}}, 1.0, kL2));
    const ConvexityReport l = is_strongly_convex(lens, 1.0, -1.0, 0.005);
    EXPECT_TRUE(l.strongly_convex) << l.max_excess;
}

TEST(SupportSum, Identity)
{
    const auto dirs = unit_sphere_samples(kL2, SphereSide::primal, 360);
    const SetOracle ball(Ball({0.4, -1}, 0.7), kL2);
    EXPECT_LE(support_sum_check(ball, 1.5, dirs).max_deviation, 1e-12);
    const SetOracle lens(BallRegion({{0, 0}, {1, 0}}, 1.0, kL2));
    EXPECT_LE(support_sum_check(lens, 1.0, dirs).max_deviation, 1e-9);
    EXPECT_THROW(support_sum_check(SetOracle(Ball({0, 0}, 1), NormSpec::l1(2)), 2.0, dirs), Unsupported);

    // hull of 20 random points w.r.t. R = 3
    std::mt19937_64 rng(20);
    std::uniform_real_distribution<double> U(-1, 1);
    PointSet C(2);
    for (int i = 0; i < 20; ++i) C.push_back(Vec{U(rng), U(rng)});
    const SetOracle H = strong_hull(C, 3.0, kL2, HullBackend::exact2d).oracle();
    EXPECT_LE(support_sum_check(H, 3.0, dirs).max_deviation, 1e-9);
}

TEST(SigmaConvexity, Examples)
{
    const SigmaConvexityReport ok = sigma_convexity_check(SetOracle(Ball({0, 0}, 0.5), kL2), 1.0, 2000, 1);
    EXPECT_LE(ok.worst_violation, 1e-9);
    const SigmaConvexityReport bad = sigma_convexity_check(SetOracle(Ball({0, 0}, 1.5), kL2), 1.0, 2000, 1);
    EXPECT_GT(bad.worst_violation, 1e-6);
    const SetOracle square(PointSet{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, kL2);
    for (const double R : {1.0, 5.0, 20.0}) {
        EXPECT_GT(sigma_convexity_check(square, R, 10000, 2).worst_violation, 1e-9) << R;
    }
    const SetOracle lens(BallRegion({{0, 0}, {1, 0}}, 1.0, kL2));
    EXPECT_LE(sigma_convexity_check(lens, 1.0, 10000, 3).worst_violation, 1e-9);
}
