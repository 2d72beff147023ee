#include "ballhull/instances.hpp"

#include <gtest/gtest.h>

using namespace ballhull;

TEST(Instances, SeedsAreDistinctAndStable)
{
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(instance_seed(7, i));
    EXPECT_EQ(seen.size(), 1000u);
    EXPECT_EQ(instance_seed(7, 3), instance_seed(7, 3));
    EXPECT_NE(instance_seed(7, 3), instance_seed(8, 3));
}

TEST(Instances, Deterministic)
{
    InstanceParams p;
    for (InstanceKind k : {InstanceKind::points, InstanceKind::ball, InstanceKind::hull}) {
        EXPECT_EQ(scene_to_json(generate_instance(k, 42, p)), scene_to_json(generate_instance(k, 42, p)));
        EXPECT_NE(scene_to_json(generate_instance(k, 42, p)), scene_to_json(generate_instance(k, 43, p)));
    }
}

TEST(Instances, HullInstancesFitTheirRadius)
{
    for (NormKind nk : {NormKind::euclidean, NormKind::l1, NormKind::linf}) {
        InstanceParams p;
        p.norm = nk;
        for (std::uint64_t s = 0; s < 50; ++s) {
            const Scene sc = generate_instance(InstanceKind::hull, s, p);
            const PointSet& C = sc.sets.front().points;
            ASSERT_GE(C.size(), p.min_points);
            ASSERT_LE(C.size(), p.max_points);
            ASSERT_GE(*sc.R, p.R_lo);
            ASSERT_LE(*sc.R, p.R_hi);
            double diam = 0.0;
            for (std::size_t i = 0; i < C.size(); ++i) {
                for (std::size_t j = 0; j < i; ++j) diam = std::max(diam, sc.norm.distance(C[i], C[j]));
            }
            EXPECT_LE(diam, *sc.R + 1e-12);
        }
    }
}

TEST(Instances, WideHullInstancesHaveNonemptyPolar)
{
    InstanceParams p;
    p.allow_diam_2R = true;
    for (std::uint64_t s = 0; s < 30; ++s) {
        const Scene sc = generate_instance(InstanceKind::hull, s, p);
        EXPECT_TRUE(detail::polar_nonempty(sc.sets.front().points, *sc.R, sc.norm));
    }
}

TEST(Instances, RejectsBadParameters)
{
    InstanceParams p;
    p.dim = 4;
    EXPECT_THROW(generate_instance(InstanceKind::points, 0, p), std::invalid_argument);
    p = {};
    p.R_lo = 0.0;
    EXPECT_THROW(generate_instance(InstanceKind::points, 0, p), std::invalid_argument);
    EXPECT_THROW(parse_instance_kind("cloud"), std::invalid_argument);
}
