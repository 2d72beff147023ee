#include "ballhull/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace ballhull;

namespace {

const NormSpec kL2 = NormSpec::euclidean(2);

std::filesystem::path temp_dir()
{
    const auto d = std::filesystem::temp_directory_path() / "ballhull_test_io";
    std::filesystem::create_directories(d);
    return d;
}

} // namespace

TEST(Numbers, InfinityAndNan)
{
    EXPECT_EQ(num(std::numeric_limits<double>::infinity()), "inf");
    EXPECT_EQ(num(-std::numeric_limits<double>::infinity()), "-inf");
    EXPECT_TRUE(num(std::nan("")).is_null());
    EXPECT_EQ(num_from_json(json("inf")), kInfSentinel);
    EXPECT_EQ(num_from_json(json(1.5)), 1.5);
    EXPECT_THROW(num_from_json(json("abc")), std::invalid_argument);
}

TEST(SceneIo, RoundTrip)
{
    const json j = json::parse(R"({
        "norm": {"kind": "l1", "dim": 2},
        "sets": [
            {"type": "points", "points": [[0, 0], [1, 0.5]]},
            {"type": "ball", "center": [0.5, 0.5], "radius": 0.25},
            {"type": "ballregion", "generators": [[0, 0], [1, 0]], "radius": 1}
        ],
        "R": 1.5
    })");
    const Scene sc = scene_from_json(j);
    ASSERT_EQ(sc.sets.size(), 3u);
    EXPECT_EQ(sc.norm.kind(), NormKind::l1);
    EXPECT_EQ(sc.all_points().size(), 2u);
    EXPECT_EQ(*sc.R, 1.5);
    EXPECT_EQ(scene_to_json(scene_from_json(scene_to_json(sc))), scene_to_json(sc));

    EXPECT_TRUE(to_oracle(sc.sets[1], sc.norm).contains(Vec{0.5, 0.74}));
    EXPECT_FALSE(to_oracle(sc.sets[1], sc.norm).contains(Vec{0.6, 0.7}));
    EXPECT_TRUE(to_oracle(sc.sets[2], sc.norm).contains(Vec{0.5, 0.4}));
}

TEST(SceneIo, RejectsMalformedInput)
{
    auto parse = [](const char* s) { return scene_from_json(json::parse(s)); };
    EXPECT_THROW(parse(R"({"norm":{"kind":"euclidean","dim":2},"sets":[{"type":"cone"}]})"), std::invalid_argument);
    EXPECT_THROW(parse(R"({"norm":{"kind":"euclidean","dim":2},"sets":[{"type":"points","points":[[0,0,0]]}]})"),
                 std::invalid_argument);
    EXPECT_THROW(parse(R"({"norm":{"kind":"euclidean","dim":2},"sets":[{"type":"points","points":[]}]})"),
                 std::invalid_argument);
    EXPECT_THROW(parse(R"({"norm":{"kind":"euclidean","dim":2},"sets":[],"R":-1})"), std::invalid_argument);
    EXPECT_THROW(parse(R"({"norm":{"kind":"euclidean","dim":2},"sets":[{"type":"ball","center":[0,0],"radius":-1}]})"),
                 std::invalid_argument);
}

TEST(SceneIo, FunctionsResolveAgainstSceneDirectory)
{
    const auto dir = temp_dir();
    const GridFunction f = GridFunction::sample(Box::cube(2, -1, 1), 0.5, kL2, [](VecView x) { return x[0]; });
    save_grid_function((dir / "f.json").string(), f);
    write_text_file((dir / "scene.json").string(),
                    R"({"norm":{"kind":"euclidean","dim":2},"sets":[],"functions":["f.json"]})");
    const Scene sc = load_scene((dir / "scene.json").string());
    ASSERT_EQ(sc.functions.size(), 1u);
    EXPECT_EQ(load_grid_function(sc.functions[0]).size(), f.size());

    write_text_file((dir / "bad.json").string(),
                    R"({"norm":{"kind":"euclidean","dim":2},"sets":[],"functions":["missing.json"]})");
    EXPECT_ANY_THROW(load_scene((dir / "bad.json").string()));
}

TEST(RegionIo, ArcRegionRoundTrip)
{
    const SetOracle lens(BallRegion({{0, 0}, {1, 0}}, 1.0, kL2));
    const json j = region_to_json(lens, 1.0);
    ASSERT_TRUE(j.contains("arcs"));
    EXPECT_EQ(j["arcs"].size(), 2u);
    EXPECT_EQ(j["vertices"].size(), 2u);
    const SetOracle back = region_from_json(j);
    ASSERT_NE(back.exact2d(), nullptr);
    const PointSet a = lens.exact2d()->boundary_samples(0.05), b = back.exact2d()->boundary_samples(0.05);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LT(euclidean_distance(a[i], b[i]), 1e-12);
}

TEST(RegionIo, GeneratorsAndEmpty)
{
    const NormSpec l1 = NormSpec(NormKind::l1, 2);
    const SetOracle S(BallRegion({{0, 0}, {1, 0}}, 1.0, l1));
    const SetOracle back = region_from_json(region_to_json(S, 1.0));
    EXPECT_TRUE(back.contains(Vec{0.5, 0.5}));
    EXPECT_FALSE(back.contains(Vec{0.5, 0.6}));

    const SetOracle far(BallRegion({{0, 0}, {5, 0}}, 1.0, kL2));
    const json e = region_to_json(far, 1.0);
    EXPECT_EQ(e["kind"], "empty");
    EXPECT_FALSE(region_from_json(e).contains(Vec{2.5, 0}));
    EXPECT_THROW(region_from_json(json::parse(R"({"norm":{"kind":"euclidean","dim":2}})")), std::invalid_argument);
}

TEST(RegionIo, HullJson)
{
    const HullResult H = strong_hull({{0, 0}, {1, 0}}, 1.0, kL2, HullBackend::exact2d);
    const json j = hull_to_json(H);
    EXPECT_EQ(j["backend"], "exact2d");
    const SetOracle back = region_from_json(j);
    EXPECT_TRUE(back.contains(Vec{0.5, 0.13}));
    EXPECT_FALSE(back.contains(Vec{0.5, 0.14}));
}
