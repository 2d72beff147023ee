#include "ballhull/svg.hpp"

#include <gtest/gtest.h>

#include <regex>

using namespace ballhull;

namespace {

const NormSpec kL2 = NormSpec::euclidean(2);

std::vector<double> numbers_after(const std::string& svg, const std::string& cls)
{
    const auto at = svg.find("class=\"" + cls + "\"");
    EXPECT_NE(at, std::string::npos);
    const auto d = svg.find(" d=\"", at) + 4;
    const std::string path = svg.substr(d, svg.find('"', d) - d);
    std::vector<double> out;
    const std::regex number(R"(-?[0-9][0-9.e+-]*)");
    for (auto it = std::sregex_iterator(path.begin(), path.end(), number); it != std::sregex_iterator(); ++it) {
        out.push_back(std::stod(it->str()));
    }
    return out;
}

} // namespace

TEST(Svg, LensPathUsesArcsThroughTheVertices)
{
    const SetOracle lens(BallRegion({{0, 0}, {1, 0}}, 1.0, kL2));
    const std::string svg = render_svg(lens);
    const std::vector<double> v = numbers_after(svg, "region");
    // M x y, then per arc: rx ry rotation large sweep x y
    ASSERT_EQ(v.size(), 2u + 2u * 7u);
    std::vector<std::pair<double, double>> pts{{v[0], -v[1]}, {v[7], -v[8]}, {v[14], -v[15]}};
    const double s = std::sqrt(3.0) / 2.0;
    EXPECT_NEAR(v[2], 1.0, 1e-12);
    for (const auto& [x, y] : pts) {
        EXPECT_NEAR(x, 0.5, 1e-6);
        EXPECT_NEAR(std::abs(y), s, 1e-6);
    }
    EXPECT_NEAR(pts[0].second, pts[2].second, 1e-6);
    EXPECT_NEAR(pts[0].second, -pts[1].second, 1e-6);
}

TEST(Svg, ContoursOfTheNormAreCircles)
{
    const double h = 0.05;
    const GridFunction f = GridFunction::sample(Box::cube(2, -2, 2), h, kL2, [](VecView x) { return kL2.eval(x); });
    SvgStyle st;
    st.levels = {1.0};
    const std::string svg = render_svg(f, st);
    const std::vector<double> v = numbers_after(svg, "levels");
    ASSERT_GT(v.size(), 100u);
    ASSERT_EQ(v.size() % 2, 0u);
    for (std::size_t i = 0; i < v.size(); i += 2) EXPECT_NEAR(std::hypot(v[i], v[i + 1]), 1.0, h);
}

TEST(Svg, Deterministic)
{
    const Scene sc = scene_from_json(json::parse(R"({
        "norm": {"kind": "euclidean", "dim": 2},
        "sets": [{"type": "points", "points": [[0, 0], [1, 0.2], [0.4, 0.9]]},
                 {"type": "ballregion", "generators": [[0, 0], [1, 0]], "radius": 1}]
    })"));
    EXPECT_EQ(render_svg(sc), render_svg(sc));
    const std::string svg = render_svg(sc);
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_EQ(svg.find("@DOT@"), std::string::npos);
}

TEST(Svg, SampledRegionsAndRejections)
{
    const NormSpec l1(NormKind::l1, 2);
    const std::string svg = render_svg(SetOracle(BallRegion({{0, 0}, {1, 0}}, 1.0, l1)));
    EXPECT_NE(svg.find("class=\"region\""), std::string::npos);
    EXPECT_THROW(render_svg(SetOracle(PointSet({{0, 0, 0}}), NormSpec::euclidean(3))), Unsupported);
}
