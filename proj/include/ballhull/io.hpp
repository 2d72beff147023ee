#pragma once

#include "ballhull/grid_function.hpp"
#include "ballhull/polarity.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace ballhull {

using json = nlohmann::json;

/// Numbers as JSON, with values beyond the sentinel threshold written as the
/// strings "inf" / "-inf" and NaN as null.
inline json num(double v)
{
    if (std::isnan(v)) return nullptr;
    if (v >= kInfThreshold) return "inf";
    if (v <= -kInfThreshold) return "-inf";
    return v;
}

inline json num(VecView v)
{
    json a = json::array();
    for (double x : v) a.push_back(num(x));
    return a;
}

inline double num_from_json(const json& j)
{
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") return kInfSentinel;
        if (s == "-inf") return -kInfSentinel;
        throw std::invalid_argument("expected a number, got \"" + s + "\"");
    }
    if (!j.is_number()) throw std::invalid_argument("expected a number");
    return j.get<double>();
}

inline Vec vec_from_json(const json& j, std::size_t dim, const char* what)
{
    if (!j.is_array()) throw std::invalid_argument(detail::concat(what, ": expected an array"));
    Vec v;
    for (const auto& x : j) v.push_back(num_from_json(x));
    if (v.size() != dim) throw std::invalid_argument(detail::concat(what, ": expected ", dim, " coordinates, got ", v.size()));
    detail::require_finite(v, what);
    return v;
}

inline json points_to_json(const PointSet& s)
{
    json a = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) a.push_back(num(s[i]));
    return a;
}

inline PointSet points_from_json(const json& j, std::size_t dim, const char* what)
{
    if (!j.is_array()) throw std::invalid_argument(detail::concat(what, ": expected an array of points"));
    PointSet s(dim);
    for (const auto& p : j) s.push_back(vec_from_json(p, dim, what));
    return s;
}

// Scenes.

enum class SetKind { points, ball, ballregion };

struct SetDescriptor {
    SetKind kind = SetKind::points;
    PointSet points;      ///< points, or generators of a ball region
    Vec center;           ///< ball
    double radius = 0.0;  ///< ball radius or ball-region radius
};

struct Scene {
    NormSpec norm = NormSpec::euclidean(2);
    std::vector<SetDescriptor> sets;
    std::vector<std::string> functions; ///< grid-function files, resolved against the scene directory
    std::optional<double> R;

    std::size_t dim() const { return norm.dim(); }

    /// Union of all finite sets in the scene.
    PointSet all_points() const
    {
        PointSet out(dim());
        for (const auto& s : sets) {
            if (s.kind != SetKind::points) continue;
            for (std::size_t i = 0; i < s.points.size(); ++i) out.push_back(s.points[i]);
        }
        return out;
    }
};

inline SetOracle to_oracle(const SetDescriptor& s, const NormSpec& ns)
{
    switch (s.kind) {
    case SetKind::points: return SetOracle(s.points, ns);
    case SetKind::ball: return SetOracle(Ball(s.center, s.radius), ns);
    case SetKind::ballregion: return SetOracle(BallRegion(s.points, s.radius, ns));
    }
    throw std::logic_error("to_oracle: bad set kind");
}

inline json set_to_json(const SetDescriptor& s)
{
    switch (s.kind) {
    case SetKind::points: return {{"type", "points"}, {"points", points_to_json(s.points)}};
    case SetKind::ball: return {{"type", "ball"}, {"center", num(s.center)}, {"radius", num(s.radius)}};
    case SetKind::ballregion:
        return {{"type", "ballregion"}, {"generators", points_to_json(s.points)}, {"radius", num(s.radius)}};
    }
    throw std::logic_error("set_to_json: bad set kind");
}

inline SetDescriptor set_from_json(const json& j, std::size_t dim)
{
    if (!j.is_object() || !j.contains("type")) throw std::invalid_argument("scene set: expected an object with \"type\"");
    const auto type = j.at("type").get<std::string>();
    SetDescriptor s;
    if (type == "points") {
        s.kind = SetKind::points;
        s.points = points_from_json(j.at("points"), dim, "scene points");
        if (s.points.empty()) throw std::invalid_argument("scene points: empty point list");
    } else if (type == "ball") {
        s.kind = SetKind::ball;
        s.center = vec_from_json(j.at("center"), dim, "scene ball center");
        s.radius = num_from_json(j.at("radius"));
        if (!(s.radius >= 0.0) || !std::isfinite(s.radius)) throw std::invalid_argument("scene ball: radius must be finite and >= 0");
    } else if (type == "ballregion") {
        s.kind = SetKind::ballregion;
        s.points = points_from_json(j.at("generators"), dim, "scene ballregion generators");
        s.radius = num_from_json(j.at("radius"));
        if (!(s.radius > 0.0) || !std::isfinite(s.radius)) throw std::invalid_argument("scene ballregion: radius must be finite and > 0");
    } else {
        throw std::invalid_argument("scene set: unknown type \"" + type + "\"");
    }
    return s;
}

inline json scene_to_json(const Scene& sc)
{
    json j{{"norm", norm_to_json(sc.norm)}, {"sets", json::array()}};
    for (const auto& s : sc.sets) j["sets"].push_back(set_to_json(s));
    if (!sc.functions.empty()) j["functions"] = sc.functions;
    if (sc.R) j["R"] = *sc.R;
    return j;
}

/// Parses a scene. Function references are resolved against `base_dir` and
/// must name readable grid-function files.
inline Scene scene_from_json(const json& j, const std::filesystem::path& base_dir = {})
{
    if (!j.is_object()) throw std::invalid_argument("scene: expected an object");
    Scene sc;
    sc.norm = norm_from_json(j.at("norm"));
    for (const auto& s : j.at("sets")) sc.sets.push_back(set_from_json(s, sc.dim()));
    if (j.contains("functions")) {
        for (const auto& f : j.at("functions")) {
            std::filesystem::path p = f.get<std::string>();
            if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
            const GridFunction g = load_grid_function(p.string());
            if (g.dim() != sc.dim()) throw std::invalid_argument("scene: function " + p.string() + " has the wrong dimension");
            sc.functions.push_back(p.string());
        }
    }
    if (j.contains("R")) {
        const double R = num_from_json(j.at("R"));
        if (!(R > 0.0) || !std::isfinite(R)) throw std::invalid_argument("scene: R must be finite and > 0");
        sc.R = R;
    }
    return sc;
}

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline Scene load_scene(const std::string& path)
{
    return scene_from_json(read_json_file(path), std::filesystem::path(path).parent_path());
}

// Regions: exact arc structures as {"arcs","vertices"}, everything else as
// {"generators","radius"}.

inline json arc_region_to_json(const ArcRegion& a)
{
    static const char* kinds[] = {"empty", "point", "full_disk", "arcs"};
    json j{{"kind", kinds[static_cast<int>(a.kind())]}, {"radius", a.radius()}, {"arcs", json::array()},
           {"vertices", json::array()}};
    for (const Arc& arc : a.arcs()) {
        j["arcs"].push_back({{"center", num(arc.center)},
                             {"radius", arc.radius},
                             {"start_angle", arc.start_angle},
                             {"end_angle", arc.end_angle}});
    }
    for (const ArcVertex& v : a.vertices()) {
        j["vertices"].push_back({{"point", num(v.point)}, {"arc_in", v.arc_in}, {"arc_out", v.arc_out}});
    }
    return j;
}

inline ArcRegion arc_region_from_json(const json& j)
{
    const double R = num_from_json(j.at("radius"));
    const auto kind = j.value("kind", std::string("arcs"));
    if (kind == "empty") return ArcRegion::empty(R);
    if (kind == "point") return ArcRegion::point(vec_from_json(j.at("vertices").at(0).at("point"), 2, "region vertex"), R);
    PointSet centers(2);
    for (const auto& a : j.at("arcs")) centers.push_back(vec_from_json(a.at("center"), 2, "region arc center"));
    if (centers.empty()) throw std::invalid_argument("region: no arcs");
    if (kind == "full_disk") return ArcRegion::disk(Vec(centers[0].begin(), centers[0].end()), R);
    return build_arc_region(BallRegion(centers, R, NormSpec::euclidean(2)));
}

/// Region file for a set oracle. Exact planar regions are written as arcs;
/// ball regions and balls as generators; other sets as the ball region of
/// their sampled extremes at radius `R_hint`.
inline json region_to_json(const SetOracle& S, double R_hint)
{
    json j;
    const auto& rep = S.rep();
    if (const ArcRegion* a = S.exact2d()) {
        j = arc_region_to_json(*a);
        if (const auto* B = std::get_if<BallRegion>(&rep)) j["generators"] = points_to_json(B->generators());
    } else if (std::holds_alternative<EmptySet>(rep)) {
        j = {{"kind", "empty"}, {"arcs", json::array()}, {"vertices", json::array()}, {"radius", R_hint}};
    } else if (const auto* B = std::get_if<BallRegion>(&rep)) {
        j = {{"generators", points_to_json(B->generators())}, {"radius", B->radius()}};
        if (B->whole_space()) j["whole_space"] = true;
    } else if (const auto* b = std::get_if<Ball>(&rep)) {
        j = {{"generators", json::array({num(b->center)})}, {"radius", b->radius}};
    } else if (const auto* C = std::get_if<PointSet>(&rep)) {
        j = {{"points", points_to_json(*C)}};
    } else {
        const auto g = S.sample();
        j = {{"generators", points_to_json(g->extremes)}, {"radius", R_hint}, {"resolution", g->resolution()}};
        if (g->empty()) j["empty_at_resolution"] = true;
    }
    j["norm"] = norm_to_json(S.norm());
    if (S.resolution() > 0.0 && !S.exact2d() && !std::holds_alternative<PointSet>(rep)) j["resolution"] = S.resolution();
    return j;
}

inline json hull_to_json(const HullResult& H)
{
    json j;
    if (H.whole_space) {
        j = {{"generators", json::array()}, {"radius", H.radius}, {"whole_space", true}};
    } else if (H.hull_arcs) {
        j = arc_region_to_json(*H.hull_arcs);
    } else {
        j = {{"generators", points_to_json(H.polar_points)}, {"radius", H.radius}};
    }
    j["backend"] = to_string(H.backend);
    j["resolution"] = H.resolution;
    j["generator_count"] = H.generator_count();
    j["norm"] = norm_to_json(H.norm);
    return j;
}

inline SetOracle region_from_json(const json& j, std::optional<NormSpec> ns = std::nullopt)
{
    if (!j.is_object()) throw std::invalid_argument("region: expected an object");
    const NormSpec norm = j.contains("norm") ? norm_from_json(j.at("norm")) : ns.value_or(NormSpec::euclidean(2));
    if (j.contains("arcs")) {
        detail::require_euclidean_plane(norm, "region with arcs");
        return SetOracle(arc_region_from_json(j), norm);
    }
    if (j.contains("generators")) {
        const double R = num_from_json(j.at("radius"));
        const PointSet G = points_from_json(j.at("generators"), norm.dim(), "region generators");
        if (G.empty() && !j.value("whole_space", false)) return SetOracle::empty(norm);
        SetOracle S(BallRegion(G, R, norm));
        if (j.contains("resolution") && num_from_json(j.at("resolution")) > 0.0) {
            S = S.with_resolution(num_from_json(j.at("resolution")));
        }
        return S;
    }
    if (j.contains("points")) return SetOracle(points_from_json(j.at("points"), norm.dim(), "region points"), norm);
    throw std::invalid_argument("region: expected \"arcs\", \"generators\" or \"points\"");
}

} // namespace ballhull
