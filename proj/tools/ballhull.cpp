// ballhull command-line tool.

#include "ballhull/ballhull.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace ballhull;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kUnsupported = 3, kError = 4 };

struct Globals {
    std::string norm;
    double R = 0.0;
    double h = 0.0;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "json";
    std::string payload = "csv";
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// "euclidean", "l1", "linf" or "lp:<p>".
NormSpec parse_norm(const std::string& text, std::size_t dim)
{
    if (text.rfind("lp:", 0) == 0) return NormSpec::lp(std::stod(text.substr(3)), dim);
    const NormKind k = parse_norm_kind(text);
    if (k == NormKind::lp) throw UsageError("--norm lp needs an exponent, as in lp:3");
    return NormSpec(k, dim);
}

Vec parse_vec(const std::string& text)
{
    Vec v;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        std::size_t used = 0;
        v.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw UsageError("bad number \"" + cell + "\" in \"" + text + "\"");
    }
    if (v.empty()) throw UsageError("empty vector \"" + text + "\"");
    return v;
}

std::vector<double> parse_list(const std::string& text) { return text.empty() ? std::vector<double>{} : parse_vec(text); }

void emit(const Globals& g, const std::string& text)
{
    if (g.out.empty() || g.out == "-") {
        std::cout << text;
    } else {
        write_text_file(g.out, text);
    }
}

void emit_grid(const Globals& g, const GridFunction& f, const std::string& path)
{
    const PayloadFormat fmt = g.payload == "binary" ? PayloadFormat::binary : PayloadFormat::csv;
    if (path.empty() || path == "-") write_grid_function(std::cout, f, fmt);
    else save_grid_function(path, f, fmt);
}

json command_header(const std::string& command)
{
    return {{"schema", kReportSchema}, {"command", command}};
}

Scene scene_with_overrides(const std::string& path, const Globals& g)
{
    Scene sc = load_scene(path);
    if (!g.norm.empty()) sc.norm = parse_norm(g.norm, sc.dim());
    return sc;
}

double radius(const Globals& g, const Scene& sc)
{
    if (g.R > 0.0) return g.R;
    if (sc.R) return *sc.R;
    throw UsageError("no radius: pass --R or set \"R\" in the scene");
}

/// The scene's single set, or the union of its point sets.
SetOracle scene_set(const Scene& sc)
{
    if (sc.sets.empty()) throw UsageError("scene has no sets");
    const bool all_points =
        std::all_of(sc.sets.begin(), sc.sets.end(), [](const SetDescriptor& s) { return s.kind == SetKind::points; });
    if (all_points) return SetOracle(sc.all_points(), sc.norm);
    if (sc.sets.size() != 1) throw UsageError("scene must hold one set, or only point sets");
    return to_oracle(sc.sets.front(), sc.norm);
}

SvgStyle svg_style(const std::string& levels)
{
    SvgStyle st;
    st.levels = parse_list(levels);
    return st;
}

GridFunction load_function(const std::string& path, const Globals& g)
{
    GridFunction f = load_grid_function(path);
    if (!g.norm.empty()) {
        f = GridFunction(f.box(), f.h(), parse_norm(g.norm, f.dim()), f.values());
    }
    return f;
}

json points_report(const std::vector<std::string>& at, std::size_t dim, const std::function<json(const Vec&)>& eval)
{
    json rows = json::array();
    for (const auto& s : at) {
        const Vec x = parse_vec(s);
        if (x.size() != dim) throw UsageError(detail::concat("--at ", s, ": expected ", dim, " coordinates"));
        json row = eval(x);
        row["x"] = num(x);
        rows.push_back(row);
    }
    return rows;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ball polarity, strongly convex hulls and farthest-distance functions"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--norm", g.norm, "Norm: euclidean, l1, linf or lp:<p> (overrides the input's norm)");
    app.add_option("--R", g.R, "Polarity radius R > 0")->check(CLI::PositiveNumber);
    app.add_option("--h", g.h, "Grid spacing")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("--out", g.out, "Output file (default: stdout)");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "svg"}));
    app.add_option("--payload", g.payload, "Grid-function payload")->check(CLI::IsMember({"csv", "binary"}));

    std::string scene_path, backend_name, levels, function_path, grid_out, box_text, dual_box_text, region_path;
    std::vector<std::string> at;
    double dual_h = 0.0;
    std::size_t probes = 100, pairs = 10000;
    SuiteConfig scfg;
    std::string suite_name, property, norm_for_suite;
    std::size_t instances = 0;
    std::string report_path;
    std::uint64_t instance_seed_value = 0;

    auto* polar_cmd = app.add_subcommand("polar", "Polar of the scene set at radius R");
    polar_cmd->add_option("--scene", scene_path, "Scene JSON")->required()->check(CLI::ExistingFile);

    auto* hull_cmd = app.add_subcommand("hull", "R-strongly convex hull of the scene's points");
    hull_cmd->add_option("--scene", scene_path, "Scene JSON")->required()->check(CLI::ExistingFile);
    hull_cmd->add_option("--backend", backend_name, "exact2d or grid")->check(CLI::IsMember({"exact2d", "grid"}));

    auto* farthest_cmd = app.add_subcommand("farthest", "Farthest and nearest distances to the scene set");
    farthest_cmd->add_option("--scene", scene_path, "Scene JSON")->required()->check(CLI::ExistingFile);
    farthest_cmd->add_option("--at", at, "Query point x0,x1,... (repeatable); without it a grid of F is written");
    farthest_cmd->add_option("--box", box_text, "Grid box lo0,lo1,...,hi0,hi1,... (default: set box + 2R)");
    farthest_cmd->add_option("--levels", levels, "Contour levels for --format svg");

    auto* conj_cmd = app.add_subcommand("conjugate", "Fenchel conjugate of a grid function");
    conj_cmd->add_option("--function", function_path, "Grid-function file")->required()->check(CLI::ExistingFile);
    conj_cmd->add_option("--at", at, "Dual point (repeatable)");
    conj_cmd->add_option("--grid-out", grid_out, "Write f* on --dual-box with spacing --dual-h to this file");
    conj_cmd->add_option("--dual-box", dual_box_text, "Dual box lo0,lo1,...,hi0,hi1,...");
    conj_cmd->add_option("--dual-h", dual_h, "Dual grid spacing")->check(CLI::PositiveNumber);

    auto* eta_cmd = app.add_subcommand("eta", "Positively homogeneous extension of f* on the dual sphere");
    eta_cmd->add_option("--function", function_path, "Grid-function file")->required()->check(CLI::ExistingFile);
    eta_cmd->add_option("--at", at, "Dual point (repeatable)");
    eta_cmd->add_option("--pairs", pairs, "Midpoint-concavity pairs (0 to skip)");

    auto* gamma_cmd = app.add_subcommand("gamma", "Recover Gamma_f = {c : ||x - c|| <= f(x) for all x}");
    gamma_cmd->add_option("--function", function_path, "Grid-function file")->required()->check(CLI::ExistingFile);

    auto* transform_cmd = app.add_subcommand("transform", "f_R(y) = max{||y - x|| : f(x) <= R}");
    transform_cmd->add_option("--function", function_path, "Grid-function file")->required()->check(CLI::ExistingFile);
    transform_cmd->add_option("--grid-out", grid_out, "Write f_R to this grid-function file");

    auto* certify_cmd = app.add_subcommand("certify", "Test whether f is a farthest-distance function");
    certify_cmd->add_option("--function", function_path, "Grid-function file")->required()->check(CLI::ExistingFile);
    certify_cmd->add_option("--probes", probes, "Condition (a) probes")->check(CLI::PositiveNumber);
    certify_cmd->add_option("--pairs", pairs, "Condition (b) midpoint pairs")->check(CLI::PositiveNumber);

    auto add_suite_options = [&](CLI::App* c) {
        c->add_option("--instances", instances, "Instance count (default: per suite)");
        c->add_option("--report", report_path, "Report file (default: --out or stdout)");
        c->add_option("--backend", backend_name, "exact2d or grid")->check(CLI::IsMember({"exact2d", "grid"}));
        c->add_option("--dim", scfg.dim, "Dimension")->check(CLI::Range(1, 3));
        c->add_option("--probes", scfg.probes, "Membership probes per instance");
        c->add_option("--probe-grid", scfg.probe_grid, "Probe lattice nodes per axis");
        c->add_option("--grid-nodes", scfg.grid_nodes, "Function grid nodes per axis (overrides --h)");
        c->add_option("--max-points", scfg.max_points, "Largest point count per instance")->check(CLI::PositiveNumber);
        c->add_option("--box-half", scfg.box_half, "Half-width of function-lab boxes");
        c->add_option("--alpha", scfg.alpha, "alpha for the alpha-convexity gap")->check(CLI::PositiveNumber);
        c->add_option("--min-length", scfg.min_length, "Shortest alpha-gap segment");
        c->add_option("--samples", scfg.samples, "Samples for randomized checks");
        c->add_option("--instance-seed", instance_seed_value, "Re-run the single instance with this recorded seed");
        c->add_option("--k", scfg.k, "Tolerance slope k in k h + eps");
        c->add_option("--eps", scfg.eps, "Tolerance offset eps in k h + eps");
    };
    auto* check_cmd = app.add_subcommand("check", "Verify a polarity property on seeded instances");
    check_cmd->add_option("--property", property, "Property")->required()->check(CLI::IsMember(check_properties()));
    add_suite_options(check_cmd);

    auto* suite_cmd = app.add_subcommand("suite", "Run a verification suite");
    suite_cmd->add_option("name", suite_name, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    add_suite_options(suite_cmd);

    auto* render_cmd = app.add_subcommand("render", "Draw a scene, region or grid function as SVG");
    render_cmd->add_option("--scene", scene_path, "Scene JSON")->check(CLI::ExistingFile);
    render_cmd->add_option("--region", region_path, "Region JSON")->check(CLI::ExistingFile);
    render_cmd->add_option("--function", function_path, "Grid-function file")->check(CLI::ExistingFile);
    render_cmd->add_option("--levels", levels, "Contour levels l0,l1,...");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (polar_cmd->parsed()) {
            const Scene sc = scene_with_overrides(scene_path, g);
            const double R = radius(g, sc);
            SetOracle S = scene_set(sc);
            if (g.h > 0.0 && !S.exact2d()) S = S.with_resolution(g.h);
            const SetOracle P = polar_of(S, R);
            emit(g, g.format == "svg" ? render_svg(P) : region_to_json(P, R).dump(2) + "\n");
            return kOk;
        }

        if (hull_cmd->parsed()) {
            const Scene sc = scene_with_overrides(scene_path, g);
            const double R = radius(g, sc);
            const PointSet C = sc.all_points();
            if (C.empty()) throw UsageError("hull needs a scene with points");
            const HullBackend b = backend_name.empty() ? default_backend(sc.norm) : parse_backend(backend_name);
            const HullResult H = strong_hull(C, R, sc.norm, b, g.h);
            if (g.format == "svg") {
                SvgCanvas canvas;
                SvgStyle st;
                draw_set(canvas, H.oracle(), st, "hull");
                canvas.add_points(C, "input");
                emit(g, canvas.document());
            } else {
                emit(g, hull_to_json(H).dump(2) + "\n");
            }
            return kOk;
        }

        if (farthest_cmd->parsed()) {
            const Scene sc = scene_with_overrides(scene_path, g);
            SetOracle S = scene_set(sc);
            if (g.h > 0.0 && !S.exact2d()) S = S.with_resolution(g.h);
            if (!at.empty()) {
                const json rows = points_report(at, S.dim(), [&](const Vec& x) {
                    const Measured F = farthest_distance(S, x);
                    const Measured d = nearest_distance(S, x);
                    return json{{"farthest", num(F.value)}, {"nearest", num(d.value)},
                                {"resolution", std::max(F.resolution, d.resolution)}};
                });
                if (g.format == "csv") {
                    std::ostringstream s;
                    s << "x,farthest,nearest,resolution\n";
                    for (const auto& r : rows) s << '"' << r["x"].dump() << "\"," << r["farthest"].dump() << ','
                                                 << r["nearest"].dump() << ',' << r["resolution"].dump() << '\n';
                    emit(g, s.str());
                } else {
                    json rep = command_header("farthest");
                    rep["norm"] = norm_to_json(S.norm());
                    rep["points"] = rows;
                    emit(g, rep.dump(2) + "\n");
                }
                return kOk;
            }
            const double R = g.R > 0.0 ? g.R : sc.R.value_or(1.0);
            Box box;
            if (!box_text.empty()) {
                const Vec v = parse_vec(box_text);
                if (v.size() != 2 * S.dim()) throw UsageError("--box needs 2 * dim numbers");
                box.lo.assign(v.begin(), v.begin() + static_cast<long>(S.dim()));
                box.hi.assign(v.begin() + static_cast<long>(S.dim()), v.end());
            } else {
                box = S.bounding_box().expanded(2.0 * R);
            }
            const double h = g.h > 0.0 ? g.h : default_resolution(box);
            box = suite_detail::snapped_box(box, h);
            const GridFunction f = farthest_field(S, box, h);
            if (g.format == "svg") emit(g, render_svg(f, svg_style(levels)));
            else emit_grid(g, f, g.out);
            return kOk;
        }

        if (conj_cmd->parsed()) {
            const GridFunction f = load_function(function_path, g);
            json rep = command_header("conjugate");
            rep["function"] = {{"box", {{"lo", f.box().lo}, {"hi", f.box().hi}}}, {"h", f.h()}, {"norm", norm_to_json(f.norm())}};
            rep["points"] = points_report(at, f.dim(), [&](const Vec& xs) {
                return json{{"value", num(conjugate_at(f, xs))}, {"truncation_bound", num(conjugate_error_bound(f, xs))}};
            });
            if (!grid_out.empty()) {
                if (dual_box_text.empty() || dual_h <= 0.0) throw UsageError("--grid-out needs --dual-box and --dual-h");
                const Vec v = parse_vec(dual_box_text);
                if (v.size() != 2 * f.dim()) throw UsageError("--dual-box needs 2 * dim numbers");
                const Box db{Vec(v.begin(), v.begin() + static_cast<long>(f.dim())), Vec(v.begin() + static_cast<long>(f.dim()), v.end())};
                emit_grid(g, fenchel_conjugate(f, db, dual_h), grid_out);
                rep["grid_out"] = grid_out;
            }
            emit(g, rep.dump(2) + "\n");
            return kOk;
        }

        if (eta_cmd->parsed()) {
            const GridFunction f = load_function(function_path, g);
            json rep = command_header("eta");
            rep["points"] = points_report(at, f.dim(), [&](const Vec& xs) { return json{{"value", num(eta(f, xs))}}; });
            if (pairs > 0) {
                const ConditionBReport b = check_condition_b(f, pairs, g.seed);
                rep["concavity"] = {{"pairs", b.pairs}, {"worst_gap", num(b.worst_gap)}, {"tol_b", b.tol_b},
                                    {"finite", b.finite}, {"u", num(b.u)}, {"v", num(b.v)}, {"pass", b.certified()}};
            }
            emit(g, rep.dump(2) + "\n");
            return kOk;
        }

        if (gamma_cmd->parsed()) {
            const GridFunction f = load_function(function_path, g);
            const SetOracle G = gamma_recover(f);
            if (g.format == "svg") {
                emit(g, render_svg(G));
                return kOk;
            }
            json rep = command_header("gamma");
            const bool empty = std::holds_alternative<EmptySet>(G.rep()) || G.sample()->empty();
            rep["empty_at_resolution"] = empty;
            rep["resolution"] = f.h();
            if (!empty) {
                const auto s = G.sample();
                rep["bounding_box"] = {{"lo", num(G.bounding_box().lo)}, {"hi", num(G.bounding_box().hi)}};
                rep["sample_points"] = s->inside_count;
                rep["extreme_points"] = points_to_json(s->extremes);
                rep["roundtrip_error"] = num(gamma_roundtrip_error(f, G));
                rep["roundtrip_tolerance"] = 4.0 * f.h();
            }
            emit(g, rep.dump(2) + "\n");
            return kOk;
        }

        if (transform_cmd->parsed()) {
            const GridFunction f = load_function(function_path, g);
            if (g.R <= 0.0) throw UsageError("transform needs --R");
            const GridFunction fR = transform_fR(f, g.R);
            json rep = command_header("transform");
            rep["R"] = g.R;
            rep["h"] = f.h();
            rep["sublevel_extremes"] = sublevel_extremes(f, g.R).size();
            rep["min"] = num(fR.min_value());
            rep["max"] = num(fR.max_finite_value());
            if (!grid_out.empty()) {
                emit_grid(g, fR, grid_out);
                rep["grid_out"] = grid_out;
            }
            emit(g, rep.dump(2) + "\n");
            return kOk;
        }

        if (certify_cmd->parsed()) {
            const GridFunction f = load_function(function_path, g);
            const FarthestCertificate c = certify_farthest(f, probes, g.seed, pairs);
            double lo = kInfSentinel, hi = -kInfSentinel;
            for (double e : c.cond_a.estimates) lo = std::min(lo, e), hi = std::max(hi, e);
            json rep = command_header("certify");
            rep["seed"] = g.seed;
            rep["condition_a"] = {{"probes", points_to_json(c.cond_a.probes)}, {"estimates", num(c.cond_a.estimates)},
                                  {"min_estimate", num(lo)}, {"max_estimate", num(hi)}, {"eps", c.cond_a.eps},
                                  {"tol_a", c.cond_a.tol_a}, {"certified", c.cond_a.certified},
                                  {"shrunk_into_box", c.cond_a.shrunk}, {"pass", c.cond_a.all_certified()}};
            rep["condition_b"] = {{"pairs", c.cond_b.pairs}, {"worst_gap", num(c.cond_b.worst_gap)},
                                  {"tol_b", c.cond_b.tol_b}, {"finite", c.cond_b.finite}, {"u", num(c.cond_b.u)},
                                  {"v", num(c.cond_b.v)}, {"pass", c.cond_b.certified()}};
            rep["roundtrip"] = {{"error", num(c.roundtrip_error)}, {"tolerance", c.roundtrip_tol},
                                {"pass", c.roundtrip_error <= c.roundtrip_tol}};
            rep["certified"] = c.certified();
            emit(g, rep.dump(2) + "\n");
            return c.certified() ? kOk : kFailed;
        }

        if (check_cmd->parsed() || suite_cmd->parsed()) {
            const std::string name = check_cmd->parsed() ? property : suite_name;
            scfg.seed = g.seed;
            scfg.h = g.h;
            scfg.instances = instances;
            if (g.R > 0.0) scfg.R = g.R;
            if (!backend_name.empty()) scfg.backend = parse_backend(backend_name);
            if (!g.norm.empty()) {
                const NormSpec ns = parse_norm(g.norm, scfg.dim);
                scfg.norm = ns.kind();
                scfg.p = ns.p();
            }
            CLI::App* cmd = check_cmd->parsed() ? check_cmd : suite_cmd;
            if (cmd->count("--instance-seed") > 0) scfg.instance_seed = instance_seed_value;
            const VerificationReport r = run_suite(name, scfg);
            Globals out = g;
            if (!report_path.empty()) out.out = report_path;
            emit(out, report_text(r));
            if (!report_path.empty() || !g.out.empty()) {
                std::cerr << name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.instance_count() - r.failures()
                          << "/" << r.instance_count() << " instances, max error " << r.max_error() << ", budget "
                          << r.budget.at(r.h) << ")\n";
            }
            return r.passed() ? kOk : kFailed;
        }

        if (render_cmd->parsed()) {
            const SvgStyle st = svg_style(levels);
            const int given = !scene_path.empty() + !region_path.empty() + !function_path.empty();
            if (given != 1) throw UsageError("render needs exactly one of --scene, --region, --function");
            if (!scene_path.empty()) {
                emit(g, render_svg(scene_with_overrides(scene_path, g), st));
            } else if (!region_path.empty()) {
                emit(g, render_svg(region_from_json(read_json_file(region_path)), st));
            } else {
                const GridFunction f = load_function(function_path, g);
                if (st.levels.empty()) throw UsageError("render --function needs --levels");
                emit(g, render_svg(f, st));
            }
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "ballhull: " << e.what() << "\n";
        return kUsage;
    } catch (const Unsupported& e) {
        std::cerr << "ballhull: unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ballhull: invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "ballhull: " << e.what() << "\n";
        return kError;
    }
    return kUsage;
}
