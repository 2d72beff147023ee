// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "ballhull/ballhull.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>

using namespace ballhull;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        pass = pass && ok;
        if (!detail.empty()) detail += "; ";
        detail += (ok ? "" : "FAILED ") + what;
    }
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

std::string summary(const VerificationReport& r)
{
    return detail::concat(r.property, "[", norm_to_json(r.norm)["kind"].get<std::string>(), "/", r.backend, "] ",
                          r.instance_count() - r.failures(), "/", r.instance_count(), " max ",
                          fmt("%.3g", r.max_error()), " <= ", fmt("%.3g", r.budget.at(r.h)));
}

SuiteConfig config(std::size_t instances, double h = 0.0)
{
    SuiteConfig c;
    c.instances = instances;
    c.h = h;
    return c;
}

void require_suite(Outcome& o, const std::string& name, const SuiteConfig& c)
{
    const VerificationReport r = run_suite(name, c);
    o.require(r.passed(), summary(r));
}

Outcome ball_polar_law()
{
    Outcome o;
    for (const HullBackend b : {HullBackend::exact2d, HullBackend::grid}) {
        SuiteConfig c = config(50, 0.01);
        c.backend = b;
        const auto t0 = Clock::now();
        const VerificationReport r = run_suite("ball-polar", c);
        const double t = seconds_since(t0);
        o.require(r.passed(), summary(r));
        o.require(t < 30.0, fmt("%.2f s < 30 s", t));
    }
    return o;
}

Outcome polarity_calculus()
{
    Outcome o;
    for (const char* s : {"ordrev", "incl", "triple", "hull-idem", "involution"}) {
        SuiteConfig exact = config(100, 0.01);
        exact.backend = HullBackend::exact2d;
        exact.k = 0.0;
        exact.eps = 1e-9;
        require_suite(o, s, exact);

        SuiteConfig grid = config(100, 0.01);
        grid.backend = HullBackend::grid;
        grid.k = 2.0;
        require_suite(o, s, grid);

        SuiteConfig l1 = grid;
        l1.norm = NormKind::l1;
        require_suite(o, s, l1);
    }
    return o;
}

/// Largest y with (0.5, y) in the hull, by bisection on [0, 1].
double apex(const HullResult& H)
{
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
        const double mid = 0.5 * (lo + hi);
        (H.contains(Vec{0.5, mid}, 0.0) ? lo : hi) = mid;
    }
    return lo;
}

Outcome hull_example()
{
    Outcome o;
    const NormSpec ns = NormSpec::euclidean(2);
    PointSet C(2);
    C.push_back(Vec{0.0, 0.0});
    C.push_back(Vec{1.0, 0.0});
    const double expect = 1.0 - std::sqrt(3.0) / 2.0;

    const HullResult H = strong_hull(C, 1.0, ns, HullBackend::exact2d);
    o.require(H.contains(Vec{0.5, 0.13}), "contains (0.5, 0.13)");
    o.require(!H.contains(Vec{0.5, 0.14}), "excludes (0.5, 0.14)");
    const double a = apex(H);
    o.require(std::abs(a - expect) <= 1e-9, fmt("apex %.12f vs %.12f", a, expect));

    const double h = 0.002;
    const HullResult G = strong_hull(C, 1.0, ns, HullBackend::grid, h);
    const double g = apex(G);
    o.require(std::abs(g - expect) <= 2.0 * h, fmt("grid apex %.6f within 2h", g));
    return o;
}

Outcome farthest_gap_bounds()
{
    Outcome o;
    for (const HullBackend b : {HullBackend::exact2d, HullBackend::grid}) {
        for (const char* s : {"ub-farthest", "gap-bound"}) {
            SuiteConfig c = config(50, 0.01);
            c.backend = b;
            c.probe_grid = 256;
            require_suite(o, s, c);
        }
    }
    return o;
}

Outcome support_identity()
{
    Outcome o;
    SuiteConfig c = config(25, 0.01);
    c.k = 2.0;
    c.eps = 1e-6;
    require_suite(o, "support-sum", c);
    return o;
}

Outcome function_transform()
{
    Outcome o;
    // seeds 0, 1, 2 are the (r, R) pairs (0, 1), (0.3, 1), (0.5, 2)
    for (std::uint64_t s = 0; s < 3; ++s) {
        SuiteConfig c = config(1, 0.05);
        c.instance_seed = s;
        c.box_half = 4.0;
        const VerificationReport r = run_suite("fR-involution", c);
        const InstanceResult& i = r.instances.front();
        o.require(r.passed(), fmt("(r, R) = (%g, %g): |fRR - f| %.3g, |fR - closed form| %.3g",
                                  i.details["instance"]["r"].get<double>(), i.details["instance"]["R"].get<double>(),
                                  i.checks[0].value, i.checks[1].value));
    }
    return o;
}

Outcome characterization()
{
    Outcome o;
    SuiteConfig c = config(20, 0.05);
    c.cert_probes = 100;
    c.samples = 10000;
    require_suite(o, "char-farthest", c);

    const double h = 0.025;
    const NormSpec ns = NormSpec::euclidean(2);
    const GridFunction q =
        GridFunction::sample(Box::cube(2, -2.0, 2.0), h, ns, [](VecView x) { return 0.5 * dot(x, x); });
    PointSet origin(2);
    origin.push_back(Vec{0.0, 0.0});
    const ConditionAReport a = check_condition_a(q, origin);
    o.require(a.estimates.front() <= 0.1, fmt("half |x|^2: estimate at 0 is %.4f <= 0.1", a.estimates.front()));
    o.require(!a.all_certified(), "half |x|^2: condition (a) rejected at 0");
    return o;
}

Outcome impossibility()
{
    Outcome o;
    SuiteConfig c = config(20, 0.1);
    c.alpha = 0.01;
    c.min_length = 10.0;
    require_suite(o, "no-strong-convexity", c);

    const NormSpec ns = NormSpec::euclidean(2);
    const GridFunction q =
        GridFunction::sample(Box::cube(2, -10.0, 10.0), 0.05, ns, [](VecView x) { return 0.5 * dot(x, x); });
    const AlphaGapSearch s = alpha_gap_search(q, 0.5, 10.0, 10000, 1);
    o.require(s.samples == 10000 && s.negatives == 0,
              fmt("half |x|^2, alpha 0.5: %g negatives in %g samples, worst gap %.3g", static_cast<double>(s.negatives),
                  static_cast<double>(s.samples), s.worst_gap));
    return o;
}

Outcome sublevel_strong_convexity()
{
    Outcome o;
    require_suite(o, "sublevel-sc", config(20, 0.02));
    return o;
}

Outcome performance()
{
    Outcome o;
    std::mt19937_64 rng(2024);
    const NormSpec ns = NormSpec::euclidean(2);
    PointSet C(2);
    while (C.size() < 10000) {
        const double x = detail::uniform(rng, -0.5, 0.5), y = detail::uniform(rng, -0.5, 0.5);
        if (x * x + y * y <= 0.25) C.push_back(Vec{x, y});
    }
    auto t0 = Clock::now();
    const HullResult H = strong_hull(C, 1.0, ns, HullBackend::exact2d);
    double t = seconds_since(t0);
    bool inside = true;
    for (std::size_t i = 0; i < C.size(); ++i) inside = inside && H.contains(C[i], 1e-9);
    o.require(!H.whole_space && inside, "exact2d hull of 10^4 points contains them");
    o.require(t < 5.0, fmt("exact2d polar + hull of 10^4 points %.3f s < 5 s", t));

    SuiteConfig c = config(1);
    c.grid_nodes = 512;
    t0 = Clock::now();
    const VerificationReport r = run_suite("farth-polar", c);
    t = seconds_since(t0);
    o.require(r.passed(), summary(r) + " on a 512^2 grid");
    o.require(t < 10.0, fmt("512^2 grid suite instance %.2f s < 10 s", t));
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
        {"ball-polar law", ball_polar_law},
        {"polarity calculus", polarity_calculus},
        {"hull example", hull_example},
        {"farthest-gap bounds", farthest_gap_bounds},
        {"support identity", support_identity},
        {"function transform", function_transform},
        {"characterization certificate", characterization},
        {"impossibility", impossibility},
        {"sublevel strong convexity", sublevel_strong_convexity},
        {"performance", performance},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << ", "
                  << fmt("%.1f s", seconds_since(t0)) << "): " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
