#pragma once

#include "ballhull/io.hpp"

namespace ballhull {

inline constexpr const char* kReportSchema = "ballhull-report/1";

/// One tested inequality: value <= bound (or value < bound / value >= bound).
struct Check {
    std::string name;
    double value = 0.0;
    std::string relation = "<=";
    double bound = 0.0;

    bool passed() const
    {
        if (std::isnan(value)) return false;
        if (relation == "<=") return value <= bound;
        if (relation == "<") return value < bound;
        if (relation == ">=") return value >= bound;
        if (relation == ">") return value > bound;
        throw std::logic_error("Check: unknown relation " + relation);
    }
};

/// A point where a property fails, with the values that show it. `inputs`
/// is everything needed to recompute `values` standalone.
struct Witness {
    json inputs;
    json values;
};

struct InstanceResult {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    double h = 0.0;
    std::vector<Check> checks; ///< the first check is the instance's headline error
    json details = json::object();
    std::vector<Witness> witnesses;

    double error() const { return checks.empty() ? 0.0 : checks.front().value; }

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
    }
};

/// Tolerance of a suite: k * h + eps (on top of a fixed offset where the law
/// itself has one, as in ||F_P - F_C|| <= R).
struct Budget {
    double k = 0.0;
    double eps = 0.0;
    std::string note;

    double at(double h) const { return k * h + eps; }
};

struct VerificationReport {
    std::string property;
    std::uint64_t seed = 0;
    double h = 0.0;
    NormSpec norm;
    std::string backend;
    Budget budget;
    json config = json::object();
    std::vector<InstanceResult> instances;

    std::size_t instance_count() const { return instances.size(); }

    double max_error() const
    {
        double m = -std::numeric_limits<double>::infinity();
        for (const auto& r : instances) m = std::max(m, r.error());
        return m;
    }

    std::size_t failures() const
    {
        return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(),
                                                      [](const InstanceResult& r) { return !r.passed(); }));
    }

    bool passed() const { return !instances.empty() && failures() == 0; }
};

inline json check_to_json(const Check& c)
{
    return {{"name", c.name}, {"value", num(c.value)}, {"relation", c.relation}, {"bound", num(c.bound)},
            {"pass", c.passed()}};
}

inline json report_to_json(const VerificationReport& r)
{
    json inst = json::array();
    json witnesses = json::array();
    for (const auto& i : r.instances) {
        json checks = json::array();
        for (const auto& c : i.checks) checks.push_back(check_to_json(c));
        inst.push_back({{"index", i.index},
                        {"seed", i.seed},
                        {"h", i.h},
                        {"worst_error", num(i.error())},
                        {"checks", checks},
                        {"details", i.details},
                        {"pass", i.passed()}});
        for (const auto& w : i.witnesses) {
            witnesses.push_back({{"instance", i.index}, {"seed", i.seed}, {"inputs", w.inputs}, {"values", w.values}});
        }
    }
    return {{"schema", kReportSchema},
            {"property", r.property},
            {"instance_count", r.instance_count()},
            {"seed", r.seed},
            {"resolution", r.h},
            {"norm", norm_to_json(r.norm)},
            {"backend", r.backend},
            {"tolerance", {{"k", r.budget.k}, {"eps", r.budget.eps}, {"budget", num(r.budget.at(r.h))},
                           {"note", r.budget.note}}},
            {"config", r.config},
            {"max_error", num(r.max_error())},
            {"failures", r.failures()},
            {"pass", r.passed()},
            {"instances", inst},
            {"witnesses", witnesses}};
}

/// Two-space indented report text; identical inputs give identical bytes.
inline std::string report_text(const VerificationReport& r) { return report_to_json(r).dump(2) + "\n"; }

} // namespace ballhull
