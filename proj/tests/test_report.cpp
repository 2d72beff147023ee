#include "ballhull/suites.hpp"

#include <gtest/gtest.h>

using namespace ballhull;

namespace {

SuiteConfig small(std::size_t n)
{
    SuiteConfig c;
    c.instances = n;
    c.probes = 2000;
    return c;
}

} // namespace

TEST(Report, SchemaAndKeys)
{
    const VerificationReport r = run_suite("ordrev", small(3));
    const json j = report_to_json(r);
    EXPECT_EQ(j["schema"], "ballhull-report/1");
    for (const char* k : {"property", "instance_count", "seed", "resolution", "norm", "backend", "tolerance", "config",
                          "max_error", "failures", "pass", "instances", "witnesses"}) {
        EXPECT_TRUE(j.contains(k)) << k;
    }
    EXPECT_EQ(j["instance_count"], 3);
    EXPECT_EQ(j["instances"].size(), 3u);
    EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Report, ByteIdenticalForIdenticalConfig)
{
    for (const char* s : {"ordrev", "involution", "ball-polar", "support-sum"}) {
        EXPECT_EQ(report_text(run_suite(s, small(3))), report_text(run_suite(s, small(3)))) << s;
    }
    SuiteConfig c = small(3);
    c.seed = 1;
    EXPECT_NE(report_text(run_suite("ordrev", small(3))), report_text(run_suite("ordrev", c)));
}

TEST(Report, SingleInstanceReplay)
{
    const VerificationReport all = run_suite("triple", small(4));
    SuiteConfig one = small(1);
    one.instance_seed = all.instances[2].seed;
    const VerificationReport r = run_suite("triple", one);
    ASSERT_EQ(r.instances.size(), 1u);
    EXPECT_EQ(r.instances[0].seed, all.instances[2].seed);
    EXPECT_EQ(r.instances[0].error(), all.instances[2].error());
    EXPECT_EQ(r.instances[0].details, all.instances[2].details);
}

TEST(Report, FailuresCarryWitnesses)
{
    // a negative budget makes every nonzero deviation a failure
    SuiteConfig c = small(3);
    c.backend = HullBackend::grid;
    c.k = 0.0;
    c.eps = -1.0;
    const VerificationReport r = run_suite("ball-polar", c);
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.failures(), 3u);
    const json j = report_to_json(r);
    EXPECT_FALSE(j["pass"].get<bool>());
    EXPECT_GT(j["witnesses"].size(), 0u);
    EXPECT_TRUE(j["witnesses"][0].contains("inputs"));
}

TEST(Report, CheckRelations)
{
    EXPECT_TRUE((Check{"a", 1.0, "<=", 1.0}).passed());
    EXPECT_FALSE((Check{"a", 1.0, "<", 1.0}).passed());
    EXPECT_TRUE((Check{"a", 1.0, ">=", 1.0}).passed());
    EXPECT_FALSE((Check{"a", std::nan(""), "<=", 1.0}).passed());
}

TEST(Suites, UnknownAndUnsupported)
{
    EXPECT_THROW(run_suite("nope", small(1)), std::invalid_argument);
    SuiteConfig c = small(1);
    c.norm = NormKind::l1;
    EXPECT_THROW(run_suite("support-sum", c), Unsupported);
    c.backend = HullBackend::exact2d;
    EXPECT_THROW(run_suite("ordrev", c), Unsupported);
}

TEST(Suites, EverySuiteRunsOneInstance)
{
    for (const std::string& s : suite_names()) {
        SuiteConfig c = small(1);
        if (s == "char-farthest" || s == "fR-involution" || s == "no-strong-convexity") c.grid_nodes = 81;
        const VerificationReport r = run_suite(s, c);
        EXPECT_EQ(r.instance_count(), 1u) << s;
        EXPECT_TRUE(r.passed()) << s << "\n" << report_text(r);
    }
}

TEST(Suites, ThreeDimensionalGrid)
{
    SuiteConfig c = small(2);
    c.dim = 3;
    c.h = 0.05;
    c.probes = 500;
    const VerificationReport r = run_suite("incl", c);
    EXPECT_TRUE(r.passed()) << report_text(r);
}
