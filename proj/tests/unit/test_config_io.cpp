#include "z2rep/json_io.hpp"
#include "z2rep/run_config.hpp"
#include "z2rep/rational.hpp"
#include "z2rep/sampling.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace z2rep;

TEST(RunConfig, Defaults)
{
    const RunConfig cfg;
    EXPECT_EQ(cfg.level_cap, 16);
    EXPECT_EQ(cfg.sweep_m_cap(), 6);
    EXPECT_EQ(cfg.classify_m_cap(), 32);
    EXPECT_EQ(cfg.samples, 5);
    EXPECT_EQ(cfg.output_format, OutputFormat::json);
}

TEST(RunConfig, JsonKeys)
{
    RunConfig cfg;
    apply_config_json(cfg, R"({"level_cap": 9, "M_cap": 3, "samples": 2, "seed": 42, "output_format": "csv"})");
    EXPECT_EQ(cfg.level_cap, 9);
    EXPECT_EQ(cfg.sweep_m_cap(), 3);
    EXPECT_EQ(cfg.classify_m_cap(), 3);
    EXPECT_EQ(cfg.samples, 2);
    EXPECT_EQ(cfg.seed, 42u);
    EXPECT_EQ(cfg.output_format, OutputFormat::csv);
}

TEST(RunConfig, Rejections)
{
    RunConfig cfg;
    EXPECT_THROW(apply_config_json(cfg, R"({"levelcap": 3})"), std::invalid_argument);
    EXPECT_THROW(apply_config_json(cfg, R"({"level_cap": "3"})"), std::invalid_argument);
    EXPECT_THROW(apply_config_json(cfg, "[1]"), std::invalid_argument);
    EXPECT_THROW(apply_config_json(cfg, "{"), std::invalid_argument);
    EXPECT_THROW(parse_output_format("xml"), std::invalid_argument);
    cfg.level_cap = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(RunConfig, Environment)
{
    const auto path = std::filesystem::temp_directory_path() / "z2rep_config_test.json";
    std::ofstream(path) << R"({"samples": 7})";
    ::setenv("Z2REP_CONFIG", path.c_str(), 1);
    RunConfig cfg;
    apply_config_env(cfg);
    ::unsetenv("Z2REP_CONFIG");
    std::filesystem::remove(path);
    EXPECT_EQ(cfg.samples, 7);
}

TEST(Sampler, DeterministicAndBounded)
{
    RationalSampler a(3), b(3);
    for (int i = 0; i < 50; ++i) {
        const Rational x = a.next();
        EXPECT_EQ(x, b.next());
        EXPECT_LE(abs(x.get_num()), 50);
        EXPECT_LE(x.get_den(), 50);
        EXPECT_NE(a.next_nonzero(), 0);
        b.next_nonzero();
    }
}

TEST(Json, Shapes)
{
    EXPECT_EQ(to_json(parse_rational("-3/6")), "-1/2");
    const auto kind = VermaKind::mr_lambda(1, 1);
    EXPECT_EQ(kind_tag(kind), "MrLambda");
    const Json j = to_json(find_singular(kind, 1, {1, 0}));
    EXPECT_EQ(j["closed_form_match"], "exact");
    EXPECT_TRUE(j.contains("nullspace"));
    EXPECT_EQ(to_json(verify_axioms())["passed"], true);
}
