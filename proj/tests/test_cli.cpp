#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cqs/cli.hpp"

using cqs::cli::run;
using cqs::cli::RunRequest;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

RunRequest req(std::string sub, cqs::Int n, cqs::Int q, std::string format = "json") {
    RunRequest r;
    r.subcommand = std::move(sub);
    r.n = n;
    r.q = q;
    r.format = std::move(format);
    return r;
}

int tool_exit(const std::string& args) {
    std::string cmd = std::string(CQS_TOOL) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

class Golden : public ::testing::TestWithParam<std::string> {};

TEST_P(Golden, TextReportMatches) {
    auto sub = GetParam();
    auto res = run(req(sub, 11, 7, "text"));
    ASSERT_EQ(res.exit_code, 0) << res.error;
    EXPECT_EQ(res.output, slurp(std::string(GOLDEN_DIR) + "/" + sub + "_11_7.txt"));
}

INSTANTIATE_TEST_SUITE_P(Subcommands, Golden,
                         ::testing::Values("resolve", "invariants", "toric", "mckay", "hilb", "gfan", "deform",
                                           "artin", "reconstruct", "verify"));

TEST(Cli, GoldenDeformationOfDualInput) {
    auto res = run(req("deform", 11, 4, "text"));
    ASSERT_EQ(res.exit_code, 0) << res.error;
    EXPECT_EQ(res.output, slurp(std::string(GOLDEN_DIR) + "/deform_11_4.txt"));
    EXPECT_NE(res.output.find("input (11,4), a-expansion [2,3,2,2] = 11/7"), std::string::npos);
}

TEST(Cli, GoldenDotAndJson) {
    EXPECT_EQ(run(req("reconstruct", 11, 7, "dot")).output, slurp(std::string(GOLDEN_DIR) + "/reconstruct_11_7.dot"));
    EXPECT_EQ(run(req("hilb", 11, 7)).output, slurp(std::string(GOLDEN_DIR) + "/hilb_11_7.json"));
}

TEST(Cli, ResolveText) {
    auto out = run(req("resolve", 11, 7, "text")).output;
    for (auto s : {"[2,3,2,2]", "dual [3,4]", "e=4", "r=4"}) EXPECT_NE(out.find(s), std::string::npos) << s;
}

TEST(Cli, JsonSchemaAndRoundTrip) {
    std::map<std::string, std::vector<std::string>> keys{
        {"resolve", {"fraction", "dual_fraction"}}, {"invariants", {"generators", "equations"}},
        {"toric", {"fan"}},                         {"mckay", {"special"}},
        {"hilb", {"clusters"}},                     {"gfan", {"fan"}},
        {"deform", {"deformation"}},                {"artin", {"reconstruction"}},
        {"reconstruct", {"reconstruction"}},        {"verify", {"fraction", "dual_fraction", "checks"}}};
    for (auto& [sub, want] : keys) {
        auto res = run(req(sub, 11, 7));
        ASSERT_EQ(res.exit_code, 0) << sub << ": " << res.error;
        auto j = nlohmann::ordered_json::parse(res.output);
        EXPECT_EQ(j["input"]["n"], 11);
        EXPECT_EQ(j["input"]["subcommand"], sub);
        for (auto& k : want) EXPECT_TRUE(j.contains(k)) << sub << " lacks " << k;
        EXPECT_EQ(j.dump(2) + "\n", res.output) << sub;
    }
    auto h = nlohmann::json::parse(run(req("hilb", 11, 7)).output);
    EXPECT_EQ(h["clusters"].size(), 5u);
    EXPECT_EQ(h["clusters"][1]["ideal"], "<x^2, x*y^3, y^8>");
}

TEST(Cli, Deterministic) {
    for (auto& sub : cqs::cli::subcommands()) {
        if (sub == "batch") continue;
        for (auto fmt : {"json", "text"}) {
            auto a = run(req(sub, 13, 5, fmt)), b = run(req(sub, 13, 5, fmt));
            EXPECT_EQ(a.output, b.output) << sub;
            EXPECT_EQ(a.exit_code, b.exit_code) << sub;
        }
    }
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run(req("resolve", 6, 4)).exit_code, 2);
    EXPECT_EQ(run(req("resolve", 11, 0)).exit_code, 2);
    EXPECT_EQ(run(req("resolve", 11, 7, "yaml")).exit_code, 2);
    EXPECT_EQ(run(req("toric", 11, 7, "dot")).exit_code, 2);
    EXPECT_EQ(run(req("nonsense", 11, 7)).exit_code, 2);
    // [3,3,2]: outside the covered relation pattern
    auto r = run(req("reconstruct", 13, 5));
    EXPECT_EQ(r.exit_code, 4);
    EXPECT_NE(r.output.find("relations unavailable"), std::string::npos);
    EXPECT_EQ(run(req("artin", 13, 5)).exit_code, 4);
    EXPECT_EQ(run(req("reconstruct", 7, 1)).exit_code, 4);
    EXPECT_EQ(run(req("verify", 13, 5)).exit_code, 0);
}

TEST(Cli, Batch) {
    RunRequest r;
    r.subcommand = "batch";
    r.max_n = 25;
    auto res = run(r);
    ASSERT_EQ(res.exit_code, 0) << res.output;
    auto j = nlohmann::json::parse(res.output);
    EXPECT_EQ(j["violations"].size(), 0u);
    EXPECT_GT(j["pairs"].get<int>(), 100);
    r.min_n = 30;
    EXPECT_EQ(run(r).exit_code, 2);
}

TEST(Cli, Binary) {
    EXPECT_EQ(tool_exit("resolve 11 7 --format text"), 0);
    EXPECT_EQ(tool_exit("resolve 6 4"), 2);
    EXPECT_EQ(tool_exit("resolve 11"), 2);
    EXPECT_EQ(tool_exit("reconstruct 13 5"), 4);
    EXPECT_EQ(tool_exit("mckay 11 7 -f dot"), 0);
    EXPECT_EQ(tool_exit("batch --max-n 12"), 0);
}
