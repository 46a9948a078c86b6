#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = realhur::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json result(const Run& r) { return json::parse(r.out).at("result"); }

}  // namespace

TEST(Cli, Hurwitz) {
    auto r = run({"hurwitz", "--profiles", "2,1|2,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(result(r)["N"], 3);
    EXPECT_EQ(result(r)["H"], "1");
    r = run({"hurwitz", "--profiles", "2,1,1|2,2"});
    EXPECT_EQ(result(r)["N"], 2);
    EXPECT_EQ(result(r)["H"], "1/2");
    r = run({"hurwitz", "--profiles", "4"});
    EXPECT_EQ(result(r)["N"], 1);
    EXPECT_EQ(result(r)["H"], "1/4");
}

TEST(Cli, SNumber) {
    auto r = run({"s-number", "--profiles", "2,1|2,1", "--values", "-2,2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(result(r)["s"], -1);
    EXPECT_EQ(result(r)["polynomials"].size(), 1u);
}

TEST(Cli, RealHurwitzParityBranch) {
    auto r = run({"real-hurwitz", "--profiles", "3,1|2,1,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(result(r)["value"], "0");
    EXPECT_EQ(result(r)["reason"], "parity-odd branch");
}

TEST(Cli, Series) {
    auto r = run({"series", "--lambda", "1", "--mmax", "2", "--fit", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto entries = result(r)["entries"];
    ASSERT_EQ(entries.size(), 3u);
    EXPECT_EQ(entries[0]["h"], 1);
    EXPECT_EQ(entries[1]["h"], 1);
    EXPECT_EQ(entries[2]["h"], -1);
    EXPECT_EQ(entries[0]["convention"], true);
    bool odd_fit = false;
    const auto fits = result(r)["fits"];
    for (const auto& f : fits) {
        if (f["parity"] == "odd") {
            odd_fit = true;
            EXPECT_LT(f["residual"].get<double>(), 1e-12);
        }
    }
    EXPECT_TRUE(odd_fit);
}

TEST(Cli, SolveReportsCertificate) {
    auto r = run({"solve", "--profiles", "3,1|2,1,1", "--values", "28,1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(result(r)["certificate"]["status"], "COMPLETE");
    EXPECT_EQ(result(r)["solutions"].size(), 4u);
    EXPECT_EQ(result(r)["real_count"], 2);
}

TEST(Cli, ArtifactsEmbedConfig) {
    auto r = run({"hurwitz", "--profiles", "2,1|2,1", "--seed", "17", "--tol-residual", "1e-11"});
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["command"], "hurwitz");
    EXPECT_EQ(j["config"]["seed"], 17);
    EXPECT_EQ(j["config"]["tolerances"]["residual"], 1e-11);
}

TEST(Cli, ConfigFromEnvironment) {
    const auto path = std::filesystem::temp_directory_path() / "realhur_cli_config.json";
    std::ofstream(path) << R"({"seed": 99, "tolerances": {"dedup": 1e-7}})";
    setenv("REALHUR_CONFIG", path.c_str(), 1);
    auto r = run({"hurwitz", "--profiles", "2,1|2,1"});
    unsetenv("REALHUR_CONFIG");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["config"]["seed"], 99);
    EXPECT_EQ(j["config"]["tolerances"]["dedup"], 1e-7);

    std::ofstream(path) << R"({"seed": 1, "bogus": 2})";
    EXPECT_EQ(run({"--config", path.string(), "hurwitz", "--profiles", "2"}).code, 2);
    std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"hurwitz", "--profiles", "2,2|2,2"}).code, 2);
    EXPECT_EQ(run({"s-number", "--profiles", "2,1|2,1", "--values", "1,1"}).code, 2);
    EXPECT_EQ(run({"hurwitz", "--profiles", "2,x"}).code, 2);
    EXPECT_EQ(run({"hurwitz", "--tol-dedup", "-1", "--profiles", "2"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"hurwitz"}).code, 1);
    EXPECT_EQ(run({"solve", "--profiles", "7"}).code, 3);
    EXPECT_EQ(run({"solve", "--profiles", "2,1,1|2,1,1|2,1,1", "--budget", "1"}).code, 3);
}

TEST(Cli, VerifySmallSweepPasses) {
    auto r = run({"verify", "--dmax", "3", "--kmax", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto res = result(r);
    EXPECT_TRUE(res["pass"].get<bool>());
    for (const auto& rec : res["records"]) EXPECT_EQ(rec["status"], "PASS") << rec["spec"];
}

TEST(Cli, VerifyCorruptSignFails) {
    auto r = run({"verify", "--dmax", "3", "--kmax", "2", "--corrupt-sign"});
    EXPECT_EQ(r.code, 4);
    bool any_fail = false;
    const auto records = result(r)["records"];
    for (const auto& rec : records) any_fail = any_fail || rec["status"] == "FAIL";
    EXPECT_TRUE(any_fail);
}

TEST(Cli, DeterministicOutput) {
    const std::vector<std::string> args{"solve", "--profiles", "2,1,1|2,1,1|2,1,1"};
    auto a = run(args);
    auto b = run(args);
    auto more = args;
    more.insert(more.end(), {"--workers", "3"});
    auto c = run(more);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
}

TEST(Cli, CsvAndText) {
    auto r = run({"series", "--lambda", "1", "--mmax", "2", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("# config="), std::string::npos);
    EXPECT_NE(r.out.find("m,d,h,parity"), std::string::npos);
    EXPECT_NE(r.out.find("2,3,-1,odd"), std::string::npos);
    r = run({"hurwitz", "--profiles", "2,1|2,1", "--format", "text"});
    EXPECT_NE(r.out.find("N: 3"), std::string::npos);
    EXPECT_NE(r.out.find("seed: "), std::string::npos);
}
