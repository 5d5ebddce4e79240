#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "blochgeom/cli.hpp"

using namespace blochgeom;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("blochgeom_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string out_dir(const std::string& sub = "out") const { return (dir_ / sub).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, BlochCoverageWritesCsvAndMeta) {
  const CliRun r = run({"bloch-coverage", "--n-states", "200", "--seed", "42", "--out-dir", out_dir()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(slurp(dir_ / "out" / "bloch_coverage.csv"));
  ASSERT_EQ(rows.size(), 201u);
  EXPECT_EQ(rows[0], "kind,n_x,n_y,n_z,norm,purity");
  EXPECT_TRUE(fs::exists(dir_ / "out" / "bloch_coverage_moments.csv"));
  const auto meta = nlohmann::json::parse(slurp(dir_ / "out" / "meta.json"));
  EXPECT_EQ(meta["config"]["command"], "bloch-coverage");
  EXPECT_EQ(meta["config"]["seed"], 42);
  EXPECT_EQ(meta["config"]["n_states"], 200);
  EXPECT_EQ(meta["config"]["mixed_fraction"], 0.5);
  EXPECT_TRUE(meta.contains("timestamp"));
  EXPECT_TRUE(meta.contains("build"));
}

TEST_F(CliTest, SaturationRanksAndVectorFiles) {
  const CliRun r = run({"saturation", "--valences", "4,6,8,10", "--trials", "100", "--seed", "7", "--out-dir", out_dir()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(slurp(dir_ / "out" / "saturation.csv"));
  ASSERT_EQ(rows.size(), 401u);
  EXPECT_EQ(rows[0], "k,trial,ambient_rank,counterfactual_rank");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::istringstream in(rows[i]);
    std::string k, trial, ambient, cf;
    std::getline(in, k, ',');
    std::getline(in, trial, ',');
    std::getline(in, ambient, ',');
    std::getline(in, cf, ',');
    EXPECT_EQ(ambient, "3");
    EXPECT_EQ(std::stoi(cf), 3 * std::stoi(k));
  }
  for (int k : {4, 6, 8, 10}) {
    const auto v = lines(slurp(dir_ / "out" / ("vectors_k" + std::to_string(k) + ".csv")));
    ASSERT_EQ(v.size(), static_cast<std::size_t>(k + 1));
    EXPECT_EQ(v[0], "edge,n_x,n_y,n_z");
  }
}

TEST_F(CliTest, SaturationOnGraphSpec) {
  const CliRun r = run({"saturation", "--graph", "kind=cycle,n=6", "--trials", "3", "--out-dir", out_dir()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(lines(slurp(dir_ / "out" / "graph_saturation.csv")).size(), 19u);
  EXPECT_EQ(run({"saturation", "--graph", "kind=blob", "--out-dir", out_dir()}).code, kExitUsage);
}

TEST_F(CliTest, VerifyPasses) {
  const CliRun r = run({"verify", "--seed", "1", "--out-dir", out_dir()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(slurp(dir_ / "out" / "verify.csv"));
  EXPECT_EQ(rows[0], "property,samples,residual,pass");
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i].substr(rows[i].rfind(',') + 1), "true") << rows[i];
}

TEST_F(CliTest, OtherCommands) {
  EXPECT_EQ(run({"invariant-dim", "--k", "2,4,6", "--out-dir", out_dir("a")}).code, kExitOk);
  const auto inv = lines(slurp(dir_ / "a" / "invariant_dim.csv"));
  ASSERT_EQ(inv.size(), 4u);
  EXPECT_EQ(inv[2].substr(0, 6), "4,2,2,");
  EXPECT_EQ(inv[2].substr(inv[2].rfind(',') + 1), "true");
  EXPECT_EQ(run({"sun-scan", "--n", "2,3,4", "--out-dir", out_dir("b")}).code, kExitOk);
  const auto sun = lines(slurp(dir_ / "b" / "sun_scan.csv"));
  ASSERT_EQ(sun.size(), 4u);
  EXPECT_EQ(sun[1].substr(0, 8), "2,3,2,2,");
  EXPECT_EQ(sun[2].substr(0, 8), "3,8,4,7,");
  EXPECT_EQ(sun[1].substr(sun[1].rfind(',') + 1), "true");
  EXPECT_EQ(sun[2].substr(sun[2].rfind(',') + 1), "false");
  EXPECT_EQ(run({"covering-check", "--trials", "50", "--out-dir", out_dir("c")}).code, kExitOk);
  EXPECT_EQ(lines(slurp(dir_ / "c" / "covering_check.csv")).size(), 51u);
  EXPECT_EQ(run({"killing-form", "--n", "2", "--out-dir", out_dir("d")}).code, kExitOk);
  EXPECT_EQ(lines(slurp(dir_ / "d" / "killing_form.csv"))[1], "0,0,-8,-8");
  const CliRun v = run({"version"});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_EQ(v.out.rfind("blochgeom ", 0), 0u);
}

TEST_F(CliTest, JsonFormat) {
  ASSERT_EQ(run({"bloch-coverage", "--n-states", "10", "--format", "json", "--out-dir", out_dir()}).code, kExitOk);
  const auto j = nlohmann::json::parse(slurp(dir_ / "out" / "bloch_coverage.json"));
  EXPECT_EQ(j["experiment"], "bloch_coverage");
  EXPECT_EQ(j["rows"].size(), 10u);
  EXPECT_TRUE(j["tables"].contains("moments"));
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  CliRun r = run({"bloch-coverage", "--bogus", "1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("bloch-coverage"), std::string::npos);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"bloch-coverage", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"bloch-coverage", "--mixed-fraction", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"saturation", "--valences", "0", "--out-dir", out_dir()}).code, kExitUsage);
  EXPECT_EQ(run({"killing-form", "--n", "1", "--out-dir", out_dir()}).code, kExitUsage);
}

TEST_F(CliTest, UnwritableOutputExitsTwo) {
  fs::create_directories(dir_);
  std::ofstream(dir_ / "blocker") << "x";
  const CliRun r = run({"bloch-coverage", "--n-states", "5", "--out-dir", (dir_ / "blocker" / "sub").string()});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("cannot create"), std::string::npos);
}

TEST_F(CliTest, IdenticalSeedsGiveIdenticalBytes) {
  for (int rep = 0; rep < 2; ++rep) {
    ASSERT_EQ(run({"bloch-coverage", "--seed", "9", "--out-dir", out_dir("r" + std::to_string(rep))}).code, kExitOk);
    ASSERT_EQ(run({"saturation", "--trials", "5", "--seed", "9", "--out-dir", out_dir("r" + std::to_string(rep))}).code,
              kExitOk);
  }
  for (const char* f : {"bloch_coverage.csv", "saturation.csv", "vectors_k10.csv"}) {
    EXPECT_EQ(slurp(dir_ / "r0" / f), slurp(dir_ / "r1" / f)) << f;
  }
  ASSERT_EQ(run({"bloch-coverage", "--seed", "10", "--out-dir", out_dir("r2")}).code, kExitOk);
  EXPECT_NE(slurp(dir_ / "r0" / "bloch_coverage.csv"), slurp(dir_ / "r2" / "bloch_coverage.csv"));
}

// Pinned-seed outputs are frozen under tests/golden/. Regenerate with the
// commands in tests/golden/README if the sampling code changes on purpose.
TEST_F(CliTest, GoldenFiles) {
  const fs::path golden(BLOCHGEOM_GOLDEN_DIR);
  ASSERT_EQ(run({"bloch-coverage", "--n-states", "12", "--seed", "42", "--out-dir", out_dir()}).code, kExitOk);
  ASSERT_EQ(run({"saturation", "--valences", "2,4", "--trials", "3", "--seed", "7", "--out-dir", out_dir()}).code,
            kExitOk);
  for (const char* f : {"bloch_coverage.csv", "saturation.csv", "vectors_k2.csv", "vectors_k4.csv"}) {
    EXPECT_EQ(slurp(dir_ / "out" / f), slurp(golden / f)) << f;
  }
}
