#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "logres/cli.hpp"

using namespace logres;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const std::vector<std::string>& args) {
  const auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"resolve", "--n", "2", "--bogus"}).code, 2);
  EXPECT_EQ(run({"resolve", "--n", "2", "--c", "3"}).code, 2);
  EXPECT_EQ(run({"resolve", "--n", "2", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"rank", "--n", "2", "--stratum", "5"}).code, 2);
  EXPECT_EQ(run({"sample", "--n", "2", "--delta", "3"}).code, 2);
  EXPECT_EQ(run({"forms", "--n", "2", "--eq", "x0 + x1^2"}).code, 2);
  const auto r = run({"bounds", "--n", "2", "--delta", "7", "--eps", "1,1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("usage:", 0), 0u);
}

TEST(Cli, ResolveReportsVerifiedCertificates) {
  const auto j = json_of({"resolve", "--n", "2", "--c", "2", "--k", "2", "--mode", "minimal"});
  EXPECT_EQ(j["verb"], "resolve");
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_FALSE(j["charts"].empty());
}

TEST(Cli, ResolveIsByteIdenticalAcrossRunsAndWorkers) {
  const std::vector<std::string> args{"resolve", "--n", "3", "--c", "3", "--seed", "5"};
  setenv("LOGRES_THREADS", "1", 1);
  const auto a = run(args);
  setenv("LOGRES_THREADS", "4", 1);
  const auto b = run(args);
  unsetenv("LOGRES_THREADS");
  const auto c = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, BoundsJsonAndText) {
  const auto j = json_of({"bounds", "--n", "2", "--delta", "7,8", "--eps", "1,1"});
  EXPECT_EQ(j["effective"]["r_min"], "128");
  EXPECT_EQ(j["effective"]["m"], nlohmann::json({"904", "1033"}));
  EXPECT_EQ(j["corollary"]["m_threshold"], "4096");
  EXPECT_EQ(j["corollary"]["chain_lhs"], "1393");
  EXPECT_EQ(j["corollary"]["alpha_min"], "259");
  const auto t = run({"bounds", "--n", "2", "--delta", "7,8", "--eps", "1,1", "--format", "text"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("r_min: 128"), std::string::npos);
  EXPECT_NE(t.out.find("1393 <= 4096"), std::string::npos);
}

TEST(Cli, FormsResidues) {
  const auto j = json_of({"forms", "--n", "2", "--eq", "x0", "--eq", "x1", "--eq", "x0^2 + x1^2 + x2^2"});
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(j["residue_rank"], 2);
  EXPECT_EQ(j["forms"][0]["residues"], nlohmann::json({"1", "-1", "0"}));
  EXPECT_EQ(j["forms"][1]["residues"], nlohmann::json({"0", "2", "-1"}));
}

TEST(Cli, RankAndSample) {
  const auto r = json_of({"rank", "--n", "2", "--stratum", "1", "--samples", "4"});
  ASSERT_EQ(r["samples"].size(), 4u);
  for (const auto& s : r["samples"]) {
    EXPECT_EQ(s["bound"], "5");
    EXPECT_TRUE(s["satisfied"].get<bool>());
  }
  const auto s = json_of({"sample", "--n", "2", "--trials", "40"});
  EXPECT_EQ(s["failures"], 0);
  EXPECT_EQ(s["seed"], kDefaultSeed);
  EXPECT_EQ(s["strata"]["{1,2}"], 10);
}

TEST(Cli, VerifyJet) {
  const auto j = json_of({"verify-jet", "--n", "3"});
  EXPECT_TRUE(j["verified"].get<bool>());
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c["equal"].get<bool>());
    EXPECT_TRUE(c["gamma_generates"].get<bool>());
  }
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "logres_cli_test.json";
  std::filesystem::remove(path);
  const auto r = run({"bounds", "--n", "1", "--delta", "3", "--eps", "1", "-o", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["effective"]["r_min"], "5");
  std::filesystem::remove(path);
}
