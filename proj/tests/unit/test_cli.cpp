#include "kernelcurve_cli/cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Invocation {
  int code;
  std::string out, err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = kc::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string model(const char* name) { return std::string(KERNELCURVE_MODELS_DIR) + "/" + name; }

std::string temp_model(const std::string& name, const std::string& body) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Cli, ClassifySimpleWalk) {
  const Invocation r = run({"classify", model("simple_walk.json")});
  ASSERT_EQ(r.code, kc::cli::kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["genus"], 1);
  EXPECT_EQ(j["t"], "1/4");
  EXPECT_TRUE(j.contains("branch_points"));
}

TEST(Cli, UniformizeGenusZero) {
  const Invocation r = run({"uniformize", model("genus0_diagonal.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(json::parse(r.out)["q"].get<double>(), 71.0 + 12.0 * std::sqrt(35.0), 1e-9);
}

TEST(Cli, UniformizeGenusOne) {
  const Invocation r = run({"uniformize", model("gessel.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(json::parse(r.out)["omega3_over_omega2"].get<double>(), 0.75, 1e-8);
}

TEST(Cli, VerifyAndEnumerate) {
  Invocation r = run({"verify", model("kreweras.json"), "--order", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["residual_max"], "0");

  r = run({"enumerate", model("simple_walk.json"), "--order", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["terms"]["0,0,2"], "1/8");

  r = run({"enumerate", model("simple_walk.json"), "--coeff", "1,0,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["value"], "5/64");

  r = run({"enumerate", model("simple_walk.json"), "--order", "2", "--csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "i,j,k,value");
}

TEST(Cli, Orbit) {
  Invocation r = run({"orbit", model("simple_walk.json"), "--steps", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["order"], 2);

  r = run({"orbit", model("genus0_diagonal.json"), "--steps", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["order"], "Unbounded");

  r = run({"orbit", model("simple_walk.json"), "--start", "5,0,5,0"});
  EXPECT_EQ(r.code, kc::cli::kExitModel);
  EXPECT_EQ(json::parse(r.err)["error_kind"], "OffCurveInput");
}

TEST(Cli, SampleCsv) {
  const Invocation r = run({"sample", model("gessel.json"), "--grid", "3x2", "--csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) ++n;
  EXPECT_EQ(n, 1 + 6);
}

TEST(Cli, Sweeps) {
  Invocation r = run({"classify", model("simple_walk.json"), "--sweep", "all-subsets"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["results"].size(), 255u);

  r = run({"verify", model("simple_walk.json"), "--sweep", "t=1/10:3/10:3", "--order", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = json::parse(r.out);
  ASSERT_EQ(j["results"].size(), 3u);
  EXPECT_EQ(j["results"][1]["t"], "1/5");
  EXPECT_EQ(j["results"][1]["result"]["residual_max"], "0");
}

TEST(Cli, ErrorsAndExitCodes) {
  Invocation r = run({"frobnicate", model("simple_walk.json")});
  EXPECT_EQ(r.code, kc::cli::kExitUsage);
  EXPECT_EQ(json::parse(r.err)["error_kind"], "Usage");

  EXPECT_EQ(run({"classify"}).code, kc::cli::kExitUsage);
  EXPECT_EQ(run({"classify", model("simple_walk.json"), "--json", "--csv"}).code, kc::cli::kExitUsage);
  EXPECT_EQ(run({"sample", model("simple_walk.json"), "--grid", "0x3"}).code, kc::cli::kExitUsage);
  EXPECT_EQ(run({"classify", "/nonexistent/model.json"}).code, kc::cli::kExitUsage);

  const std::string negative = temp_model("neg.json", R"({"weights":[[0,1,0],[1,0,-1],[0,1,0]],"t":"1/4"})");
  r = run({"classify", negative});
  EXPECT_EQ(r.code, kc::cli::kExitModel);
  EXPECT_EQ(json::parse(r.err)["error_kind"], "NegativeWeight");

  const std::string degenerate = temp_model("deg.json", R"({"weights":[[1,0,0],[0,0,0],[0,0,1]],"t":"1/4"})");
  r = run({"uniformize", degenerate});
  EXPECT_EQ(r.code, kc::cli::kExitModel);
  EXPECT_EQ(json::parse(r.err)["error_kind"], "DegenerateModel");

  const std::string decimal = temp_model("dec.json", R"({"weights":[[0,0.25,0],[0.25,0,0.25],[0,0.25,0]],"t":0.1})");
  r = run({"verify", decimal});
  EXPECT_EQ(r.code, 0) << r.err;
}
