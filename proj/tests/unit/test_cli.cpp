#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bell/cli.hpp"
#include "bell/io.hpp"
#include "bell/measures.hpp"
#include "bell/oracle.hpp"
#include "test_support.hpp"

namespace bell {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  std::string write(const std::string& name, const HiddenInput& in) {
    const auto path = dir_.file(name);
    io::write_json(path, io::to_json(in));
    return path;
  }
  std::string write_text(const std::string& name, const std::string& text) {
    const auto path = dir_.file(name);
    std::ofstream(path) << text;
    return path;
  }
  testing::TempDir dir_;
};

TEST_F(CliTest, MeasuresTwoLambda) {
  const auto r = run({"measures", write("two.json", testing::two_lambda(0.1, 0.2, 0.3, 0.4))});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["m"].get<double>(), 0.6);
  EXPECT_DOUBLE_EQ(j["h"].get<double>(), 0.25);
  EXPECT_DOUBLE_EQ(j["s_opt"].get<double>(), 2.6);
  EXPECT_DOUBLE_EQ(j["f"].get<double>(), 0.35);
}

TEST_F(CliTest, MeasuresPointModel) {
  const auto r = run({"measures", write("one.json", testing::point_input()), "--pretty"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("s_opt"), std::string::npos);
  const auto j = json::parse(run({"measures", write("one.json", testing::point_input())}).out);
  EXPECT_EQ(j["m"].get<double>(), 0.0);
  EXPECT_EQ(j["h"].get<double>(), 0.0);
  EXPECT_EQ(j["s_opt"].get<double>(), 2.0);
  EXPECT_EQ(j["f"].get<double>(), 0.0);
}

TEST_F(CliTest, MalformedFileExitsThree) {
  EXPECT_EQ(run({"measures", write_text("bad.json", "{\"kind\": ")}).code, 3);
  EXPECT_EQ(run({"measures", dir_.file("absent.json")}).code, 3);
}

TEST_F(CliTest, CheckTwoLambda) {
  const auto r = run({"check", write("two.json", testing::two_lambda(0.1, 0.2, 0.3, 0.4))});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS cardinality clause=n=2 lower=2.6 s_opt=2.6"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, CheckSampledInputs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = run({"check", write("s.json", oracle::sample_input(1 + seed % 6, seed))});
    EXPECT_EQ(r.code, 0) << r.out;
  }
}

TEST_F(CliTest, CheckRejectsBadColumn) {
  const auto path = write_text(
      "edit.json", R"({"kind":"input","n":2,"p_lambda_given_context":[[0.5,0.4],[0.5,0.5],[0.5,0.5],[0.5,0.5]]})");
  EXPECT_EQ(run({"check", path}).code, 3);
}

TEST_F(CliTest, RealizeToStdout) {
  const auto r = run({"realize", "2", "0.5", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto in = io::input_from_json(json::parse(r.out));
  EXPECT_EQ(in.size(), 4u);
  const auto summary = json::parse(r.err);
  for (const char* key : {"delta_m", "delta_h", "delta_s"}) EXPECT_LT(std::abs(summary[key].get<double>()), 1e-9);
}

TEST_F(CliTest, RealizeToFile) {
  const auto path = dir_.file("real.json");
  const auto r = run({"realize", "0", "0", "2", "--out", path});
  ASSERT_EQ(r.code, 0);
  const auto in = io::read_input(path);
  EXPECT_DOUBLE_EQ(hiddenness(in), 0.0);
  EXPECT_DOUBLE_EQ(in(0, 0), 1.0);
  EXPECT_EQ(json::parse(r.out)["n"], 4);
}

TEST_F(CliTest, RealizeInfeasible) {
  const auto r = run({"realize", "0.1", "0", "2.5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("b2 < 0"), std::string::npos) << r.err;
}

TEST_F(CliTest, RegionCommands) {
  auto r = run({"region", "--kind", "polyhedron"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);

  r = run({"region", "--kind", "wk", "--k", "0.8284271247", "--step", "0.05"});
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "m,h");
  double lo = 10, hi = -10;
  while (std::getline(lines, line)) {
    const double m = std::stod(line.substr(0, line.find(',')));
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  EXPECT_NEAR(lo, 0.2761, 5e-5);
  EXPECT_NEAR(hi, 0.8284, 5e-5);

  EXPECT_EQ(run({"region", "--kind", "wk", "--k", "3"}).code, 2);
  EXPECT_EQ(run({"region", "--kind", "wk"}).code, 2);
  EXPECT_EQ(run({"region", "--kind", "square"}).code, 2);
  EXPECT_EQ(run({"region", "--kind", "wk0", "--k", "1", "--step", "0"}).code, 2);

  const auto csv = dir_.file("r.csv");
  EXPECT_EQ(run({"region", "--kind", "wk0", "--k", "0.5", "--out", csv}).code, 0);
  std::ifstream in(csv);
  std::getline(in, line);
  EXPECT_EQ(line, "m,h");
}

TEST_F(CliTest, FuzzDeterministicAndValidated) {
  const auto a = run({"fuzz", "--trials", "1", "--seed", "42"});
  const auto b = run({"fuzz", "--trials", "1", "--seed", "42"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"fuzz", "--max-lambdas", "0"}).code, 2);
  EXPECT_EQ(run({"fuzz", "--trials", "0"}).code, 2);
  const auto p = run({"fuzz", "--trials", "200", "--seed", "3", "--threads", "2", "--pretty"});
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("PASS oracle"), std::string::npos) << p.out;
}

TEST_F(CliTest, OracleAgrees) {
  const auto r = run({"oracle", write("three.json", testing::three_lambda())});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["brute_force"].get<double>(), 2.7);
  EXPECT_DOUBLE_EQ(j["closed_form"].get<double>(), 2.7);
  EXPECT_EQ(j["strategies"].size(), 3u);
}

TEST_F(CliTest, ReduceTrace) {
  const auto path = write("three.json", testing::three_lambda());
  const auto out_path = dir_.file("reduced.json");
  const auto r = run({"reduce", path, "--out", out_path});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["trace"].front()["stage"], "input");
  EXPECT_DOUBLE_EQ(j["trace"].front()["f"].get<double>(), 1.05);
  EXPECT_EQ(j["trace"].back()["stage"], "merge");
  EXPECT_EQ(io::read_input(out_path).size(), 2u);
  EXPECT_EQ(run({"reduce", write("two.json", testing::two_lambda(0.1, 0.2, 0.3, 0.4))}).code, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"realize", "1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, ToleranceOverride) {
  const auto path = write("three.json", testing::three_lambda());
  EXPECT_EQ(run({"check", path, "--tol", "-1"}).code, 2);
  ::setenv("BELL_TRADEOFF_TOL", "garbage", 1);
  EXPECT_EQ(run({"check", path}).code, 2);
  ::setenv("BELL_TRADEOFF_TOL", "1e-6", 1);
  EXPECT_EQ(run({"check", path}).code, 0);
  ::unsetenv("BELL_TRADEOFF_TOL");
}

}  // namespace
}  // namespace bell
