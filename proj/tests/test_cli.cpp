#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "morphic/cli.hpp"

using namespace morphic;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void expect_golden(const std::vector<std::string>& args, const std::string& golden) {
  const auto r = run(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out), json::parse(slurp("tests/golden/" + golden))) << r.out;
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~ScopedEnv() { ::unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST(Cli, GenText) {
  const auto r = run({"gen", "--spec", "specs/fibonacci.morph", "--length", "8"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "01001010\n");
  EXPECT_EQ(run({"gen", "--spec", "specs/erasing.morph", "--length", "10"}).code, 0);
  EXPECT_EQ(run({"gen", "--spec", "specs/fibonacci-positions.morph", "--length", "4"}).out, "1111\n");
}

TEST(Cli, GlobalFormatMayFollowTheSubcommand) {
  const auto before = run({"--format", "json", "gen", "--spec", "specs/thue-morse.morph", "--length", "8"});
  const auto after = run({"gen", "--spec", "specs/thue-morse.morph", "--length", "8", "--format", "json"});
  ASSERT_EQ(before.code, 0) << before.err;
  EXPECT_EQ(before.out, after.out);
  EXPECT_EQ(json::parse(before.out)["results"]["prefix"], "01101001");
}

TEST(Cli, GoldenJson) {
  expect_golden({"gen", "--spec", "specs/gamma.morph", "--length", "25", "--format", "json"}, "gen_gamma.json");
  expect_golden({"analyze", "--spec", "specs/rudin-shapiro.morph", "--length", "2000", "--complexity", "6", "--powers",
                 "3,20", "--format", "json"},
                "analyze_rudin_shapiro.json");
  expect_golden({"classify", "--evidence", "P6=true,P1=false", "--format", "json"}, "classify_f_i.json");
}

TEST(Cli, AnalyzeText) {
  const auto r = run({"analyze", "--spec", "specs/fibonacci.morph", "--length", "1000", "--complexity", "5", "--overlaps",
                      "10", "--gaps", "00", "--freq"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("complexity: 2 3 4 5 6\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Perron 0.618"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("gaps(00):"), std::string::npos) << r.out;
}

TEST(Cli, TaxonomyEnumerateListsTwentyClassesInOrder) {
  const auto r = run({"taxonomy", "enumerate", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["command"], "taxonomy enumerate");
  ASSERT_EQ(doc["results"].size(), 20U);
  EXPECT_EQ(doc["results"][0]["label"], "a");
  EXPECT_EQ(doc["results"][19]["label"], "t");
  EXPECT_EQ(doc["results"][19]["assignment"]["P7"], true);
  EXPECT_EQ(doc["version"], std::string(cli::kVersion));
}

TEST(Cli, ClassifyContradictionExitsOne) {
  const auto r = run({"classify", "--evidence", "P2=true,P9=true,P6=false"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("Durand"), std::string::npos) << r.out;
}

TEST(Cli, CorpusVerifyRudinShapiroCubes) {
  const auto r = run({"corpus", "verify", "i", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  ASSERT_EQ(doc["results"].size(), 1U);
  EXPECT_EQ(doc["results"][0]["passed"], true);
  bool cubes = false;
  for (const auto& a : doc["results"][0]["assertions"])
    cubes = cubes || a["detail"].get<std::string>().find("{000,111}") != std::string::npos;
  EXPECT_TRUE(cubes) << r.out;
}

TEST(Cli, CorpusListText) {
  const auto r = run({"corpus", "list"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(t) t: Thue-Morse word\n"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"gen", "--spec", "specs/missing.morph", "--length", "8"}).code, 2);
  EXPECT_EQ(run({"gen", "--length", "8"}).code, 2);
  EXPECT_EQ(run({"taxonomy"}).code, 2);
  EXPECT_EQ(run({"corpus", "verify", "zz"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "corpus", "list"}).code, 2);
  EXPECT_EQ(run({"classify", "--evidence", "P11=true"}).code, 2);
  EXPECT_EQ(run({"analyze", "--spec", "specs/fibonacci.morph", "--length", "9", "--powers", "3"}).code, 2);
  const auto v = run({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, std::string(cli::kVersion) + "\n");
}

TEST(Cli, ParseErrorsPointAtTheSpec) {
  const auto path = ::testing::TempDir() + "bad.morph";
  std::ofstream(path) << "alphabet: 0 1\nrule 0 -> 0 2\n";
  const auto r = run({"gen", "--spec", path, "--length", "4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err, path + ":2:13: undeclared letter: '2' is not declared\n");
}

TEST(Cli, BudgetFromEnvironmentAndFlag) {
  {
    ScopedEnv env(cli::kBudgetEnv, "100");
    EXPECT_EQ(run({"gen", "--spec", "specs/fibonacci.morph", "--length", "101"}).code, 2);
    EXPECT_EQ(run({"gen", "--spec", "specs/fibonacci.morph", "--length", "100"}).code, 0);
    // An explicit flag wins over the environment.
    EXPECT_EQ(run({"gen", "--spec", "specs/fibonacci.morph", "--length", "101", "--budget", "200"}).code, 0);
  }
  {
    ScopedEnv env(cli::kBudgetEnv, "lots");
    EXPECT_EQ(run({"gen", "--spec", "specs/fibonacci.morph", "--length", "5"}).code, 2);
  }
  const auto r = run({"gen", "--spec", "specs/fibonacci.morph", "--length", "5", "--format", "json"});
  EXPECT_EQ(json::parse(r.out)["budgets"]["prefix"], kDefaultPrefixBudget);
}
