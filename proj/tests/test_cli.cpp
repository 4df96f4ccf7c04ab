#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "abacus/report.hpp"

using namespace abacus::cli;

namespace {

struct Invocation {
  int code;
  std::string out, err;
};

Invocation run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "abacus");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ParsesSubcommands) {
  const char* argv[] = {"abacus", "verify", "--suite", "scholl", "--g", "3", "--seed", "9"};
  RunConfig c = parse_args(8, argv);
  EXPECT_EQ(c.command, Command::verify);
  EXPECT_EQ(c.suite, "scholl");
  EXPECT_EQ(c.g, 3);
  EXPECT_EQ(c.seed, 9u);
}

TEST(Cli, RejectsBadInput) {
  EXPECT_EQ(run_args({"numerology", "--w", "1", "2"}).code, kExitConfig);
  EXPECT_EQ(run_args({"numerology"}).code, kExitConfig);
  EXPECT_EQ(run_args({"verify", "--suite", "nope"}).code, kExitConfig);
  EXPECT_EQ(run_args({"verify", "--suite", "fourier", "--g", "0"}).code, kExitConfig);
  EXPECT_EQ(run_args({"projectors", "--g", "9"}).code, kExitConfig);
  EXPECT_EQ(run_args({"bound"}).code, kExitConfig);
  EXPECT_EQ(run_args({"bound", "--bound-m", "2", "2", "--bound-n", "1", "1", "0"}).code, kExitConfig);
  EXPECT_EQ(run_args({"lift", "--denominators", "1"}).code, kExitConfig);
  EXPECT_EQ(run_args({}).code, kExitConfig);
}

TEST(Cli, HelpExitsZero) {
  Invocation r = run_args({"--help"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("numerology"), std::string::npos);
}

TEST(Cli, NumerologyJson) {
  Invocation r = run_args({"numerology", "--w", "4", "2"});
  ASSERT_EQ(r.code, kExitPass);
  auto j = abacus::Json::parse(r.out);
  EXPECT_EQ(j.begin().key(), "schema");
  EXPECT_EQ(j["schema"], "1");
  EXPECT_EQ(j["value"], "12");
  EXPECT_EQ(j["certified"], true);
}

TEST(Cli, Bounds) {
  auto m = abacus::Json::parse(run_args({"bound", "--bound-m", "2", "2"}).out);
  EXPECT_EQ(m["value"], "42");
  EXPECT_EQ(m["certified"], true);
  auto n = abacus::Json::parse(run_args({"bound", "--bound-n", "2", "1", "0"}).out);
  EXPECT_EQ(n["value"], "2");
  EXPECT_EQ(n["certified"], true);
}

TEST(Cli, SchollTableIsByteIdenticalToKuenneth) {
  for (const char* g : {"1", "2", "3"}) {
    Invocation k = run_args({"projectors", "--g", g, "--formula", "kuenneth"});
    Invocation s = run_args({"projectors", "--g", g, "--formula", "scholl"});
    Invocation h = run_args({"projectors", "--g", g, "--formula", "suh2"});
    ASSERT_EQ(k.code, kExitPass);
    EXPECT_EQ(k.out, s.out) << g;
    EXPECT_EQ(k.out, h.out) << g;
  }
}

TEST(Cli, VerifyIsDeterministic) {
  Invocation a = run_args({"verify", "--suite", "divided-powers", "--g", "2", "--seed", "5", "--trials", "20"});
  Invocation b = run_args({"verify", "--suite", "divided-powers", "--g", "2", "--seed", "5", "--trials", "20"});
  EXPECT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, LiftReportsSquaringFailure) {
  Invocation r = run_args({"lift", "--g", "1", "--trials", "3", "--seed", "2"});
  auto j = abacus::Json::parse(r.out);
  EXPECT_EQ(r.code, j["pass"].get<bool>() ? kExitPass : kExitFail);
  for (const auto& t : j["trials"]) {
    EXPECT_EQ(t["correction"]["projectors"], true);
    EXPECT_EQ(t["correction"]["times_two"], true);
    EXPECT_EQ(t["squaring"]["complete"].get<bool>() && t["squaring"]["non_orthogonal"].empty(),
              t["squaring"]["band_condition"].get<bool>());
  }
}

TEST(Cli, WritesOutputFile) {
  std::string path = ::testing::TempDir() + "abacus_cli_out.json";
  Invocation r = run_args({"numerology", "--w", "2", "1", "--output", path});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  auto j = abacus::Json::parse(in);
  EXPECT_EQ(j["value"], "2");
  std::remove(path.c_str());
}

TEST(Cli, BinaryExitCodes) {
  std::string bin = ABACUS_CLI_PATH;
  EXPECT_EQ(std::system((bin + " numerology --w 3 1 > /dev/null").c_str()), 0);
  EXPECT_NE(std::system((bin + " numerology --w 1 3 > /dev/null 2>&1").c_str()), 0);
}
