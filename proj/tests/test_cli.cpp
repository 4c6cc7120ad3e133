#include "oag/cli.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = oag::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, AnalyzeSinglePrime) {
  CliResult r = run({"analyze", "--spec", "lex(Q, Gp(2)^2)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "singular primes: {2}"));
  EXPECT_TRUE(contains(r.out, "dp-rank bound: 3"));
}

TEST(Cli, AnalyzeJson) {
  CliResult r = run({"analyze", "--spec", "lex(Q, Gp(2), Gp(3))", "--json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dp_rank_bound"], 3);
  EXPECT_EQ(j["singular_primes"], nlohmann::json::array({2, 3}));
  EXPECT_EQ(j["sorts"][0]["raw_count"], 2);
  EXPECT_EQ(j["sorts"][0]["collapsed_count"], 1);
  EXPECT_EQ(j["sorts"][1]["collapsed_count"], 1);
  EXPECT_EQ(j["sorts"][0]["raw"][1], nlohmann::json::parse(R"({"p":2,"cut":2,"subgroup":"coords>=2"})"));
  EXPECT_EQ(run({"analyze", "--spec", "lex(Q, Gp(2), Gp(3))", "--json"}).out, r.out);
}

TEST(Cli, AnalyzeTrivial) {
  CliResult r = run({"analyze", "--spec", "lex(Z)", "--json"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dp_rank_bound"], 1);
  EXPECT_TRUE(j["singular_primes"].empty());
}

TEST(Cli, ParseErrorsExitTwo) {
  CliResult r = run({"analyze", "--spec", "lex(Gp(4))"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "not prime"));
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"solve", "--spec", "lex(Q)", "--formula", "x <"}).code, 2);
  EXPECT_EQ(run({"solve", "--spec", "lex(Q)", "--formula", "x < 1*a3", "--params", "(1)"}).code, 2);
}

TEST(Cli, Hsub) {
  CliResult r = run({"hsub", "--spec", "lex(Q, Gp(2)^2)", "--n", "2", "--elem", "(0 | b0 | 0)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "cut2 (coords>=2)\n");
}

TEST(Cli, SolveExitCodes) {
  std::vector<std::string> base{"solve", "--spec", "lex(Gp(2)^3)", "--params",
                                "(0 | 2*b0 | 0), (0 | 2*b1 | 0)"};
  auto with = [&](std::string formula) {
    auto args = base;
    args.insert(args.end(), {"--formula", formula});
    return args;
  };
  CliResult sat = run(with("cong[4, cut2](x, 1*a0)"));
  EXPECT_EQ(sat.code, 0);
  EXPECT_TRUE(contains(sat.out, "SAT"));
  EXPECT_TRUE(contains(sat.out, "witness:"));
  auto args = with("cong[4, cut2](x, 1*a0) & cong[4, cut2](x, 1*a1)");
  args.insert(args.end(), {"--oracle-radius", "2", "--json"});
  CliResult unsat = run(args);
  EXPECT_EQ(unsat.code, 1);
  auto j = nlohmann::json::parse(unsat.out);
  EXPECT_EQ(j["status"], "UNSAT");
  EXPECT_EQ(j["certificate"][0]["kind"], "residue");
  EXPECT_EQ(j["certificate"][0]["modulus"], 4);
  EXPECT_TRUE(j["oracle"]["witness"].is_null());
}

TEST(Cli, NormalizeChain) {
  CliResult r = run({"normalize", "--spec", "lex(Gp(2), Gp(3))", "--formula", "cong[12, cut1](6x, 1*a0)",
               "--params", "(2*b1 | b0)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "crt_split: cong[12, cut1](6x, 1*a0)"));
  EXPECT_TRUE(contains(r.out, "reduce_k_prime: "));
  EXPECT_TRUE(contains(r.out, "unit_normalize: "));
  EXPECT_TRUE(contains(r.out, "a1 = "));
  CliResult unsat = run({"normalize", "--spec", "lex(Gp(2))", "--formula", "cong[4, cut1](2x, 1*a0)",
                   "--params", "(b0)"});
  EXPECT_EQ(unsat.code, 1);
  CliResult bare = run({"normalize", "--formula", "cong[8, cut1](5x, 0)"});
  EXPECT_EQ(bare.code, 0);
  EXPECT_TRUE(contains(bare.out, "result: cong[8, cut1](1x, 0)"));
}

TEST(Cli, PatternOptimalTwoPrimes) {
  CliResult r = run({"pattern", "optimal", "--spec", "lex(Q, Gp(2), Gp(3))", "--grid", "3", "--verify",
               "--json"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["report"]["depth"], 3);
  EXPECT_EQ(j["report"]["verified"], true);
  EXPECT_EQ(j["report"]["paths"].size(), 27u);
  EXPECT_EQ(j["report"]["structural"]["convex_rows"], 1);
  EXPECT_EQ(j["report"]["seed"], 0);
  for (const auto& row : j["report"]["rows"]) EXPECT_EQ(row["verdict"], "true");
}

TEST(Cli, PatternChainSeedFromEnvironment) {
  std::vector<std::string> args{"pattern", "chain", "--p",     "2",    "--depth", "4",
                                "--width", "3",     "--paths", "10", "--verify", "--json"};
  ::setenv("OAG_SEED", "5", 1);
  CliResult env = run(args);
  ::unsetenv("OAG_SEED");
  auto explicit_args = args;
  explicit_args.insert(explicit_args.end(), {"--seed", "5"});
  CliResult flag = run(explicit_args);
  EXPECT_EQ(env.code, 0);
  EXPECT_EQ(env.out, flag.out);
  EXPECT_EQ(nlohmann::json::parse(flag.out)["report"]["seed"], 5);
  EXPECT_NE(run(args).out, flag.out);
}

TEST(Cli, PatternWithoutVerifyListsRows) {
  CliResult r = run({"pattern", "chain", "--p", "3", "--depth", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "chain row 2: cong[27, "));
}
