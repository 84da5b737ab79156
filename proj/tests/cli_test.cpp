#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

struct Invocation {
  int code;
  std::string out;
  std::string err;

  std::vector<json> lines() const {
    std::vector<json> parsed;
    std::istringstream in(out);
    for (std::string line; std::getline(in, line);) parsed.push_back(json::parse(line));
    return parsed;
  }
};

Invocation run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = coeven::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, SolveTriangle) {
  const Invocation r = run({"solve", "-g", "Bw"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = r.lines();
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0]["gamma"], 1);
  EXPECT_EQ(lines[0]["gamma_coe"], 1);
  EXPECT_EQ(lines[0]["certificate"], json::array({0}));
  EXPECT_EQ(lines[0]["n"], 3);
}

TEST(Cli, SolveOracleAgrees) {
  const Invocation fast = run({"solve", "--model", "gnp", "--n", "10", "--count", "5", "--seed", "3"});
  const Invocation slow = run({"solve", "--model", "gnp", "--n", "10", "--count", "5", "--seed", "3", "--oracle"});
  ASSERT_EQ(fast.code, 0);
  ASSERT_EQ(slow.code, 0);
  const auto a = fast.lines();
  const auto b = slow.lines();
  ASSERT_EQ(a.size(), 5u);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i]["gamma_coe"], b[i]["gamma_coe"]);
    EXPECT_EQ(a[i]["certificate"], b[i]["certificate"]);
    EXPECT_EQ(a[i]["seed"], 3 + i);
  }
}

TEST(Cli, SolveDefaultsToStdin) {
  const Invocation r = run({"solve"}, "Bw\n");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.lines().size(), 1u);
}

TEST(Cli, SolveReadsStdin) {
  const Invocation r = run({"solve", "-i", "-"}, ">>graph6<<A_\nCr\n");
  ASSERT_EQ(r.code, 0);
  const auto lines = r.lines();
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0]["gamma_coe"], 2);
  EXPECT_EQ(lines[1]["gamma_coe"], 2);
}

TEST(Cli, MalformedInputIsAnError) {
  const Invocation r = run({"solve", "-i", "-"}, "Bw\nB!\n");
  EXPECT_EQ(r.code, 1);
  const auto lines = r.lines();
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[1]["type"], "error");
  EXPECT_EQ(lines[1]["line"], 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"solve", "-g", "Bw", "--model", "all", "--n", "3"}).code, 1);  // two inputs
  EXPECT_EQ(run({"transform", "-g", "Cl", "--op", "edge-removal", "--edge", "0,2"}).code, 1);
  EXPECT_EQ(run({"witness", "-g", "Cr", "--op", "vertex-removal", "--relation", "mid-equality"}).code, 1);
  EXPECT_EQ(run({"gen", "--model", "all", "--n", "8"}).code, 1);
  EXPECT_EQ(run({"solve", "-g", "Bw", "--cap", "2"}).code, 1);
}

TEST(Cli, AuditFindsTriangleViolations) {
  const Invocation r = run({"audit", "-g", "Bw", "--violations-only"});
  EXPECT_EQ(r.code, 2);
  const auto lines = r.lines();
  ASSERT_EQ(lines.size(), 4u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(lines[i]["type"], "violation");
    EXPECT_EQ(lines[i]["op"], "edge-contraction");
    EXPECT_EQ(lines[i]["relation"], "upper-violation");
  }
  EXPECT_EQ(lines[3]["type"], "summary");
  EXPECT_EQ(lines[3]["violations"], 3);
}

TEST(Cli, AuditCleanWhenRestricted) {
  const Invocation r = run({"audit", "--model", "all", "--n", "5", "--up-to", "--op", "vertex-removal,edge-removal",
                     "--violations-only"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto lines = r.lines();
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0]["violations"], 0);
}

TEST(Cli, ErrorsOutrankViolations) {
  const Invocation r = run({"audit", "-i", "-"}, "Bw\n!\n");
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, OutputIndependentOfJobs) {
  const std::vector<std::string> base = {"audit", "--model", "all", "--n", "5", "--up-to"};
  std::vector<std::string> one = base;
  one.insert(one.end(), {"--jobs", "1"});
  std::vector<std::string> three = base;
  three.insert(three.end(), {"--jobs", "3"});
  const Invocation a = run(one);
  const Invocation b = run(three);
  EXPECT_EQ(a.code, 2);
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, GenAndWitness) {
  const Invocation gen = run({"gen", "--model", "all", "--n", "3"});
  ASSERT_EQ(gen.code, 0);
  EXPECT_EQ(std::count(gen.out.begin(), gen.out.end(), '\n'), 8);

  const Invocation w = run({"witness", "--op", "vertex-removal", "--relation", "upper-equality", "-g", "DhC", "--limit",
                     "1"});  // P5
  ASSERT_EQ(w.code, 0) << w.err;
  const auto lines = w.lines();
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0]["element"], 2);
  EXPECT_EQ(lines[0]["value"], 4);
  EXPECT_EQ(lines[1]["found"], 1);

  const Invocation none = run({"witness", "--op", "edge-contraction", "--relation", "lower-equality", "--model", "all",
                        "--n", "3", "--up-to"});
  ASSERT_EQ(none.code, 0);
  EXPECT_EQ(none.lines().back()["report"], "none found at n <= 3");
}

TEST(Cli, TransformAndLift) {
  const Invocation t = run({"transform", "-g", "Cr", "--op", "edge-contraction", "--edge", "0,1"});
  ASSERT_EQ(t.code, 0);
  EXPECT_EQ(t.lines()[0]["result"], "Bw");

  const Invocation l = run({"lift", "-g", "Bw", "--op", "edge-contraction", "--edge", "0,1", "--set", "0"});
  ASSERT_EQ(l.code, 0) << l.err;
  const auto lines = l.lines();
  EXPECT_EQ(lines[0]["valid"], false);
  EXPECT_EQ(lines[0]["proof_case"], "one-endpoint");

  EXPECT_EQ(run({"lift", "-g", "Cr", "--op", "vertex-removal", "--vertex", "0", "--set", "0"}).code, 1);
}

}  // namespace
