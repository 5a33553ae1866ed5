#include <fano/io.hpp>

#include "fixture_copy.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string quote(const std::string& s) { return "'" + s + "'"; }

/// Runs the CLI with stderr discarded.
RunResult cli(const std::string& args, const std::string& env = "") {
  RunResult r;
  std::string cmd = env + (env.empty() ? "" : " ") + quote(FANO_LATTICE_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream f(std::string(FANO_LATTICE_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(f) << "missing golden file " << name;
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, D5DiscriminantIsZ4) {
  RunResult r = cli("lattice --name D5 --disc");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "Z/4\n");
}

TEST(Cli, ChiOfHalfCanonicalIsNonIntegral) {
  RunResult r = cli("chi --surface dp4.json --divisor A.json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "5/2 (NON-INTEGRAL)\n");
}

TEST(Cli, ChiOfAnticanonicalIsIntegral) {
  // K^2 = 4 del Pezzo surface, L = -K: chi = 1 + (L^2 - L.K)/2 = 5
  RunResult r = cli("chi --surface dp4_anticanonical.json --divisor minus_k.json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "5\n");
}

TEST(Cli, ContractAcceptsLabelRanges) {
  RunResult ranged = cli("contract --surface t237_surface.json --curves C1..C8,C9");
  RunResult listed = cli("contract --surface t237_surface.json --curves C1,C2,C3,C4,C5,C6,C7,C8,C9");
  EXPECT_EQ(ranged.exit_code, 0);
  EXPECT_EQ(ranged.out, listed.out);
  EXPECT_NE(ranged.out.find("rank 1\n"), std::string::npos);
  EXPECT_NE(ranged.out.find("gram [[2]]"), std::string::npos) << ranged.out;
}

TEST(Cli, PullbackBothDirections) {
  RunResult fwd = cli("pullback --config theta_a3a1a1.json");
  EXPECT_EQ(fwd.exit_code, 0);
  EXPECT_NE(fwd.out.find("lambda (1/4,1/2,3/4,1/2,1/2)"), std::string::npos) << fwd.out;
  EXPECT_NE(fwd.out.find("rational_self 1/4"), std::string::npos);
  RunResult rev = cli("pullback --config theta_a3a1a1.json --reverse");
  EXPECT_EQ(rev.exit_code, 0);
  EXPECT_NE(rev.out.find("strict_self -3/2 (NON-INTEGRAL)"), std::string::npos) << rev.out;
}

TEST(Cli, HasseWittOfNilpotentMap) {
  RunResult r = cli("hw --field p=2,e=2 --matrix fq4_matrix.json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("rank 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("max_rank false"), std::string::npos);
  EXPECT_NE(r.out.find("det_class 0"), std::string::npos);
}

TEST(Cli, WittCarry) {
  RunResult r = cli("witt --field p=2,e=1 --length 2 --op add --a 1,0 --b 1,0");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "(0,1)\n");
  EXPECT_EQ(cli("witt --field p=2,e=2 --length 2 --op V --a 3,1").out, "(0,3)\n");
  EXPECT_EQ(cli("witt --field p=3,e=1 --length 3 --op project --a 1,2,1 --n 1").out, "(1,2)\n");
}

TEST(Cli, UpsilonFromInlineJson) {
  RunResult r = cli("upsilon --group '{\"p\": 2, \"local_unipotent\": [2]}'");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "alpha_2\n");
  EXPECT_EQ(cli("upsilon --group '{\"p\": 2, \"component\": [12]}'").out, "Z/4\n");
  EXPECT_EQ(cli("upsilon --group '{\"p\": 2, \"local_mult\": [2]}'").out, "0\n");
}

TEST(Cli, ConeDegree) {
  RunResult r = cli("cone --dim 2 --degree 4 --index 1 --chi 1 --m 1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("degree 32\n"), std::string::npos);
  EXPECT_NE(r.out.find("index 2\n"), std::string::npos);
  EXPECT_NE(cli("cone --dim 2 --degree 9 --index 3 --m 3").out.find("degree 64\n"), std::string::npos);
}

TEST(Cli, ScenarioExitsZero) {
  RunResult r = cli("scenario t237");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("summary: 22 computed, 0 failed, 5 assumed"), std::string::npos);
}

TEST(Cli, ScenarioSupersingular) {
  RunResult r = cli("scenario t237 --supersingular --json");
  EXPECT_EQ(r.exit_code, 0);
  auto j = fano::io::json::parse(r.out);
  EXPECT_EQ(j["variant"], "supersingular");
  EXPECT_EQ(j["all_pass"], true);
}

TEST(Cli, PerturbedFixturesExitOne) {
  testing_support::FixtureCopy copy;
  copy.set_self("C0", -3);
  RunResult r = cli("scenario t237", "FANO_LATTICE_FIXTURES=" + quote(copy.path()));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
  testing_support::FixtureCopy copy;
  copy.write("broken.json", "{\"lattice\": [[1, 2]");
  EXPECT_EQ(cli("chi --surface " + quote(copy.path() + "/broken.json") + " --divisor A.json").exit_code, 2);
  EXPECT_EQ(cli("chi --surface no_such_file.json --divisor A.json").exit_code, 2);
  EXPECT_EQ(cli("lattice --name Q7 --disc").exit_code, 2);
  EXPECT_EQ(cli("hw --field p=2,e=2 --matrix '[[0,1],[0]]'").exit_code, 2);
  EXPECT_EQ(cli("witt --field p=2,e=1 --length 2 --op add --a 1,0,1 --b 1,0").exit_code, 2);
  EXPECT_EQ(cli("scenario nope").exit_code, 2);
  EXPECT_EQ(cli("upsilon --group '{\"p\": 2, \"local_unipotnet\": [2]}'").exit_code, 2);
  EXPECT_EQ(cli("upsilon --group '{\"p\": 6}'").exit_code, 2);
  EXPECT_EQ(cli("frobnicate").exit_code, 2);
  EXPECT_EQ(cli("").exit_code, 2);
  // dimension mismatch: a divisor with the wrong number of coefficients
  EXPECT_EQ(cli("chi --surface dp4.json --divisor '[1, 2]'").exit_code, 2);
}

TEST(Cli, MissingFixtureDirectoryExitsTwo) {
  EXPECT_EQ(cli("scenario t237", "FANO_LATTICE_FIXTURES=/nonexistent/fixtures").exit_code, 2);
}

TEST(Cli, GoldenOutputs) {
  EXPECT_EQ(cli("scenario t237").out, golden("scenario_t237.txt"));
  EXPECT_EQ(cli("scenario t237 --json").out, golden("scenario_t237.json"));
  EXPECT_EQ(cli("lattice --name T237").out, golden("lattice_t237.txt"));
  EXPECT_EQ(cli("lattice --name D4 --overlattices --bilinear").out, golden("lattice_d4_overlattices.txt"));
  EXPECT_EQ(cli("contract --surface t237_surface.json --curves C1..C8,C9 --json").out, golden("contract_t237.json"));
  EXPECT_EQ(cli("pullback --config theta_a3a1a1.json --json").out, golden("pullback_theta.json"));
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  for (const char* args : {"scenario t237 --json", "lattice --name E10 --json", "hw --field p=3,e=2 --matrix '[[1,2],[3,4]]'"})
    EXPECT_EQ(cli(args).out, cli(args).out) << args;
}

TEST(Cli, JsonOutputsRoundTrip) {
  using fano::io::json;
  // lattice JSON feeds back into --file
  testing_support::FixtureCopy copy;
  copy.write("e10.json", cli("lattice --name E10 --json").out);
  EXPECT_EQ(cli("lattice --file " + quote(copy.path() + "/e10.json") + " --json").out, cli("lattice --name E10 --json").out);
  // contracted surface feeds back into chi
  json c = json::parse(cli("contract --surface t237_surface.json --curves C1..C8,C9 --json").out);
  copy.write("z.json", c["surface"].dump());
  RunResult chi = cli("chi --surface " + quote(copy.path() + "/z.json") + " --divisor '[1]'");
  EXPECT_EQ(chi.exit_code, 0);
  // Num(Z) = <2>, K = 0: chi(D) = 1 + 2/2 = 2
  EXPECT_EQ(chi.out, "2\n");
  // pullback JSON parses back into the same numbers
  json p = json::parse(cli("pullback --config theta_a3a1a1.json --json").out);
  EXPECT_EQ(fano::io::rational_from_json(p["rational_self"]), fano::Rational(1, 4));
  // upsilon JSON is accepted as a group scheme
  copy.write("u.json", cli("upsilon --group '{\"p\": 2, \"local_unipotent\": [2], \"component\": [6]}' --json").out);
  EXPECT_EQ(cli("upsilon --group " + quote(copy.path() + "/u.json")).out, "alpha_2 x Z/2\n");
}
