#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace chordweight;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "chordweight");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const char* name) { return std::string(SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST(Cli, Yamada) {
  EXPECT_EQ(run({"yamada", "--diagram", "AA"}).out, "6\n");
  EXPECT_EQ(run({"yamada", "--diagram", "AABB", "--N", "2"}).out, "2\n");
  EXPECT_EQ(run({"yamada", "--diagram", "AA", "--N", "1/2"}).out, "-1/4\n");
  EXPECT_EQ(run({"yamada", "--diagram", "AB"}).code, 2);
  EXPECT_EQ(run({"yamada", "--diagram", "AA", "--N", "x"}).code, 2);
}

TEST(Cli, DimsText) {
  EXPECT_EQ(run({"dims", "--max-n", "0"}).out, "n\tframed\n0\t1\n");
  const auto r = run({"dims", "--max-n", "4", "--unframed"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n\tunframed\n0\t1\n1\t0\n2\t1\n3\t1\n4\t3\n");
}

TEST(Cli, DimsCsvAndJson) {
  EXPECT_EQ(run({"dims", "--max-n", "3", "--format", "csv"}).out, "n,framed_dim,unframed_dim\n0,1,1\n1,1,0\n2,2,1\n3,3,1\n");
  const auto j = io::json::parse(run({"dims", "--max-n", "2", "--format", "json"}).out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[2]["dimension"], 2);
}

TEST(Cli, Enumerate) {
  EXPECT_EQ(run({"enumerate", "--n", "2"}).out, "AABB\nABAB\n");
  EXPECT_EQ(run({"enumerate", "--n", "0"}).out, "(empty)\n");
  const auto j = io::json::parse(run({"enumerate", "--n", "3", "--format", "json"}).out);
  EXPECT_EQ(j.size(), 5u);
  EXPECT_EQ(run({"enumerate", "--n", "99"}).code, 2);
  EXPECT_EQ(run({"enumerate"}).code, 2);
}

TEST(Cli, Eval) {
  EXPECT_EQ(run({"eval", "--lie", sample("sl2.json"), "--diagram", "AA"}).out, "3\n");
  EXPECT_EQ(run({"eval", "--curvature", sample("s3.json"), "--diagram", "ABAB", "--naive"}).out, "6\n");
  EXPECT_EQ(run({"eval", "--tensor", sample("identity2.json"), "--diagram", "ABCABC"}).out, "2\n");
  for (const char* code : {"AA", "ABAB", "AABB", "ABCABC", "ABACBC"}) {
    const auto sweep = run({"eval", "--curvature", sample("indefinite3.json"), "--diagram", code});
    const auto naive = run({"eval", "--curvature", sample("indefinite3.json"), "--diagram", code, "--naive"});
    EXPECT_EQ(sweep.code, 0);
    EXPECT_EQ(sweep.out, naive.out) << code;
  }
}

TEST(Cli, EvalErrors) {
  EXPECT_EQ(run({"eval", "--curvature", sample("s3.json"), "--diagram", "ABCABC", "--naive", "--work-bound", "5"}).code, 2);
  EXPECT_EQ(run({"eval", "--diagram", "AA"}).code, 2);
  EXPECT_EQ(run({"eval", "--lie", sample("sl2.json"), "--tensor", sample("identity2.json"), "--diagram", "AA"}).code, 2);
  EXPECT_EQ(run({"eval", "--lie", sample("missing.json"), "--diagram", "AA"}).code, 2);
}

TEST(Cli, CheckPassesAndFails) {
  const auto ok = run({"check", "--curvature", sample("s3.json")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("all checks passed"), std::string::npos);
  EXPECT_EQ(run({"check", "--lie", sample("so4.json")}).code, 0);
  EXPECT_EQ(run({"check", "--tensor", sample("identity2.json")}).code, 0);

  const auto asym = run({"check", "--tensor", sample("asymmetric2.json")});
  EXPECT_EQ(asym.code, 1);
  EXPECT_NE(asym.out.find("leg-swap symmetry: FAIL"), std::string::npos);

  const auto bianchi = run({"check", "--curvature", sample("bianchi_violating.json")});
  EXPECT_EQ(bianchi.code, 1);
  EXPECT_NE(bianchi.out.find("curvature symmetries: FAIL (first Bianchi identity at (0,1,2,3))"), std::string::npos);
  EXPECT_NE(bianchi.out.find("parallel and tensor checks agree: yes"), std::string::npos);
}

TEST(Cli, Holonomy) {
  const auto r = run({"holonomy", "--curvature", sample("s3.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dim h = 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("isomorphic to so3: yes\n"), std::string::npos);
  EXPECT_NE(r.out.find("rho(C_h) == Hhat: yes\n"), std::string::npos);

  const auto j = io::json::parse(run({"holonomy", "--curvature", sample("indefinite3.json"), "--format", "json"}).out);
  EXPECT_EQ(j["h_dim"], 3);
  EXPECT_EQ(j["rho_C_h_equals_Hhat"], true);

  EXPECT_EQ(run({"holonomy", "--curvature", sample("sphere_pair.json")}).code, 0);
  EXPECT_EQ(run({"holonomy", "--curvature", sample("bianchi_violating.json")}).code, 1);
}

TEST(Cli, Realize) {
  const auto sl2 = run({"realize", "--lie", sample("sl2.json"), "--form", sample("symplectic2.json")});
  EXPECT_EQ(sl2.code, 1);
  EXPECT_NE(sl2.out.find("verdict: fail(skew) at (0,0,1,1)"), std::string::npos);

  const auto so3 = run({"realize", "--lie", sample("so3.json"), "--form", sample("identity3.json")});
  EXPECT_EQ(so3.code, 0);
  EXPECT_NE(so3.out.find("verdict: pass"), std::string::npos);

  EXPECT_EQ(run({"realize", "--lie", sample("so3.json"), "--form", sample("symplectic2.json")}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyMatchesAcceptanceSuite) {
  std::ostringstream expected;
  const bool all = acceptance::run_all(expected);
  const auto first = run({"verify"});
  const auto second = run({"verify"});
  EXPECT_EQ(first.code, all ? 0 : 1);
  EXPECT_EQ(first.out, expected.str());
  EXPECT_EQ(first.out, second.out);
}
