#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "kazhlip/numeric.hpp"

using namespace kazhlip;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  set_precision(kDefaultPrecision);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(KAZHLIP_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("phi and phi-inv") {
  CHECK(run({"phi", "1.0"}).out == "7.38905609893065\n");
  CHECK(run({"phi-inv", "16"}).out == "1.22474487139159\n");
  CHECK(run({"--precision", "20", "phi", "1"}).out == "7.3890560989306502272\n");
  const auto bad = run({"phi", "1.5"});
  CHECK(bad.code == cli::kDomainError);
  CHECK(bad.err.find("sqrt 2") != std::string::npos);
  CHECK(run({"phi", "abc"}).code == cli::kParseError);
  CHECK(run({"--precision", "3", "phi", "1"}).code == cli::kParseError);
  CHECK(run({"frobnicate"}).code == cli::kParseError);
  CHECK(run({}).code == cli::kParseError);
}

TEST_CASE("schedule syntax") {
  const auto g = cli::parse_schedule("1,2,4,...,4096");
  CHECK(g.size() == 13);
  CHECK(g.back() == 4096);
  const auto a = cli::parse_schedule("2,4,...,10");
  CHECK(a == std::vector<Rational>{2, 4, 6, 8, 10});
  CHECK(cli::parse_schedule("3,5,7,...,11").size() == 5);
  CHECK(cli::parse_schedule("1/2, 1") == std::vector<Rational>{Rational(1, 2), 1});
  CHECK_THROWS(cli::parse_schedule("1,2,...,4097/2"));
  CHECK_THROWS(cli::parse_schedule("1,...,5"));
  CHECK_THROWS(cli::parse_schedule("0,1"));
  CHECK(cli::parse_real_list("2, 8,64").size() == 3);
}

TEST_CASE("group commands") {
  CHECK(run({"lip", data("bump.json")}).out.find("L = 2, M = 1") != std::string::npos);
  CHECK(run({"fixed-points", data("two_bumps.json")}).out == "(-inf, 0] U [2, 5] U [7, inf)\n");
  CHECK(run({"fixed-points", data("two_bumps_shift.json")}).out == "empty\n");
  CHECK(run({"lip", data("missing.json")}).code == cli::kParseError);

  const auto flagged = run({"bound", data("bump.json"), "--schedule", "1,2,...,8"});
  CHECK(flagged.code == cli::kHypothesisFlag);
  CHECK(flagged.err.find("global fixed point") != std::string::npos);

  const auto ok = run({"bound", data("two_bumps_shift.json"), "--format", "json"});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.find("\"hypothesis_ok\": true") != std::string::npos);

  const auto sweep = run({"sweep", data("shift.json"), "--p", "2,4", "--schedule", "1,2,4"});
  CHECK(sweep.code == cli::kOk);
  CHECK(std::count(sweep.out.begin(), sweep.out.end(), '\n') == 7);
  CHECK(run({"sweep", data("shift.json"), "--p", "1"}).code == cli::kDomainError);
  CHECK(run({"sweep", data("shift.json"), "--schedule", "1,2,4,...,5"}).code == cli::kParseError);
}

TEST_CASE("tables and output files") {
  const auto csv = run({"phi-table", "--which", "phi-branches", "--grid", "0,1,0.5"});
  CHECK(csv.out.rfind("t,exp_branch,rational_branch,phi\n0,1,1,1\n", 0) == 0);
  const std::string path = "kazhlip_test_figure.svg";
  const auto svg = run({"phi-table", "--which", "phi-inv-branches", "--format", "svg", "--out", path});
  CHECK(svg.code == cli::kOk);
  CHECK(svg.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().rfind("<svg", 0) == 0);
  std::remove(path.c_str());
  CHECK(run({"phi-table", "--which", "nope"}).code == cli::kParseError);
  CHECK(run({"phi-table", "--format", "json"}).code == cli::kParseError);
}

TEST_CASE("limit diagnostics and verify") {
  const auto d = run({"limit-diag", data("affine_family.json"), "--words", "f; f f^-1 f"});
  CHECK(d.code == cli::kOk);
  CHECK(d.out.find("lim Lip = 1 observed") != std::string::npos);
  const auto csv = run({"limit-diag", data("affine_family.json"), "--max-length", "1", "--format", "csv"});
  CHECK(csv.out.rfind("stage,word,value,defect\n", 0) == 0);
  CHECK(run({"verify", "nonsense"}).code == cli::kParseError);
  const auto v = run({"verify", "lemmas", "--seed", "7"});
  CHECK(v.code == cli::kOk);
  CHECK(v.out.find("FAIL") == std::string::npos);
}
