#include <doctest.h>

#include "kazhlip/errors.hpp"
#include "kazhlip/io.hpp"
#include "kazhlip/random.hpp"

using namespace kazhlip;

namespace {

std::string data(const char* name) { return std::string(KAZHLIP_DATA_DIR) + "/" + name; }

template <typename F>
std::string parse_error_path(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("maps round-trip through JSON") {
  RandomSource rs(41);
  for (int i = 0; i < 100; ++i) {
    const PLHomeo f = rs.plhomeo();
    CHECK(io::plhomeo_from_json(io::to_json(f)) == f);
  }
  const auto j = io::parse_json(R"({"nodes": [["0", "0"], ["2/4", "1"], ["1", "2"], ["3", "3"]]})");
  CHECK(io::to_json(io::plhomeo_from_json(j)).dump() == R"({"nodes":[["0","0"],["1","2"],["3","3"]]})");
}

TEST_CASE("generator sets round-trip and load from disk") {
  const GeneratorSet s = io::generator_set_from_json(io::read_json_file(data("bump.json")));
  CHECK(s.name() == "bump");
  CHECK(s.symmetric());
  CHECK(s.size() == 2);
  const GeneratorSet back = io::generator_set_from_json(io::to_json(s));
  CHECK(back.labels() == s.labels());
  CHECK(*back.find("A") == *s.find("A"));
}

TEST_CASE("parse errors carry the field path") {
  CHECK(parse_error_path([] {
          io::generator_set_from_json(io::parse_json(
              R"({"name": "x", "generators": [{"label": "a", "map": {"nodes": [["0","0"]]}},
                                              {"label": "b", "map": {"nodes": [["0","x"]]}}]})"));
        }) == "generators[1].map.nodes[0][1]");
  CHECK(parse_error_path([] { io::plhomeo_from_json(io::parse_json(R"({"nodes": [["0","0"],["0","1"]]})")); }) ==
        "nodes[1]");
  CHECK(parse_error_path([] { io::generator_set_from_json(io::parse_json(R"({"generators": 3})")); }) ==
        "generators");
  CHECK(parse_error_path([] { io::parse_json("{not json"); }) != "<no error>");
  CHECK(parse_error_path([] { io::read_json_file(data("missing.json")); }) != "<no error>");
}

TEST_CASE("step functions round-trip") {
  const StepFunction f({Rational(0), Rational(1, 3), Rational(2)}, {Real("1.5"), Real("-0.25")});
  const StepFunction g = io::step_function_from_json(io::to_json(f));
  CHECK(g.breakpoints() == f.breakpoints());
  CHECK(g.values() == f.values());
}

TEST_CASE("action sequences load with indices") {
  const ActionSequence seq = io::action_sequence_from_json(io::read_json_file(data("affine_family.json")));
  CHECK(seq.stages().size() == 12);
  CHECK(seq.indices().back() == 4096);
  const ActionSequence back = io::action_sequence_from_json(io::to_json(seq));
  CHECK(back.indices() == seq.indices());
}

TEST_CASE("report encodings") {
  const GeneratorSet s = io::generator_set_from_json(io::read_json_file(data("two_bumps_shift.json")));
  const BoundReport r = estimate_p2(s, {Rational(8), Rational(16)});
  const std::string csv = io::bound_report_csv(r);
  CHECK(csv.rfind("group_name,label_hash,p,n,d,kappa_upper,lemma41_bound,lemma43_bound,phi_inv_of_L\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  const auto j = io::to_json(r);
  CHECK(j["hypothesis_ok"] == true);
  CHECK(j["L"] == "2");
  CHECK(j["sweep"].size() == 2);
}
