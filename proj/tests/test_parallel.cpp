#include <doctest.h>

#include "kazhlip/bounds.hpp"
#include "kazhlip/groupact.hpp"
#include "kazhlip/random.hpp"
#include "kazhlip/verify.hpp"

using namespace kazhlip;

// The OpenMP paths must reproduce the serial reference bit for bit.

TEST_CASE("ball: parallel equals serial") {
  RandomSource rs(51);
  const GeneratorSet s("r", {{"a", rs.bump(3, 10, 3)}, {"b", rs.plhomeo(3, 10, 3)}});
  const auto a = ball(s, 4, kDefaultBallCap, Execution::serial);
  const auto b = ball(s, 4, kDefaultBallCap, Execution::parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].element == b[i].element);
    CHECK(a[i].word == b[i].word);
  }
}

TEST_CASE("sweep: parallel equals serial") {
  const PLHomeo bump({{Rational(0), Rational(0)}, {Rational(1), Rational(2)}, {Rational(3), Rational(3)}});
  const GeneratorSet s("s", {{"a", bump}, {"t", PLHomeo::translation(Rational(1))}});
  const std::vector<Real> ps{Real(2), Real(8), Real(64)};
  const auto schedule = default_schedule(Rational(1));
  const auto a = sweep(s, ps, schedule, Execution::serial);
  const auto b = sweep(s, ps, schedule, Execution::parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].distortion == b[i].distortion);
    CHECK(a[i].attained_by == b[i].attained_by);
  }
}

TEST_CASE("verify: parallel report equals serial report") {
  VerifyOptions serial;
  serial.cases = 100;
  serial.lemma_cases = 500;
  serial.exec = Execution::serial;
  VerifyOptions parallel = serial;
  parallel.exec = Execution::parallel;
  CHECK(run_verify(Suite::all, serial).to_text() == run_verify(Suite::all, parallel).to_text());
}

TEST_CASE("exceptions escape parallel loops") {
  CHECK_THROWS_AS(for_each_index(100, Execution::parallel,
                                 [](std::size_t i) {
                                   if (i == 37) throw std::runtime_error("boom");
                                 }),
                  std::runtime_error);
}
