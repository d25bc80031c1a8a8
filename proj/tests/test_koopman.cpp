#include <doctest.h>

#include "kazhlip/errors.hpp"
#include "kazhlip/koopman.hpp"
#include "kazhlip/random.hpp"

using namespace kazhlip;
using boost::multiprecision::abs;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }
const Real tol("1e-15");

PLHomeo bump() { return PLHomeo({{q(0), q(0)}, {q(1), q(2)}, {q(3), q(3)}}); }

// (pi(g) xi)(x) sampled directly from the defining formula. The slope of
// g^{-1} at x comes from a one-sided difference quotient small enough to
// stay inside one linear piece.
Real koopman_pointwise(const PLHomeo& g, const StepFunction& xi, const Rational& x, const Real& p) {
  const Rational h(1, 1000000);
  const Rational slope = (evaluate_inverse(g, x + h) - evaluate_inverse(g, x)) / h;
  return xi(evaluate_inverse(g, x)) * pow(to_real(slope), 1 / p);
}

}  // namespace

TEST_CASE("step function validation") {
  CHECK_THROWS_AS(StepFunction({q(0), q(0)}, {Real(1)}), DomainError);
  CHECK_THROWS_AS(StepFunction({q(0), q(1)}, {Real(1), Real(2)}), DomainError);
  CHECK_NOTHROW(StepFunction());
  CHECK_THROWS_AS(Exponent(Real("0.5")), DomainError);
  const StepFunction f({q(0), q(1), q(3)}, {Real(2), Real(-1)});
  CHECK(f(q(1, 2)) == 2);
  CHECK(f(q(1)) == -1);
  CHECK(f(q(3)) == 0);
  CHECK(f(q(-1)) == 0);
}

TEST_CASE("norms by hand") {
  const StepFunction f = StepFunction::indicator(q(0), q(2), Real(3));
  CHECK(abs(lp_norm(f, Exponent(2)) - sqrt(Real(18))) < tol);
  CHECK(abs(lp_norm(f, Exponent(1)) - 6) < tol);
  const StepFunction g({q(0), q(1), q(3)}, {Real(2), Real(-1)});
  // |2|^4 * 1 + |-1|^4 * 2 = 18.
  CHECK(abs(lp_norm(g, Exponent(4)) - pow(Real(18), Real("0.25"))) < tol);
  CHECK(abs(inner_product(f, g) - (6 - 3)) < tol);
  CHECK(lp_norm(StepFunction(), Exponent(2)) == 0);
  for (long n : {1L, 3L, 1000L}) {
    for (int p : {1, 2, 7, 64}) CHECK(abs(lp_norm(window_vector(q(n), Exponent(p)), Exponent(p)) - 1) < tol);
  }
}

TEST_CASE("translations move breakpoints and keep values") {
  const StepFunction f({q(0), q(1), q(3)}, {Real(2), Real(-1)});
  const StepFunction moved = koopman_apply(PLHomeo::translation(q(5, 2)), f, Exponent(3));
  CHECK(moved.breakpoints() == std::vector<Rational>{q(5, 2), q(7, 2), q(11, 2)});
  CHECK(moved.values() == f.values());
}

TEST_CASE("the action agrees with the pointwise formula") {
  RandomSource rs(31);
  for (int trial = 0; trial < 60; ++trial) {
    const PLHomeo g = trial % 2 ? bump() : rs.plhomeo(6, 20, 3);
    const StepFunction xi = rs.step_function(5, 20, 3);
    const Real p(1 + trial % 5);
    const StepFunction out = koopman_apply(g, xi, Exponent(p));
    for (long k = -300; k <= 300; ++k) {
      // Offsets of 1/7919 keep samples away from the dyadic-ish breakpoints.
      const Rational x = q(k, 9) + q(1, 7919);
      REQUIRE(abs(out(x) - koopman_pointwise(g, xi, x, p)) < Real("1e-12"));
    }
  }
}

TEST_CASE("translation distortion has the overlap closed form") {
  // ||pi(t_c) xi_n - xi_n||_2^2 = 2c / (2n) for 0 <= c <= 2n.
  for (long n : {1L, 2L, 5L, 64L}) {
    for (const Rational c : {q(0), q(1, 2), q(1), q(2)}) {
      if (c > 2 * n) continue;
      const Real d = koopman_distortion(PLHomeo::translation(c), window_vector(q(n), Exponent(2)), Exponent(2));
      CHECK(abs(d - sqrt(to_real(c / n))) < tol);
    }
  }
  // Disjoint supports: the distance is 2^{1/p}.
  const StepFunction xi = window_vector(q(1), Exponent(3));
  CHECK(abs(koopman_distortion(PLHomeo::translation(q(5)), xi, Exponent(3)) - pow(Real(2), Real(1) / 3)) < tol);
}

TEST_CASE("the bump stretches a window and shrinks its height") {
  // g = bump doubles [0, 1) onto [0, 2), so pi(g) 1_[0,1) = 2^{-1/p} 1_[0,2).
  const StepFunction xi = StepFunction::indicator(q(0), q(1));
  const StepFunction out = koopman_apply(bump(), xi, Exponent(2));
  CHECK(out.breakpoints() == std::vector<Rational>{q(0), q(2)});
  CHECK(abs(out.values()[0] - 1 / sqrt(Real(2))) < tol);
}

TEST_CASE("Mazur map") {
  const StepFunction f({q(0), q(1), q(2)}, {Real(-4), Real(9)});
  const StepFunction m = mazur_map(f, Exponent(2), Exponent(4));
  CHECK(m.breakpoints() == f.breakpoints());
  CHECK(abs(m.values()[0] + 2) < tol);
  CHECK(abs(m.values()[1] - 3) < tol);
  RandomSource rs(32);
  for (int i = 0; i < 50; ++i) {
    const StepFunction u = rs.unit_step_function(Exponent(2));
    CHECK(abs(lp_norm(u, Exponent(2)) - 1) < Real("1e-20"));
    CHECK(abs(lp_norm(mazur_map(u, Exponent(2), Exponent(16)), Exponent(16)) - 1) < Real("1e-20"));
  }
}
