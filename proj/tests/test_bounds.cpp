#include <doctest.h>

#include "kazhlip/bounds.hpp"
#include "kazhlip/errors.hpp"
#include "kazhlip/koopman.hpp"

using namespace kazhlip;
using boost::multiprecision::abs;
using boost::multiprecision::exp;
using boost::multiprecision::log;
using boost::multiprecision::sqrt;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

bool near(const Real& a, const char* b, const char* tol = "1e-14") { return abs(a - Real(b)) <= Real(tol); }

PLHomeo bump() { return PLHomeo({{q(0), q(0)}, {q(1), q(2)}, {q(3), q(3)}}); }
GeneratorSet bump_set() { return GeneratorSet("bump", {{"a", bump()}, {"A", invert(bump())}}, true); }
GeneratorSet shift_set() {
  return GeneratorSet("shift", {{"a", bump()}, {"A", invert(bump())}, {"t", PLHomeo::translation(q(1))}});
}

}  // namespace

// Reference values computed with 30-digit mpmath.
TEST_CASE("Phi at reference points") {
  CHECK(phi(Real(0)) == 1);
  CHECK(near(phi(Real(1)), "7.38905609893065022723"));
  CHECK(near(phi(Real("1.3")), "41.6233090530697190", "1e-12"));
  CHECK(near(phi_exp_branch(Real("1.3")), "13.4637380350017", "1e-12"));
  CHECK(near(phi_exp_branch(Real("1.2")), "11.0231763806416017", "1e-13"));
  CHECK(near(phi_rational_branch(Real("1.2")), "12.7551020408163265", "1e-13"));
  CHECK_THROWS_AS(phi(Real("1.5")), DomainError);
  CHECK_THROWS_AS(phi(Real("1.4143")), DomainError);
  CHECK_THROWS_AS(phi(Real(-1)), DomainError);
}

TEST_CASE("Phi inverse at reference points") {
  CHECK(phi_inv(Real(1)) == 0);
  CHECK(near(phi_inv(Real(16)), "1.22474487139158905"));
  CHECK(near(phi_inv_log_branch(Real(16)), "1.38629436111989061"));
  CHECK(near(phi_inv(Real(2)), "0.34657359027997265"));
  CHECK(near(phi_inv_sqrt_branch(Real(2)), "0.76536686473017954"));
  CHECK(near(phi_inv_log_branch(Real(4)), "0.69314718055994531"));
  CHECK(near(phi_inv_sqrt_branch(Real(4)), "1"));
  CHECK_THROWS_AS(phi_inv(Real("0.5")), DomainError);
}

TEST_CASE("crossover of the two branches") {
  const Real t = phi_crossover();
  CHECK(near(t, "1.1760019423068612"));
  CHECK(near(phi_exp_branch(t), "10.506602663317840", "1e-12"));
  CHECK(abs(phi_exp_branch(t) - phi_rational_branch(t)) < Real("1e-15"));
  CHECK(kappa_max() == sqrt2());
}

TEST_CASE("closed-form bounds") {
  CHECK(near(lemma41_bound(Real(2)), "0.7653668647301795"));
  CHECK(near(lemma43_bound(Real(2)), "0.34657359027997265"));
  CHECK(near(corollary_bound(2), "0.346573590279972654708616"));
  CHECK(near(corollary_bound(16), "1.22474487139158904909864"));
  // p log L / (2 (p - log L)) decreases to log(L)/2.
  CHECK(lp_branch_bound_at(Real(8), Real(2)) > lp_branch_bound_at(Real(64), Real(2)));
  CHECK(lp_branch_bound_at(Real(64), Real(2)) > lemma43_bound(Real(2)));
  CHECK_THROWS_AS(lp_branch_bound_at(Real("0.5"), Real(2)), DomainError);
  CHECK(near(kappa_transfer(Real(4), Real("0.25")), "0.5"));
  CHECK_THROWS_AS(kappa_transfer(Real(1), Real(1)), DomainError);
  CHECK_THROWS_AS(kappa_transfer(Real(2), Real(-1)), DomainError);
}

TEST_CASE("log-power inequality at hand-picked points") {
  // x = e, L = e, p = 2: |sqrt e - 1| <= 1 / (2 - 1).
  const Real e = exp(Real(1));
  const auto a = log_power_bound_check(e, Real(2), e);
  CHECK(a.holds);
  CHECK(near(a.deviation, "0.64872127070012815"));
  CHECK(near(a.bound, "1"));
  const auto b = log_power_bound_check(Real("0.25"), Real(10), Real(4));
  CHECK(b.holds);
  CHECK(near(b.deviation, "0.12944943670387586"));
  CHECK(near(b.bound, "0.16094053119977831"));
  CHECK_THROWS_AS(log_power_bound_check(Real(5), Real(10), Real(4)), DomainError);
  CHECK_THROWS_AS(log_power_bound_check(Real(1), Real(1), Real(4)), DomainError);
  CHECK_THROWS_AS(log_power_bound_check(Real(1), Real(10), Real(1)), DomainError);
}

TEST_CASE("label hash is FNV-1a over sorted labels") {
  // Computed independently: FNV-1a 64 of "A\x1f" "a".
  CHECK(label_set_hash(bump_set()) == "cb39fb506fe0a28e");
  const GeneratorSet reordered("other", {{"A", invert(bump())}, {"a", bump()}}, true);
  CHECK(label_set_hash(reordered) == label_set_hash(bump_set()));
}

TEST_CASE("schedules and p lists") {
  const auto s = default_schedule(q(3, 2));
  REQUIRE(s.size() == 13);
  CHECK(s.front() == q(3, 2));
  CHECK(s.back() == 4096 * q(3, 2));
  CHECK(default_schedule(q(0)).front() == 1);
  CHECK(default_p_list(q(2)).size() == 6);
  // log(2000) ~ 7.6 removes p = 2 and p = 4.
  CHECK(default_p_list(q(2000)).front() == 8);
}

TEST_CASE("sweep cells reproduce direct distortion") {
  const auto cell = sweep_cell(bump_set(), Real(2), q(8));
  const Exponent two(2);
  const StepFunction xi = window_vector(q(8), two);
  const Real da = koopman_distortion(bump(), xi, two);
  const Real dA = koopman_distortion(invert(bump()), xi, two);
  CHECK(abs(cell.distortion - std::max(da, dA)) < Real("1e-20"));
  CHECK(cell.beyond_threshold);
  CHECK(abs(cell.kappa_upper - cell.distortion) < Real("1e-20"));
  CHECK_FALSE(sweep_cell(bump_set(), Real(2), q(1)).beyond_threshold);
}

TEST_CASE("bound report flags and headline") {
  const auto schedule = default_schedule(q(1));
  const BoundReport r = bound_report(bump_set(), {Real(2)}, schedule);
  CHECK(r.L == 2);
  CHECK(r.M == 1);
  CHECK_FALSE(r.hypothesis_ok);
  CHECK(std::find(r.flags.begin(), r.flags.end(), "global-fixed-point") != r.flags.end());
  CHECK(r.sweep.size() == schedule.size());

  const BoundReport s = estimate_p2(shift_set(), schedule);
  CHECK(s.hypothesis_ok);
  CHECK(s.headline <= s.phi_inv_of_L);
  CHECK(s.headline <= s.empirical_bound);
  CHECK(near(s.phi_inv_of_L, "0.34657359027997265"));

  CHECK_THROWS_AS(bound_report(bump_set(), {Real(2)}, {}), DomainError);
  CHECK_THROWS_AS(bound_report(bump_set(), {Real(1)}, schedule), DomainError);
  CHECK_THROWS_AS(bound_report(bump_set(), {Real(2)}, {q(0)}), DomainError);
  const GeneratorSet steep("steep", {{"a", PLHomeo({{q(0), q(0)}, {q(1), q(100)}, {q(200), q(200)}})}});
  CHECK_THROWS_AS(estimate_lp(steep, Real(4), schedule), DomainError);
}

TEST_CASE("candidate constants against the Lipschitz bound") {
  const auto v = theorem_check(shift_set(), Real("0.3"));
  CHECK(v.consistent);
  CHECK(near(v.phi_inv_of_lip, "0.34657359027997265"));
  CHECK_FALSE(theorem_check(shift_set(), Real("0.5")).consistent);
  CHECK_THROWS_AS(theorem_check(shift_set(), Real("1.5")), DomainError);
}
