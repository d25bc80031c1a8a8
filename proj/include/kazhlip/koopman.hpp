#pragma once

// Step functions as test vectors in L^p(R), the Koopman action
//   (pi(g) xi)(x) = xi(g^{-1}(x)) * (Dg^{-1}(x))^{1/p}
// of the PL maps on them, and the Mazur map. Breakpoints are exact
// rationals; values are Real. Every integral is computed on the exact
// common refinement of breakpoints, so the only error is value rounding.

#include <span>
#include <vector>

#include "kazhlip/numeric.hpp"
#include "kazhlip/plmap.hpp"

namespace kazhlip {

// Lebesgue exponent p >= 1.
class Exponent {
 public:
  explicit Exponent(Real p);
  explicit Exponent(int p) : Exponent(Real(p)) {}

  const Real& value() const noexcept { return p_; }

 private:
  Real p_;
};

// Compactly supported piecewise-constant function:
// value values[i] on [breakpoints[i], breakpoints[i+1]), zero outside.
// The zero function may have no breakpoints at all.
class StepFunction {
 public:
  StepFunction() = default;
  // Throws DomainError unless breakpoints are strictly increasing,
  // breakpoints.size() == values.size() + 1 (or both empty), and every
  // value is finite.
  StepFunction(std::vector<Rational> breakpoints, std::vector<Real> values);

  // value * 1_[a, b].
  static StepFunction indicator(const Rational& a, const Rational& b, const Real& value = Real(1));

  const std::vector<Rational>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<Real>& values() const noexcept { return values_; }
  std::size_t pieces() const noexcept { return values_.size(); }
  Rational length(std::size_t i) const { return breakpoints_[i + 1] - breakpoints_[i]; }

  Real operator()(const Rational& x) const;

  StepFunction scaled(const Real& factor) const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Real> values_;
};

// Sorted union of both breakpoint lists.
std::vector<Rational> common_refinement(const StepFunction& a, const StepFunction& b);

// Value of f on each piece of `grid`, which must refine f's breakpoints.
std::vector<Real> values_on(const StepFunction& f, std::span<const Rational> grid);

StepFunction subtract(const StepFunction& a, const StepFunction& b);
// sup |a - b|.
Real max_abs_difference(const StepFunction& a, const StepFunction& b);

Real lp_norm(const StepFunction& f, const Exponent& p);
Real inner_product(const StepFunction& a, const StepFunction& b);

StepFunction koopman_apply(const PLHomeo& g, const StepFunction& f, const Exponent& p);
// || pi(g) f - f ||_p
Real koopman_distortion(const PLHomeo& g, const StepFunction& f, const Exponent& p);

// (2n)^{-1/p} 1_[-n, n], a unit vector of L^p. Throws unless n > 0.
StepFunction window_vector(const Rational& n, const Exponent& p);

// Piecewise v -> sign(v) |v|^{q/p}; maps the unit sphere of L^q onto the
// unit sphere of L^p.
StepFunction mazur_map(const StepFunction& f, const Exponent& q, const Exponent& p);

// ||M(a) - M(b)||_p / ||a - b||_q^{q/p}; reported for study only, since
// the Hoelder constant of the Mazur map is not known explicitly.
Real mazur_holder_ratio(const StepFunction& a, const StepFunction& b, const Exponent& q, const Exponent& p);

}  // namespace kazhlip
