#include "kazhlip/koopman.hpp"

#include <algorithm>
#include <string>

#include "kazhlip/errors.hpp"

namespace kazhlip {

using boost::multiprecision::abs;
using boost::multiprecision::isfinite;
using boost::multiprecision::pow;

Exponent::Exponent(Real p) : p_(std::move(p)) {
  if (!isfinite(p_) || p_ < 1) throw DomainError("p: Lebesgue exponent must be finite and >= 1, got " + format_real(p_));
}

StepFunction::StepFunction(std::vector<Rational> breakpoints, std::vector<Real> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.empty() && values_.empty()) return;
  if (breakpoints_.size() != values_.size() + 1 || values_.empty()) {
    throw DomainError("breakpoints: need exactly one more breakpoint than values");
  }
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1])) {
      throw DomainError("breakpoints[" + std::to_string(i + 1) + "]: must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!isfinite(values_[i])) throw DomainError("values[" + std::to_string(i) + "]: must be finite");
  }
}

StepFunction StepFunction::indicator(const Rational& a, const Rational& b, const Real& value) {
  return StepFunction({a, b}, {value});
}

Real StepFunction::operator()(const Rational& x) const {
  if (values_.empty() || x < breakpoints_.front() || x >= breakpoints_.back()) return Real(0);
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

StepFunction StepFunction::scaled(const Real& factor) const {
  std::vector<Real> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(x * factor);
  return StepFunction(breakpoints_, std::move(v));
}

std::vector<Rational> common_refinement(const StepFunction& a, const StepFunction& b) {
  std::vector<Rational> grid;
  grid.reserve(a.breakpoints().size() + b.breakpoints().size());
  std::merge(a.breakpoints().begin(), a.breakpoints().end(), b.breakpoints().begin(), b.breakpoints().end(),
             std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::vector<Real> values_on(const StepFunction& f, std::span<const Rational> grid) {
  std::vector<Real> out(grid.size() > 0 ? grid.size() - 1 : 0, Real(0));
  const auto& b = f.breakpoints();
  std::size_t i = 0;
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    while (i < f.pieces() && b[i + 1] <= grid[k]) ++i;
    if (i < f.pieces() && b[i] <= grid[k]) out[k] = f.values()[i];
  }
  return out;
}

StepFunction subtract(const StepFunction& a, const StepFunction& b) {
  auto grid = common_refinement(a, b);
  if (grid.size() < 2) return StepFunction();
  auto va = values_on(a, grid);
  const auto vb = values_on(b, grid);
  for (std::size_t k = 0; k < va.size(); ++k) va[k] -= vb[k];
  return StepFunction(std::move(grid), std::move(va));
}

Real max_abs_difference(const StepFunction& a, const StepFunction& b) {
  const auto diff = subtract(a, b);
  Real best(0);
  for (const auto& v : diff.values()) best = std::max(best, Real(abs(v)));
  return best;
}

Real lp_norm(const StepFunction& f, const Exponent& p) {
  Real sum(0);
  for (std::size_t i = 0; i < f.pieces(); ++i) {
    if (f.values()[i] == 0) continue;
    sum += pow(Real(abs(f.values()[i])), p.value()) * to_real(f.length(i));
  }
  if (sum == 0) return sum;
  return pow(sum, Real(1) / p.value());
}

Real inner_product(const StepFunction& a, const StepFunction& b) {
  const auto grid = common_refinement(a, b);
  const auto va = values_on(a, grid);
  const auto vb = values_on(b, grid);
  Real sum(0);
  for (std::size_t k = 0; k < va.size(); ++k) {
    if (va[k] == 0 || vb[k] == 0) continue;
    sum += va[k] * vb[k] * to_real(grid[k + 1] - grid[k]);
  }
  return sum;
}

StepFunction koopman_apply(const PLHomeo& g, const StepFunction& f, const Exponent& p) {
  if (f.pieces() == 0) return f;
  const auto& b = f.breakpoints();

  // Image breakpoints: g(b_j) merged with g's own nodes inside the support.
  std::vector<Rational> image;
  image.reserve(b.size());
  for (const auto& x : b) image.push_back(evaluate(g, x));
  std::vector<Rational> grid;
  grid.reserve(image.size() + g.size());
  {
    std::vector<Rational> inner;
    // A translation's single node is not a slope change.
    for (const auto& n : g.is_translation() ? std::span<const Node>{} : g.nodes()) {
      if (image.front() < n.y && n.y < image.back()) inner.push_back(n.y);
    }
    std::merge(image.begin(), image.end(), inner.begin(), inner.end(), std::back_inserter(grid));
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  }

  const Real inv_p = Real(1) / p.value();
  std::vector<Real> values;
  values.reserve(grid.size() - 1);
  std::vector<Rational> pre;
  pre.reserve(grid.size());
  for (const auto& u : grid) pre.push_back(evaluate_inverse(g, u));

  std::size_t j = 0;
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    while (j + 1 < f.pieces() && b[j + 1] <= pre[k]) ++j;
    // Slope of g^{-1} on [grid_k, grid_{k+1}], constant there.
    const Rational inv_slope = (pre[k + 1] - pre[k]) / (grid[k + 1] - grid[k]);
    if (inv_slope == 1) {
      values.push_back(f.values()[j]);
    } else {
      values.push_back(f.values()[j] * pow(to_real(inv_slope), inv_p));
    }
  }
  return StepFunction(std::move(grid), std::move(values));
}

Real koopman_distortion(const PLHomeo& g, const StepFunction& f, const Exponent& p) {
  return lp_norm(subtract(koopman_apply(g, f, p), f), p);
}

StepFunction window_vector(const Rational& n, const Exponent& p) {
  if (!(n > 0)) throw DomainError("n: window half-width must be positive, got " + to_string(n));
  const Real height = pow(to_real(2 * n), -Real(1) / p.value());
  return StepFunction::indicator(-n, n, height);
}

StepFunction mazur_map(const StepFunction& f, const Exponent& q, const Exponent& p) {
  const Real power = q.value() / p.value();
  std::vector<Real> values;
  values.reserve(f.pieces());
  for (const auto& v : f.values()) {
    if (v == 0) {
      values.push_back(Real(0));
    } else {
      Real m = pow(Real(abs(v)), power);
      values.push_back(v < 0 ? Real(-m) : m);
    }
  }
  return StepFunction(f.breakpoints(), std::move(values));
}

Real mazur_holder_ratio(const StepFunction& a, const StepFunction& b, const Exponent& q, const Exponent& p) {
  const Real lhs = lp_norm(subtract(mazur_map(a, q, p), mazur_map(b, q, p)), p);
  const Real dist = lp_norm(subtract(a, b), q);
  if (dist == 0) return Real(0);
  return lhs / pow(dist, q.value() / p.value());
}

}  // namespace kazhlip
