#include "kazhlip/random.hpp"

#include <algorithm>
#include <set>

namespace kazhlip {

std::int64_t RandomSource::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

Rational RandomSource::rational(std::int64_t max_num, std::int64_t max_den) {
  return Rational(integer(-max_num, max_num)) / Rational(integer(1, max_den));
}

Rational RandomSource::positive_rational(std::int64_t max_num, std::int64_t max_den) {
  return Rational(integer(1, max_num)) / Rational(integer(1, max_den));
}

Real RandomSource::real(const Real& lo, const Real& hi) {
  const std::uint64_t bits = engine_() >> 11;
  const Real u = Real(bits) / Real(std::uint64_t{1} << 53);
  return lo + (hi - lo) * u;
}

std::vector<Rational> RandomSource::distinct_sorted(std::size_t count, std::int64_t max_num, std::int64_t max_den) {
  std::set<Rational> values;
  while (values.size() < count) values.insert(rational(max_num, max_den));
  return {values.begin(), values.end()};
}

PLHomeo RandomSource::plhomeo(std::size_t max_nodes, std::int64_t max_num, std::int64_t max_den) {
  const auto k = static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(max_nodes)));
  auto xs = distinct_sorted(k, max_num, max_den);
  auto ys = distinct_sorted(k, max_num, max_den);
  std::vector<Node> nodes;
  nodes.reserve(k);
  for (std::size_t i = 0; i < k; ++i) nodes.push_back(Node{std::move(xs[i]), std::move(ys[i])});
  return PLHomeo(std::move(nodes));
}

PLHomeo RandomSource::bump(std::size_t max_interior, std::int64_t max_num, std::int64_t max_den) {
  const auto k = static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(max_interior)));
  const auto ends = distinct_sorted(2, max_num, max_den);
  const Rational& a = ends[0];
  const Rational& b = ends[1];
  // Interior coordinates a + (b - a) * u with u in (0, 1).
  const std::int64_t den = std::max<std::int64_t>(max_den, 8);
  auto interior = [&]() {
    std::set<Rational> u;
    while (u.size() < k) {
      Rational t = positive_rational(den - 1, den);
      if (t < 1) u.insert(a + (b - a) * t);
    }
    return std::vector<Rational>(u.begin(), u.end());
  };
  auto xs = interior();
  auto ys = interior();
  std::vector<Node> nodes{Node{a, a}};
  for (std::size_t i = 0; i < k; ++i) nodes.push_back(Node{std::move(xs[i]), std::move(ys[i])});
  nodes.push_back(Node{b, b});
  return PLHomeo(std::move(nodes));
}

StepFunction RandomSource::step_function(std::size_t max_pieces, std::int64_t max_num, std::int64_t max_den) {
  const auto k = static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(max_pieces)));
  auto breaks = distinct_sorted(k + 1, max_num, max_den);
  std::vector<Real> values;
  values.reserve(k);
  for (std::size_t i = 0; i < k; ++i) values.push_back(real(Real(-2), Real(2)));
  return StepFunction(std::move(breaks), std::move(values));
}

StepFunction RandomSource::unit_step_function(const Exponent& p, std::size_t max_pieces, std::int64_t max_num,
                                              std::int64_t max_den) {
  for (;;) {
    auto f = step_function(max_pieces, max_num, max_den);
    const Real norm = lp_norm(f, p);
    if (norm > 0) return f.scaled(1 / norm);
  }
}

}  // namespace kazhlip
