#pragma once

// Piecewise-linear, orientation-preserving homeomorphisms of the real line
// with slope-1 translation tails, over exact rationals.
//
// A map is a strictly increasing list of nodes (x_i, y_i). Between nodes it
// interpolates linearly; left of the first node it is x + (y_0 - x_0) and
// right of the last node it is x + (y_k - x_k). Such maps form a group under
// composition, every element is bi-Lipschitz, and displacement is bounded
// by construction.

#include <span>
#include <vector>

#include "kazhlip/interval_set.hpp"
#include "kazhlip/numeric.hpp"

namespace kazhlip {

struct Node {
  Rational x;
  Rational y;

  friend bool operator==(const Node&, const Node&) = default;
};

class PLHomeo {
 public:
  // Identity.
  PLHomeo();

  // Validates strict monotonicity of both coordinates and canonicalizes:
  // nodes whose left and right slopes agree are removed (tails count as
  // slope 1), and a pure translation by c becomes the single node (0, c).
  // Throws DomainError naming the offending node index.
  explicit PLHomeo(std::vector<Node> nodes);

  static PLHomeo identity() { return PLHomeo(); }
  static PLHomeo translation(const Rational& c);

  std::span<const Node> nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  bool is_translation() const noexcept { return nodes_.size() == 1; }
  bool is_identity() const { return is_translation() && nodes_[0].y == 0; }

  // f(x) - x on the left and right tails.
  Rational left_offset() const { return nodes_.front().y - nodes_.front().x; }
  Rational right_offset() const { return nodes_.back().y - nodes_.back().x; }

  // Interior slopes, size() - 1 of them.
  std::vector<Rational> slopes() const;

  friend bool operator==(const PLHomeo&, const PLHomeo&) = default;

 private:
  struct Trusted {};
  PLHomeo(Trusted, std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

  std::vector<Node> nodes_;

  friend PLHomeo invert(const PLHomeo& f);
  friend PLHomeo conjugate_by_homothety(const PLHomeo& f, const Rational& alpha);
};

// Lexicographic order on canonical node lists; the deterministic order used
// for ball enumeration output.
bool canonical_less(const PLHomeo& a, const PLHomeo& b);

Rational evaluate(const PLHomeo& f, const Rational& x);
Real evaluate(const PLHomeo& f, const Real& x);
// f^{-1}(y) without building the inverse.
Rational evaluate_inverse(const PLHomeo& f, const Rational& y);

// f after g, i.e. x -> f(g(x)).
PLHomeo compose(const PLHomeo& f, const PLHomeo& g);
PLHomeo invert(const PLHomeo& f);

// max of every slope, every reciprocal slope, and 1.
Rational lip_constant(const PLHomeo& f);
// sup |f(x) - x|, attained at a node or on a tail.
Rational displacement(const PLHomeo& f);

// x -> f(alpha x) / alpha. Throws DomainError unless alpha > 0.
PLHomeo conjugate_by_homothety(const PLHomeo& f, const Rational& alpha);

// {x : f(x) = x} as a union of points and closed (possibly unbounded)
// intervals.
IntervalSet fixed_set(const PLHomeo& f);

}  // namespace kazhlip
