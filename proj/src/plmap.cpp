#include "kazhlip/plmap.hpp"

#include <algorithm>
#include <string>

#include "kazhlip/errors.hpp"

namespace kazhlip {

namespace {

Rational segment_slope(const Node& a, const Node& b) { return (b.y - a.y) / (b.x - a.x); }

// Index i of the segment [x_i, x_{i+1}) containing x; requires
// x_0 < x < x_k.
std::size_t segment_index(std::span<const Node> nodes, const Rational& x) {
  auto it = std::upper_bound(nodes.begin(), nodes.end(), x,
                             [](const Rational& v, const Node& n) { return v < n.x; });
  return static_cast<std::size_t>(it - nodes.begin()) - 1;
}

std::vector<Node> canonicalize(std::vector<Node> nodes) {
  const std::size_t k = nodes.size();
  std::vector<Rational> slopes(k + 1, Rational(1));
  for (std::size_t i = 0; i + 1 < k; ++i) slopes[i + 1] = segment_slope(nodes[i], nodes[i + 1]);
  // Node i sits between slopes[i] and slopes[i + 1]. Removing a collinear
  // node leaves the other nodes' slopes unchanged, so one pass suffices.
  std::vector<Node> kept;
  for (std::size_t i = 0; i < k; ++i) {
    if (slopes[i] != slopes[i + 1]) kept.push_back(std::move(nodes[i]));
  }
  if (kept.empty()) {
    Rational offset = nodes.front().y - nodes.front().x;
    kept.push_back(Node{Rational(0), std::move(offset)});
  }
  return kept;
}

}  // namespace

PLHomeo::PLHomeo() : nodes_{Node{Rational(0), Rational(0)}} {}

PLHomeo::PLHomeo(std::vector<Node> nodes) {
  if (nodes.empty()) throw DomainError("nodes: a map needs at least one node");
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (!(nodes[i].x < nodes[i + 1].x)) {
      throw DomainError("nodes[" + std::to_string(i + 1) + "]: x-coordinates must be strictly increasing");
    }
    if (!(nodes[i].y < nodes[i + 1].y)) {
      throw DomainError("nodes[" + std::to_string(i + 1) + "]: y-coordinates must be strictly increasing");
    }
  }
  nodes_ = canonicalize(std::move(nodes));
}

PLHomeo PLHomeo::translation(const Rational& c) { return PLHomeo(Trusted{}, {Node{Rational(0), c}}); }

std::vector<Rational> PLHomeo::slopes() const {
  std::vector<Rational> out;
  out.reserve(nodes_.size() - 1);
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) out.push_back(segment_slope(nodes_[i], nodes_[i + 1]));
  return out;
}

bool canonical_less(const PLHomeo& a, const PLHomeo& b) {
  auto na = a.nodes();
  auto nb = b.nodes();
  return std::lexicographical_compare(na.begin(), na.end(), nb.begin(), nb.end(), [](const Node& l, const Node& r) {
    if (l.x != r.x) return l.x < r.x;
    return l.y < r.y;
  });
}

Rational evaluate(const PLHomeo& f, const Rational& x) {
  const auto nodes = f.nodes();
  if (x <= nodes.front().x) return x + f.left_offset();
  if (x >= nodes.back().x) return x + f.right_offset();
  const std::size_t i = segment_index(nodes, x);
  return nodes[i].y + segment_slope(nodes[i], nodes[i + 1]) * (x - nodes[i].x);
}

Real evaluate(const PLHomeo& f, const Real& x) {
  const auto nodes = f.nodes();
  if (x <= to_real(nodes.front().x)) return x + to_real(f.left_offset());
  if (x >= to_real(nodes.back().x)) return x + to_real(f.right_offset());
  std::size_t i = 0;
  while (i + 2 < nodes.size() && to_real(nodes[i + 1].x) <= x) ++i;
  return to_real(nodes[i].y) + to_real(segment_slope(nodes[i], nodes[i + 1])) * (x - to_real(nodes[i].x));
}

Rational evaluate_inverse(const PLHomeo& f, const Rational& y) {
  const auto nodes = f.nodes();
  if (y <= nodes.front().y) return y - f.left_offset();
  if (y >= nodes.back().y) return y - f.right_offset();
  auto it = std::upper_bound(nodes.begin(), nodes.end(), y,
                             [](const Rational& v, const Node& n) { return v < n.y; });
  const auto i = static_cast<std::size_t>(it - nodes.begin()) - 1;
  return nodes[i].x + (y - nodes[i].y) * (nodes[i + 1].x - nodes[i].x) / (nodes[i + 1].y - nodes[i].y);
}

PLHomeo compose(const PLHomeo& f, const PLHomeo& g) {
  // f o g is affine between consecutive points of
  // breakpoints(g) U g^{-1}(breakpoints(f)).
  std::vector<Rational> xs;
  xs.reserve(f.size() + g.size());
  for (const auto& n : g.nodes()) xs.push_back(n.x);
  for (const auto& n : f.nodes()) xs.push_back(evaluate_inverse(g, n.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Node> nodes;
  nodes.reserve(xs.size());
  for (auto& x : xs) {
    Rational y = evaluate(f, evaluate(g, x));
    nodes.push_back(Node{std::move(x), std::move(y)});
  }
  return PLHomeo(std::move(nodes));
}

PLHomeo invert(const PLHomeo& f) {
  std::vector<Node> nodes;
  nodes.reserve(f.size());
  for (const auto& n : f.nodes()) nodes.push_back(Node{n.y, n.x});
  if (f.is_translation()) return PLHomeo::translation(-f.left_offset());
  // Swapping keeps canonical form: slopes become reciprocals, so collinear
  // triples stay collinear and vice versa.
  return PLHomeo(PLHomeo::Trusted{}, std::move(nodes));
}

Rational lip_constant(const PLHomeo& f) {
  Rational lip(1);
  for (const auto& s : f.slopes()) {
    lip = std::max(lip, s);
    lip = std::max(lip, Rational(1) / s);
  }
  return lip;
}

Rational displacement(const PLHomeo& f) {
  // f - id is piecewise linear with constant tails, so the sup is at a node.
  Rational best(0);
  for (const auto& n : f.nodes()) best = std::max(best, Rational(abs(n.y - n.x)));
  return best;
}

PLHomeo conjugate_by_homothety(const PLHomeo& f, const Rational& alpha) {
  if (!(alpha > 0)) throw DomainError("alpha: homothety factor must be positive, got " + to_string(alpha));
  if (f.is_translation()) return PLHomeo::translation(f.left_offset() / alpha);
  std::vector<Node> nodes;
  nodes.reserve(f.size());
  for (const auto& n : f.nodes()) nodes.push_back(Node{n.x / alpha, n.y / alpha});
  return PLHomeo(PLHomeo::Trusted{}, std::move(nodes));
}

IntervalSet fixed_set(const PLHomeo& f) {
  const auto nodes = f.nodes();
  std::vector<Interval> parts;
  std::vector<Rational> h;
  h.reserve(nodes.size());
  for (const auto& n : nodes) h.push_back(n.y - n.x);

  if (h.front() == 0) parts.push_back(Interval{std::nullopt, nodes.front().x});
  if (h.back() == 0) parts.push_back(Interval{nodes.back().x, std::nullopt});
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (h[i] == 0) parts.push_back(Interval::point(nodes[i].x));
    if (i + 1 == nodes.size()) continue;
    const Rational& a = h[i];
    const Rational& b = h[i + 1];
    if (a == 0 && b == 0) {
      parts.push_back(Interval{nodes[i].x, nodes[i + 1].x});
    } else if ((a < 0 && b > 0) || (a > 0 && b < 0)) {
      // h is linear on the segment and changes sign: single root.
      Rational root = nodes[i].x + a * (nodes[i + 1].x - nodes[i].x) / (a - b);
      parts.push_back(Interval::point(root));
    }
  }
  return IntervalSet(std::move(parts));
}

}  // namespace kazhlip
