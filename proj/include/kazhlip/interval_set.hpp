#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kazhlip/numeric.hpp"

namespace kazhlip {

// Closed interval with rational endpoints; a missing endpoint means the
// interval is unbounded on that side. A degenerate interval is a point.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  static Interval point(const Rational& x) { return {x, x}; }
  static Interval whole() { return {}; }

  bool contains(const Rational& x) const;
  bool is_point() const { return lo && hi && *lo == *hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Finite union of closed intervals, kept sorted with overlapping or
// touching parts merged.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> parts);

  static IntervalSet whole() { return IntervalSet({Interval::whole()}); }

  const std::vector<Interval>& intervals() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  bool is_whole() const noexcept { return parts_.size() == 1 && !parts_[0].lo && !parts_[0].hi; }
  bool contains(const Rational& x) const;

  IntervalSet intersect(const IntervalSet& other) const;

  // "(-inf, 0] U [2, 5] U {7}" or "empty".
  std::string to_string() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> parts_;
};

}  // namespace kazhlip
