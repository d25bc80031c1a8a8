#include "kazhlip/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace kazhlip {

namespace {

// Lower endpoints order -inf first; upper endpoints order +inf last.
bool lo_less(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return static_cast<bool>(b);
  if (!b) return false;
  return *a < *b;
}

bool hi_less(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

// lo <= hi where lo may be -inf and hi may be +inf.
bool lo_leq_hi(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  return !lo || !hi || *lo <= *hi;
}

}  // namespace

bool Interval::contains(const Rational& x) const {
  return (!lo || *lo <= x) && (!hi || x <= *hi);
}

IntervalSet::IntervalSet(std::vector<Interval> parts) {
  for (const auto& part : parts) {
    if (!lo_leq_hi(part.lo, part.hi)) throw std::invalid_argument("interval with lo > hi");
  }
  std::sort(parts.begin(), parts.end(),
            [](const Interval& a, const Interval& b) { return lo_less(a.lo, b.lo); });
  for (auto& part : parts) {
    if (!parts_.empty() && lo_leq_hi(part.lo, parts_.back().hi)) {
      if (hi_less(parts_.back().hi, part.hi)) parts_.back().hi = part.hi;
    } else {
      parts_.push_back(std::move(part));
    }
  }
}

bool IntervalSet::contains(const Rational& x) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& i) { return i.contains(x); });
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  for (const auto& a : parts_) {
    for (const auto& b : other.parts_) {
      Interval c{lo_less(a.lo, b.lo) ? b.lo : a.lo, hi_less(a.hi, b.hi) ? a.hi : b.hi};
      if (lo_leq_hi(c.lo, c.hi)) out.push_back(std::move(c));
    }
  }
  return IntervalSet(std::move(out));
}

std::string IntervalSet::to_string() const {
  if (parts_.empty()) return "empty";
  std::string out;
  for (const auto& part : parts_) {
    if (!out.empty()) out += " U ";
    if (part.is_point()) {
      out += "{" + kazhlip::to_string(*part.lo) + "}";
      continue;
    }
    out += part.lo ? "[" + kazhlip::to_string(*part.lo) : "(-inf";
    out += ", ";
    out += part.hi ? kazhlip::to_string(*part.hi) + "]" : "inf)";
  }
  return out;
}

}  // namespace kazhlip
