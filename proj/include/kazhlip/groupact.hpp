#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kazhlip/interval_set.hpp"
#include "kazhlip/parallel.hpp"
#include "kazhlip/plmap.hpp"

namespace kazhlip {

struct Generator {
  std::string label;
  PLHomeo map;
};

// A finite generating set S. When `symmetric` is set, the set of maps is
// closed under inversion (checked on construction).
class GeneratorSet {
 public:
  GeneratorSet(std::string name, std::vector<Generator> generators, bool symmetric = false);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  bool symmetric() const noexcept { return symmetric_; }
  std::size_t size() const noexcept { return generators_.size(); }

  // nullptr if the label is unknown.
  const PLHomeo* find(std::string_view label) const;
  std::vector<std::string> labels() const;

 private:
  std::string name_;
  std::vector<Generator> generators_;
  bool symmetric_;
};

struct Letter {
  std::string label;
  int exponent = 1;  // +1 or -1

  Letter inverse() const { return Letter{label, -exponent}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word over generator labels.
class Word {
 public:
  Word() = default;
  // Reduces the letter sequence; exponents other than +-1 are rejected.
  explicit Word(std::vector<Letter> letters);

  // Whitespace- or '*'-separated tokens "a", "a^-1", "a^3".
  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word operator*(const Word& rhs) const;
  Word inverse() const;

  // Inverse of parse: "a b^-1"; the empty word prints as "e".
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Product of the letters in order, leftmost letter applied last
// ((ab)(x) = a(b(x))). Letters need not be reduced. Throws DomainError on
// an unknown label.
PLHomeo evaluate_letters(std::span<const Letter> letters, const GeneratorSet& set);
PLHomeo word_evaluate(const Word& word, const GeneratorSet& set);

struct BallEntry {
  PLHomeo element;
  Word word;  // a shortest word
};

inline constexpr std::size_t kDefaultBallCap = 100000;

// Distinct elements that are products of at most `radius` generators or
// inverses, sorted by canonical_less. Throws ResourceLimit once more than
// `cap` distinct elements are found.
std::vector<BallEntry> ball(const GeneratorSet& set, int radius, std::size_t cap = kDefaultBallCap,
                            Execution exec = Execution::parallel);

// Intersection of the generators' fixed sets, which is the fixed set of the
// whole group. Empty means no global fixed point.
IntervalSet global_fixed_set(const GeneratorSet& set);

struct OrbitSample {
  std::vector<Rational> points;  // sorted, distinct
  Rational min;
  Rational max;
};

// {w(x) : |w| <= radius}.
OrbitSample orbit_sample(const GeneratorSet& set, const Rational& x, int radius,
                         std::size_t cap = kDefaultBallCap);

}  // namespace kazhlip
