#include <doctest.h>

#include <set>

#include "kazhlip/errors.hpp"
#include "kazhlip/groupact.hpp"
#include "kazhlip/random.hpp"

using namespace kazhlip;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

PLHomeo bump_on(long a, long b) {
  // Slope 2 on the first half, 2/3 after: identity outside [a, b].
  const Rational m = Rational(a) + Rational(b - a, 4);
  return PLHomeo({{q(a), q(a)}, {m, Rational(a) + Rational(b - a, 2)}, {q(b), q(b)}});
}

// Commuting bumps with disjoint supports generate a copy of Z^2.
GeneratorSet z2() { return GeneratorSet("z2", {{"a", bump_on(0, 4)}, {"b", bump_on(10, 14)}}); }

struct Less {
  bool operator()(const PLHomeo& x, const PLHomeo& y) const { return canonical_less(x, y); }
};

// Every product of at most `radius` letters, deduplicated by brute force.
std::set<PLHomeo, Less> brute_ball(const GeneratorSet& set, int radius) {
  std::vector<PLHomeo> letters;
  for (const auto& g : set.generators()) {
    letters.push_back(g.map);
    letters.push_back(invert(g.map));
  }
  std::set<PLHomeo, Less> out{PLHomeo()};
  std::vector<PLHomeo> layer{PLHomeo()};
  for (int r = 0; r < radius; ++r) {
    std::vector<PLHomeo> next;
    for (const auto& w : layer) {
      for (const auto& l : letters) next.push_back(compose(w, l));
    }
    for (const auto& w : next) out.insert(w);
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("words are parsed and freely reduced") {
  const Word w = Word::parse("a b^-1 a^3");
  CHECK(w.length() == 5);
  CHECK(w.to_string() == "a b^-1 a a a");
  CHECK(Word::parse("a*a^-1").empty());
  CHECK(Word::parse("e").to_string() == "e");
  CHECK(Word::parse("a b^-1 b c").to_string() == "a c");
  CHECK((w * w.inverse()).empty());
  CHECK(Word::parse("a^-2").inverse().to_string() == "a a");
  CHECK_THROWS(Word::parse("a^x"));
  CHECK_THROWS(Word(std::vector<Letter>{{"a", 2}}));
}

TEST_CASE("word evaluation applies the leftmost letter last") {
  const GeneratorSet s("s", {{"t", PLHomeo::translation(q(1))}, {"u", bump_on(0, 4)}});
  const PLHomeo tu = word_evaluate(Word::parse("t u"), s);
  CHECK(evaluate(tu, q(1)) == evaluate(PLHomeo::translation(q(1)), evaluate(bump_on(0, 4), q(1))));
  CHECK(word_evaluate(Word::parse("t^-3"), s) == PLHomeo::translation(q(-3)));
  CHECK(word_evaluate(Word(), s).is_identity());
  CHECK_THROWS_AS(word_evaluate(Word::parse("z"), s), DomainError);
}

TEST_CASE("generating set validation") {
  CHECK_THROWS_AS(GeneratorSet("x", {}), DomainError);
  CHECK_THROWS_AS(GeneratorSet("x", {{"a", PLHomeo()}, {"a", PLHomeo()}}), DomainError);
  CHECK_THROWS_AS(GeneratorSet("x", {{"", PLHomeo()}}), DomainError);
  CHECK_THROWS_AS(GeneratorSet("x", {{"a", bump_on(0, 4)}}, true), DomainError);
  const GeneratorSet sym("x", {{"a", bump_on(0, 4)}, {"A", invert(bump_on(0, 4))}}, true);
  CHECK(sym.find("A") != nullptr);
  CHECK(sym.find("b") == nullptr);
}

TEST_CASE("ball sizes of Z^2 and Z match the lattice counts") {
  // |{(i, j) : |i| + |j| <= r}| = 2r^2 + 2r + 1.
  for (int r = 0; r <= 4; ++r) CHECK(ball(z2(), r).size() == static_cast<std::size_t>(2 * r * r + 2 * r + 1));
  CHECK(ball(z2(), 2).size() == 13);
  const GeneratorSet z("z", {{"t", PLHomeo::translation(q(1))}});
  CHECK(ball(z, 5).size() == 11);
}

TEST_CASE("ball agrees with brute-force enumeration") {
  RandomSource rs(21);
  for (int trial = 0; trial < 4; ++trial) {
    const GeneratorSet s("r", {{"a", rs.bump(2, 8, 2)}, {"b", rs.plhomeo(3, 8, 2)}});
    const auto fast = ball(s, 3);
    const auto slow = brute_ball(s, 3);
    REQUIRE(fast.size() == slow.size());
    auto it = slow.begin();
    for (const auto& e : fast) {
      CHECK(e.element == *it++);
      CHECK(word_evaluate(e.word, s) == e.element);
    }
  }
}

TEST_CASE("ball words are shortest") {
  const auto entries = ball(z2(), 3);
  for (const auto& e : entries) {
    // In Z^2 the shortest word for a^i b^j has length |i| + |j|.
    int i = 0, j = 0;
    for (const auto& l : e.word.letters()) (l.label == "a" ? i : j) += l.exponent;
    CHECK(e.word.length() == static_cast<std::size_t>(std::abs(i) + std::abs(j)));
  }
}

TEST_CASE("ball enforces its cap") {
  const GeneratorSet free2("f", {{"a", PLHomeo({{q(0), q(0)}, {q(1), q(2)}, {q(3), q(3)}})},
                                 {"b", PLHomeo::translation(q(1))}});
  CHECK_THROWS_AS(ball(free2, 8, 500), ResourceLimit);
}

TEST_CASE("global fixed set and orbits") {
  const GeneratorSet two("two", {{"a", bump_on(0, 2)}, {"b", bump_on(5, 7)}});
  CHECK(global_fixed_set(two).to_string() == "(-inf, 0] U [2, 5] U [7, inf)");
  const GeneratorSet with_shift("two", {{"a", bump_on(0, 2)}, {"b", bump_on(5, 7)}, {"t", PLHomeo::translation(q(1))}});
  CHECK(global_fixed_set(with_shift).empty());

  const GeneratorSet z("z", {{"t", PLHomeo::translation(q(1))}});
  const OrbitSample o = orbit_sample(z, q(0), 3);
  CHECK(o.points.size() == 7);
  CHECK(o.min == -3);
  CHECK(o.max == 3);
  const OrbitSample fixed = orbit_sample(two, q(3), 4);
  CHECK(fixed.points == std::vector<Rational>{q(3)});
}
