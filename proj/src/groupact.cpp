#include "kazhlip/groupact.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <unordered_set>

#include "kazhlip/errors.hpp"

namespace kazhlip {

GeneratorSet::GeneratorSet(std::string name, std::vector<Generator> generators, bool symmetric)
    : name_(std::move(name)), generators_(std::move(generators)), symmetric_(symmetric) {
  if (generators_.empty()) throw DomainError("generators: a generating set must be nonempty");
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& label = generators_[i].label;
    if (label.empty()) throw DomainError("generators[" + std::to_string(i) + "].label: empty label");
    if (!seen.insert(label).second) {
      throw DomainError("generators[" + std::to_string(i) + "].label: duplicate label '" + label + "'");
    }
  }
  if (symmetric_) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const PLHomeo inv = invert(generators_[i].map);
      const bool closed = std::any_of(generators_.begin(), generators_.end(),
                                      [&](const Generator& g) { return g.map == inv; });
      if (!closed) {
        throw DomainError("generators[" + std::to_string(i) + "]: set is marked symmetric but the inverse of '" +
                          generators_[i].label + "' is missing");
      }
    }
  }
}

const PLHomeo* GeneratorSet::find(std::string_view label) const {
  for (const auto& g : generators_) {
    if (g.label == label) return &g.map;
  }
  return nullptr;
}

std::vector<std::string> GeneratorSet::labels() const {
  std::vector<std::string> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.label);
  return out;
}

Word::Word(std::vector<Letter> letters) {
  for (auto& letter : letters) {
    if (letter.exponent != 1 && letter.exponent != -1) {
      throw DomainError("word letter '" + letter.label + "' must have exponent +1 or -1");
    }
    if (!letters_.empty() && letters_.back() == letter.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(std::move(letter));
    }
  }
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '*'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;
    if (token == "e") continue;
    const auto caret = token.find('^');
    std::string label(token.substr(0, caret));
    long power = 1;
    if (caret != std::string_view::npos) {
      std::string exp(token.substr(caret + 1));
      std::size_t used = 0;
      try {
        power = std::stol(exp, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != exp.size()) throw DomainError("word token '" + std::string(token) + "': bad exponent");
    }
    if (label.empty()) throw DomainError("word token '" + std::string(token) + "': empty label");
    const int sign = power < 0 ? -1 : 1;
    for (long k = 0; k < std::labs(power); ++k) letters.push_back(Letter{label, sign});
  }
  return Word(std::move(letters));
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> letters = letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(letters));
}

Word Word::inverse() const {
  std::vector<Letter> letters;
  letters.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) letters.push_back(it->inverse());
  return Word(std::move(letters));
}

std::string Word::to_string() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.label;
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

PLHomeo evaluate_letters(std::span<const Letter> letters, const GeneratorSet& set) {
  PLHomeo result;
  for (const auto& letter : letters) {
    const PLHomeo* g = set.find(letter.label);
    if (g == nullptr) throw DomainError("word: unknown generator label '" + letter.label + "'");
    result = compose(result, letter.exponent > 0 ? *g : invert(*g));
  }
  return result;
}

PLHomeo word_evaluate(const Word& word, const GeneratorSet& set) {
  return evaluate_letters(word.letters(), set);
}

namespace {

struct LetterMap {
  Letter letter;
  PLHomeo map;
};

std::vector<LetterMap> letter_maps(const GeneratorSet& set) {
  std::vector<LetterMap> out;
  for (const auto& g : set.generators()) {
    out.push_back({Letter{g.label, 1}, g.map});
    out.push_back({Letter{g.label, -1}, invert(g.map)});
  }
  return out;
}

struct CanonicalLess {
  bool operator()(const PLHomeo& a, const PLHomeo& b) const { return canonical_less(a, b); }
};

}  // namespace

std::vector<BallEntry> ball(const GeneratorSet& set, int radius, std::size_t cap, Execution exec) {
  if (radius < 0) throw DomainError("radius: must be nonnegative");
  const auto letters = letter_maps(set);
  std::map<PLHomeo, Word, CanonicalLess> seen;
  seen.emplace(PLHomeo::identity(), Word{});
  std::vector<BallEntry> frontier{{PLHomeo::identity(), Word{}}};

  for (int r = 1; r <= radius && !frontier.empty(); ++r) {
    const std::size_t count = frontier.size() * letters.size();
    std::vector<std::optional<PLHomeo>> products(count);
    for_each_index(count, exec, [&](std::size_t idx) {
      const auto& entry = frontier[idx / letters.size()];
      const auto& lm = letters[idx % letters.size()];
      const auto& w = entry.word.letters();
      if (!w.empty() && w.back() == lm.letter.inverse()) return;
      products[idx] = compose(entry.element, lm.map);
    });

    // Sequential merge in index order keeps the chosen words deterministic.
    std::vector<BallEntry> next;
    for (std::size_t idx = 0; idx < count; ++idx) {
      if (!products[idx]) continue;
      auto it = seen.find(*products[idx]);
      if (it != seen.end()) continue;
      const auto& entry = frontier[idx / letters.size()];
      Word word = entry.word * Word({letters[idx % letters.size()].letter});
      seen.emplace(*products[idx], word);
      next.push_back({std::move(*products[idx]), std::move(word)});
      if (seen.size() > cap) {
        throw ResourceLimit("ball: more than " + std::to_string(cap) + " distinct elements at radius " +
                            std::to_string(r));
      }
    }
    frontier = std::move(next);
  }

  std::vector<BallEntry> out;
  out.reserve(seen.size());
  for (auto& [element, word] : seen) out.push_back({element, word});
  return out;
}

IntervalSet global_fixed_set(const GeneratorSet& set) {
  IntervalSet result = IntervalSet::whole();
  for (const auto& g : set.generators()) {
    result = result.intersect(fixed_set(g.map));
    if (result.empty()) break;
  }
  return result;
}

OrbitSample orbit_sample(const GeneratorSet& set, const Rational& x, int radius, std::size_t cap) {
  if (radius < 0) throw DomainError("radius: must be nonnegative");
  const auto letters = letter_maps(set);
  std::set<Rational> seen{x};
  std::vector<Rational> frontier{x};
  for (int r = 1; r <= radius && !frontier.empty(); ++r) {
    std::vector<Rational> next;
    for (const auto& point : frontier) {
      for (const auto& lm : letters) {
        Rational image = evaluate(lm.map, point);
        if (seen.insert(image).second) next.push_back(std::move(image));
      }
    }
    if (seen.size() > cap) throw ResourceLimit("orbit_sample: more than " + std::to_string(cap) + " points");
    frontier = std::move(next);
  }
  OrbitSample out{{seen.begin(), seen.end()}, *seen.begin(), *seen.rbegin()};
  return out;
}

}  // namespace kazhlip
