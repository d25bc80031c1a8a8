#include "kazhlip/limits.hpp"

#include <algorithm>

#include "kazhlip/errors.hpp"

namespace kazhlip {

ActionSequence::ActionSequence(std::vector<std::string> labels, std::vector<GeneratorSet> stages,
                               std::vector<Rational> indices)
    : labels_(std::move(labels)), stages_(std::move(stages)), indices_(std::move(indices)) {
  if (stages_.empty()) throw DomainError("stages: need at least one stage");
  auto sorted_labels = labels_;
  std::sort(sorted_labels.begin(), sorted_labels.end());
  for (std::size_t k = 0; k < stages_.size(); ++k) {
    auto stage_labels = stages_[k].labels();
    std::sort(stage_labels.begin(), stage_labels.end());
    if (stage_labels != sorted_labels) {
      throw DomainError("stages[" + std::to_string(k) + "]: labels differ from the sequence alphabet");
    }
  }
  if (indices_.empty()) {
    for (std::size_t k = 0; k < stages_.size(); ++k) indices_.emplace_back(static_cast<long>(k + 1));
  }
  if (indices_.size() != stages_.size()) throw DomainError("indices: need one index per stage");
  for (std::size_t k = 0; k + 1 < indices_.size(); ++k) {
    if (!(indices_[k] < indices_[k + 1])) {
      throw DomainError("indices[" + std::to_string(k + 1) + "]: stage indices must be strictly increasing");
    }
  }
}

GeneratorSet normalize_stage(const GeneratorSet& stage) {
  Rational alpha(0);
  for (const auto& g : stage.generators()) alpha = std::max(alpha, displacement(g.map));
  if (alpha == 0) throw DomainError("stage '" + stage.name() + "': every generator is the identity");
  if (alpha == 1) return stage;
  std::vector<Generator> gens;
  gens.reserve(stage.size());
  for (const auto& g : stage.generators()) gens.push_back({g.label, conjugate_by_homothety(g.map, alpha)});
  return GeneratorSet(stage.name(), std::move(gens), stage.symmetric());
}

namespace {

std::string annotate(const std::vector<std::pair<Rational, Rational>>& points) {
  bool constant = true, non_increasing = true, strictly_decreasing = true, non_decreasing = true;
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    const auto& a = points[k].second;
    const auto& b = points[k + 1].second;
    constant = constant && a == b;
    non_increasing = non_increasing && b <= a;
    strictly_decreasing = strictly_decreasing && b < a;
    non_decreasing = non_decreasing && a <= b;
  }
  if (constant) return "constant";
  if (strictly_decreasing) return "strictly decreasing";
  if (non_increasing) return "non-increasing";
  if (non_decreasing) return "increasing";
  return "non-monotone";
}

Rational richardson(const Rational& n0, const Rational& a0, const Rational& n1, const Rational& a1) {
  // a_k = a + C / n_k eliminated between two stages.
  return (n1 * a1 - n0 * a0) / (n1 - n0);
}

struct Tracker {
  const std::vector<GeneratorSet>& stages;
  const std::vector<Rational>& indices;
  const Rational& base;
  Real tolerance;
  std::map<std::string, WordTrack> cache;

  const WordTrack& track(const Word& w) {
    const std::string key = w.to_string();
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    WordTrack t;
    t.word = w;
    for (const auto& stage : stages) t.values.push_back(evaluate(word_evaluate(w, stage), base));
    const std::size_t k = t.values.size();
    if (k == 1) {
      t.last_difference = 0;
      t.estimate = t.values[0];
      t.converged = false;
    } else {
      t.last_difference = abs(t.values[k - 1] - t.values[k - 2]);
      t.estimate = richardson(indices[k - 2], t.values[k - 2], indices[k - 1], t.values[k - 1]);
      bool stable = to_real(t.last_difference) <= tolerance;
      if (!stable && k >= 3) {
        const Rational prev = richardson(indices[k - 3], t.values[k - 3], indices[k - 2], t.values[k - 2]);
        stable = to_real(abs(t.estimate - prev)) <= tolerance;
      }
      t.converged = stable;
    }
    return cache.emplace(key, std::move(t)).first->second;
  }
};

}  // namespace

std::vector<LipTrend> lip_trend(const ActionSequence& seq, const Real& tolerance) {
  std::vector<LipTrend> out;
  for (const auto& label : seq.labels()) {
    LipTrend t;
    t.label = label;
    for (std::size_t k = 0; k < seq.stages().size(); ++k) {
      t.points.emplace_back(seq.indices()[k], lip_constant(*seq.stages()[k].find(label)));
    }
    t.annotation = annotate(t.points);
    const bool bad_direction = t.annotation == "increasing" || t.annotation == "non-monotone";
    t.tends_to_one = !bad_direction && to_real(t.points.back().second - 1) <= tolerance;
    out.push_back(std::move(t));
  }
  return out;
}

std::string LimitDiagnostic::verdict() const {
  std::string out = lip_hypothesis_observed ? "lim Lip = 1 observed" : "hypothesis lim Lip = 1 not observed";
  out += all_converged ? "; all word values converged" : "; some word values did not converge";
  out += "; max additivity defect " + format_real(to_real(max_limit_defect));
  return out;
}

LimitDiagnostic limit_translation_diagnostic(const ActionSequence& seq, const std::vector<Word>& words,
                                             const Rational& base, const DiagnosticOptions& options) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (const auto& letter : words[i].letters()) {
      if (std::find(seq.labels().begin(), seq.labels().end(), letter.label) == seq.labels().end()) {
        throw DomainError("words[" + std::to_string(i) + "]: label '" + letter.label + "' is not in the alphabet");
      }
    }
  }

  LimitDiagnostic diag;
  diag.base = base;
  std::vector<GeneratorSet> stages;
  for (std::size_t k = 0; k < seq.stages().size(); ++k) {
    const auto& raw = seq.stages()[k];
    StageSummary s;
    s.n = seq.indices()[k];
    s.alpha = Rational(1);
    if (options.normalize) {
      s.alpha = Rational(0);
      for (const auto& g : raw.generators()) s.alpha = std::max(s.alpha, displacement(g.map));
      stages.push_back(normalize_stage(raw));
    } else {
      stages.push_back(raw);
    }
    const auto& stage = stages.back();
    s.max_lip = Rational(1);
    s.max_displacement = Rational(-1);
    for (const auto& g : stage.generators()) {
      s.max_lip = std::max(s.max_lip, lip_constant(g.map));
      if (Rational d = displacement(g.map); d > s.max_displacement) {
        s.max_displacement = d;
        s.max_displacement_label = g.label;
      }
      s.translation_at_base[g.label] = evaluate(g.map, base);
    }
    diag.stages.push_back(std::move(s));
  }

  const ActionSequence normalized(seq.labels(), stages, seq.indices());
  diag.lip = lip_trend(normalized, options.lip_tolerance);
  diag.lip_hypothesis_observed =
      std::all_of(diag.lip.begin(), diag.lip.end(), [](const LipTrend& t) { return t.tends_to_one; });

  Tracker tracker{stages, seq.indices(), base, options.cauchy_tolerance, {}};
  diag.all_converged = true;
  for (const auto& w : words) {
    diag.words.push_back(tracker.track(w));
    diag.all_converged = diag.all_converged && diag.words.back().converged;
  }

  diag.max_limit_defect = 0;
  for (const auto& w : words) {
    const auto& letters = w.letters();
    for (std::size_t cut = 1; cut < letters.size(); ++cut) {
      Word v(std::vector<Letter>(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(cut)));
      Word u(std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(cut), letters.end()));
      const WordTrack whole = tracker.track(w);
      const WordTrack tv = tracker.track(v);
      const WordTrack tu = tracker.track(u);
      DefectRow row{v, u, {}, {}, {}, Rational(0)};
      for (std::size_t k = 0; k < stages.size(); ++k) {
        const PLHomeo fv = word_evaluate(v, stages[k]);
        row.composition_defect.push_back(whole.values[k] - evaluate(fv, tu.values[k]));
        row.stage_defect.push_back(abs(whole.values[k] - evaluate(fv, tu.estimate)));
        row.stage_defect_bound.push_back(lip_constant(fv) * abs(tu.values[k] - tu.estimate));
      }
      row.limit_defect = abs(whole.estimate - tv.estimate - tu.estimate);
      diag.max_limit_defect = std::max(diag.max_limit_defect, row.limit_defect);
      diag.defects.push_back(std::move(row));
    }
  }

  diag.notes.push_back("injectivity of each stage homomorphism is assumed, not verified");
  if (!diag.lip_hypothesis_observed) diag.notes.push_back("hypothesis lim Lip = 1 not observed");
  return diag;
}

std::vector<Word> all_words(const std::vector<std::string>& labels, int max_length) {
  std::vector<Word> out;
  std::vector<Word> frontier{Word{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (const auto& label : labels) {
        for (int e : {1, -1}) {
          const Letter letter{label, e};
          if (!w.empty() && w.letters().back() == letter.inverse()) continue;
          next.push_back(w * Word({letter}));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace kazhlip
