#pragma once

// Finite-stage diagnostics for a sequence of actions theta_n of one
// finitely generated group, each given on a fixed label alphabet.
//
// Each stage is conjugated by a homothety so that the largest generator
// displacement is exactly 1. If Lip(theta_n(g)) -> 1, the values
// theta_n(w)(x) converge to a translation action and w -> w . 0 is
// additive. The ultralimit of the argument is replaced by the ordinary
// limit, detected with a Cauchy test and a Richardson step in 1/n.

#include <map>
#include <string>
#include <vector>

#include "kazhlip/groupact.hpp"

namespace kazhlip {

class ActionSequence {
 public:
  // Stage k is indexed by indices[k] (the "n" of theta_n); when `indices`
  // is empty, stage k gets index k + 1. Throws DomainError if stages do
  // not share the label alphabet or indices are not strictly increasing.
  ActionSequence(std::vector<std::string> labels, std::vector<GeneratorSet> stages,
                 std::vector<Rational> indices = {});

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<GeneratorSet>& stages() const noexcept { return stages_; }
  const std::vector<Rational>& indices() const noexcept { return indices_; }

 private:
  std::vector<std::string> labels_;
  std::vector<GeneratorSet> stages_;
  std::vector<Rational> indices_;
};

// Conjugates every generator by x -> alpha x with alpha the current max
// displacement. Throws DomainError when every generator is the identity.
GeneratorSet normalize_stage(const GeneratorSet& stage);

struct LipTrend {
  std::string label;
  std::vector<std::pair<Rational, Rational>> points;  // (n, Lip)
  std::string annotation;  // "constant", "strictly decreasing", "non-increasing", "increasing", "non-monotone"
  bool tends_to_one = false;
};

// `tolerance` bounds Lip - 1 at the last stage for tends_to_one.
std::vector<LipTrend> lip_trend(const ActionSequence& seq, const Real& tolerance = Real("1e-2"));

struct StageSummary {
  Rational n;
  Rational max_lip;
  Rational max_displacement;  // after normalization when enabled
  std::string max_displacement_label;
  Rational alpha;  // homothety factor applied (1 when not normalizing)
  std::map<std::string, Rational> translation_at_base;  // theta_n(g)(base) per generator
};

struct WordTrack {
  Word word;
  std::vector<Rational> values;  // theta_n(w)(base) per stage
  Rational last_difference;      // |a_K - a_{K-1}|
  Rational estimate;             // Richardson-extrapolated limit
  bool converged = false;
};

// Additivity of the limiting translation numbers for a split w = v u.
struct DefectRow {
  Word left;   // v
  Word right;  // u
  // theta_n(vu)(x) - theta_n(v)(theta_n(u)(x)), exactly 0 at every stage.
  std::vector<Rational> composition_defect;
  // |theta_n(vu)(x) - theta_n(v)(est u)|, bounded by stage_defect_bound.
  std::vector<Rational> stage_defect;
  // Lip(theta_n(v)) * |theta_n(u)(x) - est u|.
  std::vector<Rational> stage_defect_bound;
  // |est(vu) - est(v) - est(u)|.
  Rational limit_defect;
};

struct DiagnosticOptions {
  bool normalize = true;
  Real cauchy_tolerance = Real("1e-6");
  Real lip_tolerance = Real("1e-2");
};

struct LimitDiagnostic {
  Rational base;
  std::vector<StageSummary> stages;
  std::vector<LipTrend> lip;
  std::vector<WordTrack> words;
  std::vector<DefectRow> defects;
  bool lip_hypothesis_observed = false;
  bool all_converged = false;
  Rational max_limit_defect;
  std::vector<std::string> notes;

  std::string verdict() const;
};

// Tracks every word in `words` and every split of each word into two
// nonempty factors. Throws DomainError on a label outside the alphabet.
LimitDiagnostic limit_translation_diagnostic(const ActionSequence& seq, const std::vector<Word>& words,
                                             const Rational& base, const DiagnosticOptions& options = {});

// Every freely reduced nonempty word of length <= max_length over the
// labels, shortlex order.
std::vector<Word> all_words(const std::vector<std::string>& labels, int max_length);

}  // namespace kazhlip
