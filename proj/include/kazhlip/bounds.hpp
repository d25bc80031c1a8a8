#pragma once

// Upper bounds on the Kazhdan constant kappa(S) of a generating set of PL
// homeomorphisms without global fixed points.
//
//   Phi(t)     = max{ e^{2t}, 4 (2 - t^2)^{-2} },           t in [0, sqrt 2)
//   Phi^{-1}(t) = min{ log(t) / 2, sqrt2 (1 - t^{-1/2})^{1/2} }, t >= 1
//
// kappa(S) <= Phi^{-1}(L) with L the largest Lipschitz constant in S. The
// two branches come from window test vectors
//   xi_n = (2n)^{-1/p} 1_[-n, n]
// in L^2 and in L^p with p -> infinity. Every sweep cell is itself a valid
// finite-n bound: kappa(S) <= (p / 2) max_{g in S} ||pi(g) xi_n - xi_n||_p.

#include <string>
#include <vector>

#include "kazhlip/groupact.hpp"
#include "kazhlip/interval_set.hpp"
#include "kazhlip/numeric.hpp"
#include "kazhlip/parallel.hpp"

namespace kazhlip {

Real phi_exp_branch(const Real& t);
Real phi_rational_branch(const Real& t);
// Throws DomainError unless 0 <= t < sqrt 2.
Real phi(const Real& t);

Real phi_inv_log_branch(const Real& t);
Real phi_inv_sqrt_branch(const Real& t);
// Throws DomainError unless t >= 1.
Real phi_inv(const Real& t);

// Unique t* in (0, sqrt 2) where the two branches of Phi cross, by
// bisection on [1, 1.3].
Real phi_crossover();

// Supremum of any Kazhdan constant.
inline Real kappa_max() { return sqrt2(); }

// (p / 2) * distortion. Throws DomainError if p < 2 or distortion < 0.
Real kappa_transfer(const Real& p, const Real& distortion);

struct LogPowerCheck {
  bool holds = false;
  Real deviation;  // |x^{1/p} - 1|
  Real bound;      // log L / (p - log L)
  Real slack;      // bound - deviation
};

// |x^{1/p} - 1| <= log L / (p - log L) for L > 1, x in [1/L, L], p > log L.
// Throws DomainError when a precondition fails.
LogPowerCheck log_power_bound_check(const Real& x, const Real& p, const Real& lip);

// sqrt2 (1 - L^{-1/2})^{1/2}
Real lemma41_bound(const Real& lip);
// log(L) / 2
Real lemma43_bound(const Real& lip);
// p log L / (2 (p - log L)), the bound for one finite p. Requires p > log L.
Real lp_branch_bound_at(const Real& p, const Real& lip);

// Bound on ||pi(g) xi_n - xi_n||_2^2 from the L^2 argument:
// 2 - 2 ((n - M) / n) L^{-1/2}.
Real l2_window_bound_squared(const Rational& n, const Rational& disp, const Real& lip);
// Bound on ||pi(g) xi_n - xi_n||_p^p from the L^p argument:
// 4 M L / (2n) + ((n + M) / n) (log L / (p - log L))^p.
Real lp_window_bound_power(const Real& p, const Rational& n, const Rational& disp, const Real& lip);

struct GeneratorMetrics {
  std::string label;
  Rational lip;
  Rational displacement;
};

struct SweepCell {
  Real p;
  Rational n;
  Real distortion;        // max over S of ||pi(g) xi_n - xi_n||_p
  std::string attained_by;  // label of a maximizing generator
  Real kappa_upper;       // (p / 2) * distortion
  bool beyond_threshold;  // n > M, where the proof bookkeeping applies
};

struct BoundReport {
  std::string group_name;
  std::string label_hash;
  std::vector<GeneratorMetrics> per_generator;
  Rational L;  // max Lip over S
  Rational M;  // max displacement over S
  IntervalSet fixed_points;
  bool hypothesis_ok = false;  // no global fixed point
  std::vector<SweepCell> sweep;
  Real lemma41_bound;
  Real lemma43_bound;
  Real phi_inv_of_L;
  Real kappa_max;
  Real empirical_bound;  // min kappa_upper over the sweep
  Real headline;         // min(empirical_bound, phi_inv_of_L)
  std::vector<std::string> flags;
};

// FNV-1a over the sorted labels, 16 hex digits.
std::string label_set_hash(const GeneratorSet& set);

std::vector<GeneratorMetrics> generator_metrics(const GeneratorSet& set);

// n = 2^k max(1, M), k = 0..12.
std::vector<Rational> default_schedule(const Rational& max_displacement);
// {2, 4, 8, 16, 32, 64} restricted to p > log L.
std::vector<Real> default_p_list(const Rational& max_lip);

// Distortion of the window vector for one (p, n): max over generators.
SweepCell sweep_cell(const GeneratorSet& set, const Real& p, const Rational& n);

// One cell per (p, n) pair, p-major in the given orders.
std::vector<SweepCell> sweep(const GeneratorSet& set, const std::vector<Real>& p_list,
                             const std::vector<Rational>& schedule, Execution exec = Execution::parallel);

// Full report over a p list. Rejects an empty schedule, p < 2, and
// p <= log L when L > 1. A global fixed point is reported as the flag
// "global-fixed-point" with hypothesis_ok = false; the numbers are still
// computed.
BoundReport bound_report(const GeneratorSet& set, const std::vector<Real>& p_list,
                         const std::vector<Rational>& schedule, Execution exec = Execution::parallel);

// The p = 2 estimator.
BoundReport estimate_p2(const GeneratorSet& set, const std::vector<Rational>& schedule,
                        Execution exec = Execution::parallel);
// The single-p estimator for p > log L.
BoundReport estimate_lp(const GeneratorSet& set, const Real& p, const std::vector<Rational>& schedule,
                        Execution exec = Execution::parallel);

struct KappaVerdict {
  bool consistent = false;  // L >= Phi(kappa_candidate)
  Real lip;
  Real phi_of_candidate;
  Real phi_inv_of_lip;
};

// Throws DomainError unless 0 <= kappa_candidate < sqrt 2.
KappaVerdict theorem_check(const GeneratorSet& set, const Real& kappa_candidate);

// Phi^{-1}(|S|), the bound for a symmetric generating set of an orderable
// group, where every generator can be realized with Lip <= |S|.
Real corollary_bound(std::size_t set_size);

}  // namespace kazhlip
