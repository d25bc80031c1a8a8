#include "kazhlip/bounds.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <limits>

#include "kazhlip/errors.hpp"
#include "kazhlip/koopman.hpp"

namespace kazhlip {

using boost::multiprecision::abs;
using boost::multiprecision::exp;
using boost::multiprecision::log;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

namespace {

void require_phi_domain(const Real& t) {
  if (!(t >= 0) || !(t * t < 2)) throw DomainError("t: Phi is defined on [0, sqrt 2), got " + format_real(t));
}

void require_phi_inv_domain(const Real& t) {
  if (!(t >= 1)) throw DomainError("t: Phi^-1 is defined on [1, inf), got " + format_real(t));
}

// Positive below the crossover (exponential branch on top), negative above.
Real branch_gap(const Real& t) { return 2 * t - log(Real(4)) + 2 * log(2 - t * t); }

}  // namespace

Real phi_exp_branch(const Real& t) {
  require_phi_domain(t);
  return exp(2 * t);
}

Real phi_rational_branch(const Real& t) {
  require_phi_domain(t);
  const Real d = 2 - t * t;
  return 4 / (d * d);
}

Real phi(const Real& t) { return std::max(phi_exp_branch(t), phi_rational_branch(t)); }

Real phi_inv_log_branch(const Real& t) {
  require_phi_inv_domain(t);
  return log(t) / 2;
}

Real phi_inv_sqrt_branch(const Real& t) {
  require_phi_inv_domain(t);
  return sqrt2() * sqrt(1 - 1 / sqrt(t));
}

Real phi_inv(const Real& t) { return std::min(phi_inv_log_branch(t), phi_inv_sqrt_branch(t)); }

Real phi_crossover() {
  Real lo("1");
  Real hi("1.3");
  // 64 halvings shrink the bracket far below 1e-10 at any supported
  // working precision.
  for (int i = 0; i < 64; ++i) {
    Real mid = (lo + hi) / 2;
    if (branch_gap(mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

Real kappa_transfer(const Real& p, const Real& distortion) {
  if (!(p >= 2)) throw DomainError("p: the L^p transfer needs p >= 2, got " + format_real(p));
  if (!(distortion >= 0)) throw DomainError("distortion: must be nonnegative, got " + format_real(distortion));
  return p / 2 * distortion;
}

LogPowerCheck log_power_bound_check(const Real& x, const Real& p, const Real& lip) {
  if (!(lip > 1)) throw DomainError("L: must exceed 1, got " + format_real(lip));
  // Admits x = 1/L rounded down by one unit in the last place.
  const Real ulps = 4 * std::numeric_limits<Real>::epsilon();
  if (!(x * lip >= 1 - ulps) || !(x <= lip * (1 + ulps))) throw DomainError("x: must lie in [1/L, L], got " + format_real(x));
  const Real log_l = log(lip);
  if (!(p > log_l)) throw DomainError("p: must exceed log L, got " + format_real(p));
  LogPowerCheck out;
  out.deviation = abs(pow(x, 1 / p) - 1);
  out.bound = log_l / (p - log_l);
  out.slack = out.bound - out.deviation;
  out.holds = out.slack >= 0;
  return out;
}

Real lemma41_bound(const Real& lip) { return sqrt2() * sqrt(1 - 1 / sqrt(lip)); }

Real lemma43_bound(const Real& lip) { return log(lip) / 2; }

Real lp_branch_bound_at(const Real& p, const Real& lip) {
  const Real log_l = log(lip);
  if (!(p > log_l)) throw DomainError("p: must exceed log L, got " + format_real(p));
  return p * log_l / (2 * (p - log_l));
}

Real l2_window_bound_squared(const Rational& n, const Rational& disp, const Real& lip) {
  return 2 - 2 * to_real((n - disp) / n) / sqrt(lip);
}

Real lp_window_bound_power(const Real& p, const Rational& n, const Rational& disp, const Real& lip) {
  const Real log_l = log(lip);
  const Real ratio = log_l / (p - log_l);
  return to_real(4 * disp) * lip / to_real(2 * n) + to_real((n + disp) / n) * pow(ratio, p);
}

std::string label_set_hash(const GeneratorSet& set) {
  auto labels = set.labels();
  std::sort(labels.begin(), labels.end());
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 1099511628211ULL;
  };
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) mix(0x1f);
    for (char c : labels[i]) mix(static_cast<unsigned char>(c));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<GeneratorMetrics> generator_metrics(const GeneratorSet& set) {
  std::vector<GeneratorMetrics> out;
  out.reserve(set.size());
  for (const auto& g : set.generators()) out.push_back({g.label, lip_constant(g.map), displacement(g.map)});
  return out;
}

std::vector<Rational> default_schedule(const Rational& max_displacement) {
  const Rational base = max_displacement > 1 ? max_displacement : Rational(1);
  std::vector<Rational> out;
  for (int k = 0; k <= 12; ++k) out.push_back(base * Rational(std::int64_t{1} << k));
  return out;
}

std::vector<Real> default_p_list(const Rational& max_lip) {
  const Real log_l = log(to_real(max_lip));
  std::vector<Real> out;
  for (int p : {2, 4, 8, 16, 32, 64}) {
    if (Real(p) > log_l) out.emplace_back(p);
  }
  return out;
}

SweepCell sweep_cell(const GeneratorSet& set, const Real& p, const Rational& n) {
  const Exponent exponent(p);
  const StepFunction xi = window_vector(n, exponent);
  SweepCell cell;
  cell.p = p;
  cell.n = n;
  cell.distortion = Real(0);
  cell.attained_by = set.generators().front().label;
  for (const auto& g : set.generators()) {
    Real d = koopman_distortion(g.map, xi, exponent);
    if (d > cell.distortion) {
      cell.distortion = std::move(d);
      cell.attained_by = g.label;
    }
  }
  cell.kappa_upper = kappa_transfer(p, cell.distortion);
  Rational max_disp(0);
  for (const auto& g : set.generators()) max_disp = std::max(max_disp, displacement(g.map));
  cell.beyond_threshold = n > max_disp;
  return cell;
}

std::vector<SweepCell> sweep(const GeneratorSet& set, const std::vector<Real>& p_list,
                             const std::vector<Rational>& schedule, Execution exec) {
  std::vector<SweepCell> cells(p_list.size() * schedule.size());
  for_each_index(cells.size(), exec, [&](std::size_t idx) {
    cells[idx] = sweep_cell(set, p_list[idx / schedule.size()], schedule[idx % schedule.size()]);
  });
  return cells;
}

BoundReport bound_report(const GeneratorSet& set, const std::vector<Real>& p_list,
                         const std::vector<Rational>& schedule, Execution exec) {
  if (schedule.empty()) throw DomainError("schedule: must contain at least one n");
  if (p_list.empty()) throw DomainError("p: need at least one exponent");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (!(schedule[i] > 0)) throw DomainError("schedule[" + std::to_string(i) + "]: n must be positive");
  }

  BoundReport report;
  report.group_name = set.name();
  report.label_hash = label_set_hash(set);
  report.per_generator = generator_metrics(set);
  report.L = Rational(1);
  report.M = Rational(0);
  for (const auto& m : report.per_generator) {
    report.L = std::max(report.L, m.lip);
    report.M = std::max(report.M, m.displacement);
  }
  const Real lip = to_real(report.L);
  const Real log_l = log(lip);
  for (std::size_t i = 0; i < p_list.size(); ++i) {
    if (!(p_list[i] >= 2)) {
      throw DomainError("p[" + std::to_string(i) + "]: exponents below 2 carry no Kazhdan transfer");
    }
    if (report.L > 1 && !(p_list[i] > log_l)) {
      throw DomainError("p[" + std::to_string(i) + "]: must exceed log L = " + format_real(log_l));
    }
  }

  report.fixed_points = global_fixed_set(set);
  report.hypothesis_ok = report.fixed_points.empty();
  if (!report.hypothesis_ok) report.flags.push_back("global-fixed-point");

  report.sweep = sweep(set, p_list, schedule, exec);
  bool below_threshold = false;
  for (auto& cell : report.sweep) {
    cell.beyond_threshold = cell.n > report.M;
    below_threshold = below_threshold || !cell.beyond_threshold;
  }
  if (below_threshold) report.flags.push_back("n-not-above-M");

  report.lemma41_bound = lemma41_bound(lip);
  report.lemma43_bound = lemma43_bound(lip);
  report.phi_inv_of_L = phi_inv(lip);
  report.kappa_max = kappa_max();
  report.empirical_bound = report.sweep.front().kappa_upper;
  for (const auto& cell : report.sweep) report.empirical_bound = std::min(report.empirical_bound, cell.kappa_upper);
  report.headline = std::min(report.empirical_bound, report.phi_inv_of_L);
  return report;
}

BoundReport estimate_p2(const GeneratorSet& set, const std::vector<Rational>& schedule, Execution exec) {
  return bound_report(set, {Real(2)}, schedule, exec);
}

BoundReport estimate_lp(const GeneratorSet& set, const Real& p, const std::vector<Rational>& schedule,
                        Execution exec) {
  return bound_report(set, {p}, schedule, exec);
}

KappaVerdict theorem_check(const GeneratorSet& set, const Real& kappa_candidate) {
  Rational lip(1);
  for (const auto& g : set.generators()) lip = std::max(lip, lip_constant(g.map));
  KappaVerdict out;
  out.lip = to_real(lip);
  out.phi_of_candidate = phi(kappa_candidate);
  out.phi_inv_of_lip = phi_inv(out.lip);
  out.consistent = out.lip >= out.phi_of_candidate;
  return out;
}

Real corollary_bound(std::size_t set_size) {
  if (set_size == 0) throw DomainError("set_size: must be positive");
  return phi_inv(Real(set_size));
}

}  // namespace kazhlip
