#include "kazhlip/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "kazhlip/bounds.hpp"
#include "kazhlip/groupact.hpp"
#include "kazhlip/koopman.hpp"
#include "kazhlip/plmap.hpp"
#include "kazhlip/random.hpp"

namespace kazhlip {

using boost::multiprecision::abs;
using boost::multiprecision::exp;
using boost::multiprecision::log;
using boost::multiprecision::pow;

namespace {

struct Outcome {
  bool ok = true;
  std::optional<Real> slack;
};

Outcome exact(bool ok) { return {ok, std::nullopt}; }
Outcome margin(Real slack) {
  const bool ok = slack >= 0;
  return {ok, std::move(slack)};
}

template <typename Case, typename Check>
PropertyResult check_property(std::string name, const std::vector<Case>& cases, Execution exec, Check check) {
  std::vector<Outcome> outcomes(cases.size());
  std::vector<std::string> errors(cases.size());
  for_each_index(cases.size(), exec, [&](std::size_t i) {
    try {
      outcomes[i] = check(cases[i]);
    } catch (const std::exception& e) {
      outcomes[i] = exact(false);
      errors[i] = e.what();
    }
  });
  PropertyResult result;
  for (const auto& e : errors) {
    if (!e.empty()) {
      result.note = "first error: " + e;
      break;
    }
  }
  result.name = std::move(name);
  result.cases = cases.size();
  for (const auto& o : outcomes) {
    if (!o.ok) ++result.failures;
    if (o.slack && (!result.worst_slack || *o.slack < *result.worst_slack)) result.worst_slack = o.slack;
  }
  return result;
}

const Real& tol12() {
  static const Real t("1e-12");
  return t;
}

std::vector<Real> p_cycle(std::size_t i) {
  static const int ps[] = {1, 2, 4, 16};
  return {Real(ps[i % 4])};
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "group-axioms") return Suite::group_axioms;
  if (name == "koopman") return Suite::koopman;
  if (name == "mazur") return Suite::mazur;
  if (name == "lemmas") return Suite::lemmas;
  if (name == "all") return Suite::all;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.failures == 0; });
}

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  for (const auto& p : properties) {
    out << (p.failures == 0 ? "PASS " : "FAIL ") << p.name << " cases=" << p.cases << " failures=" << p.failures
        << " worst_slack=" << (p.worst_slack ? format_real(*p.worst_slack, 6) : std::string("exact"));
    if (!p.note.empty()) out << " (" << p.note << ")";
    out << '\n';
  }
  out << (passed() ? "all properties passed" : "some properties FAILED") << '\n';
  return out.str();
}

SuiteReport verify_group_axioms(const VerifyOptions& options) {
  RandomSource rs(options.seed);
  struct Triple {
    PLHomeo f, g, h;
  };
  std::vector<Triple> triples;
  for (std::size_t i = 0; i < options.cases; ++i) triples.push_back({rs.plhomeo(), rs.plhomeo(), rs.plhomeo()});

  SuiteReport report;
  const auto id = PLHomeo::identity();
  report.properties.push_back(check_property("associativity", triples, options.exec, [](const Triple& t) {
    return exact(compose(compose(t.f, t.g), t.h) == compose(t.f, compose(t.g, t.h)));
  }));
  report.properties.push_back(check_property("inverse", triples, options.exec, [&](const Triple& t) {
    return exact(compose(t.f, invert(t.f)) == id && compose(invert(t.f), t.f) == id);
  }));
  report.properties.push_back(check_property("identity", triples, options.exec, [&](const Triple& t) {
    return exact(compose(t.f, id) == t.f && compose(id, t.f) == t.f);
  }));
  report.properties.push_back(check_property("lip-of-inverse", triples, options.exec, [](const Triple& t) {
    return exact(lip_constant(invert(t.f)) == lip_constant(t.f));
  }));
  report.properties.push_back(check_property("lip-submultiplicative", triples, options.exec, [](const Triple& t) {
    const Rational slack = lip_constant(t.f) * lip_constant(t.g) - lip_constant(compose(t.f, t.g));
    return margin(to_real(slack));
  }));
  report.properties.push_back(check_property("displacement-subadditive", triples, options.exec, [](const Triple& t) {
    const Rational slack = displacement(t.f) + displacement(t.g) - displacement(compose(t.f, t.g));
    return margin(to_real(slack));
  }));

  struct Pair {
    PLHomeo f;
    Rational x, y;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < options.cases; ++i) {
    Rational a = rs.rational(), b = rs.rational();
    while (a == b) b = rs.rational();
    if (b < a) std::swap(a, b);
    pairs.push_back({triples[i].f, a, b});
  }
  report.properties.push_back(check_property("bi-lipschitz", pairs, options.exec, [](const Pair& c) {
    const Rational lip = lip_constant(c.f);
    const Rational gap = evaluate(c.f, c.y) - evaluate(c.f, c.x);
    const Rational span = c.y - c.x;
    const Rational lower = gap - span / lip;
    const Rational upper = lip * span - gap;
    return margin(to_real(std::min(lower, upper)));
  }));

  struct FixedCase {
    PLHomeo f;
    std::vector<Rational> samples;
  };
  std::vector<FixedCase> fixed_cases;
  for (std::size_t i = 0; i < options.cases; ++i) {
    // Alternate generic maps with products of bumps, which have fixed
    // intervals.
    PLHomeo f = i % 2 == 0 ? rs.plhomeo() : compose(rs.bump(), rs.bump());
    std::vector<Rational> samples;
    for (const auto& n : f.nodes()) {
      samples.push_back(n.x);
      samples.push_back(n.x + Rational(1, 3));
      samples.push_back(n.x - Rational(1, 3));
    }
    for (const auto& part : fixed_set(f).intervals()) {
      if (part.lo) samples.push_back(*part.lo);
      if (part.hi) samples.push_back(*part.hi);
    }
    for (int k = 0; k < 8; ++k) samples.push_back(rs.rational());
    fixed_cases.push_back({std::move(f), std::move(samples)});
  }
  report.properties.push_back(check_property("fixed-set-membership", fixed_cases, options.exec, [](const FixedCase& c) {
    const IntervalSet fixed = fixed_set(c.f);
    for (const auto& x : c.samples) {
      if ((evaluate(c.f, x) == x) != fixed.contains(x)) return exact(false);
    }
    return exact(true);
  }));

  struct Homothety {
    PLHomeo f;
    Rational alpha;
  };
  std::vector<Homothety> homotheties;
  for (std::size_t i = 0; i < options.cases; ++i) homotheties.push_back({triples[i].g, rs.positive_rational()});
  report.properties.push_back(check_property("homothety-conjugation", homotheties, options.exec, [](const Homothety& c) {
    const PLHomeo h = conjugate_by_homothety(c.f, c.alpha);
    return exact(lip_constant(h) == lip_constant(c.f) && displacement(h) == displacement(c.f) / c.alpha);
  }));
  return report;
}

SuiteReport verify_koopman(const VerifyOptions& options) {
  RandomSource rs(options.seed + 1);
  SuiteReport report;

  struct IsoCase {
    PLHomeo g;
    StepFunction xi;
    Real p;
  };
  std::vector<IsoCase> iso;
  for (std::size_t i = 0; i < options.cases; ++i) iso.push_back({rs.plhomeo(), rs.step_function(), p_cycle(i)[0]});
  report.properties.push_back(check_property("isometry", iso, options.exec, [](const IsoCase& c) {
    const Exponent p(c.p);
    const Real before = lp_norm(c.xi, p);
    const Real after = lp_norm(koopman_apply(c.g, c.xi, p), p);
    return margin(tol12() * before - abs(after - before));
  }));

  struct HomCase {
    PLHomeo f, g;
    StepFunction xi;
    Real p;
  };
  std::vector<HomCase> hom;
  for (std::size_t i = 0; i < options.cases; ++i) {
    hom.push_back({rs.plhomeo(), rs.plhomeo(), rs.step_function(), p_cycle(i)[0]});
  }
  report.properties.push_back(check_property("homomorphism", hom, options.exec, [](const HomCase& c) {
    const Exponent p(c.p);
    const StepFunction lhs = koopman_apply(compose(c.f, c.g), c.xi, p);
    const StepFunction rhs = koopman_apply(c.f, koopman_apply(c.g, c.xi, p), p);
    if (lhs.breakpoints().front() != rhs.breakpoints().front() ||
        lhs.breakpoints().back() != rhs.breakpoints().back()) {
      return exact(false);
    }
    Real scale(1);
    for (const auto& v : lhs.values()) scale = std::max(scale, Real(abs(v)));
    return margin(tol12() * scale - max_abs_difference(lhs, rhs));
  }));

  std::vector<IsoCase> ident;
  for (std::size_t i = 0; i < options.cases; ++i) ident.push_back({PLHomeo::identity(), rs.step_function(), p_cycle(i)[0]});
  report.properties.push_back(check_property("identity-acts-trivially", ident, options.exec, [](const IsoCase& c) {
    const StepFunction out = koopman_apply(c.g, c.xi, Exponent(c.p));
    return exact(out.breakpoints() == c.xi.breakpoints() && out.values() == c.xi.values());
  }));

  struct TransCase {
    Rational n, c;
  };
  std::vector<TransCase> trans;
  for (std::size_t i = 0; i < options.cases; ++i) {
    Rational n = rs.positive_rational(100, 10);
    Rational c = 2 * n * Rational(rs.integer(0, 1000), 1000);
    trans.push_back({n, c});
  }
  report.properties.push_back(check_property("translation-closed-form", trans, options.exec, [](const TransCase& c) {
    const Exponent two(2);
    const StepFunction xi = window_vector(c.n, two);
    const Real ip = inner_product(koopman_apply(PLHomeo::translation(c.c), xi, two), xi);
    const Real expected = to_real((2 * c.n - c.c) / (2 * c.n));
    return margin(tol12() - abs(ip - expected));
  }));

  struct EscapeCase {
    GeneratorSet set;
    StepFunction xi;
    Real p;
  };
  std::vector<EscapeCase> escape;
  for (std::size_t i = 0; i < options.cases; ++i) {
    const Real p = p_cycle(i)[0];
    Rational c = rs.positive_rational(50, 10);
    GeneratorSet set("escape", {{"f", rs.plhomeo(4, 20, 10)}, {"t", PLHomeo::translation(c)}});
    escape.push_back({std::move(set), rs.unit_step_function(Exponent(p), 4, 20, 10), p});
  }
  PropertyResult esc = check_property("escape-of-mass", escape, options.exec, [](const EscapeCase& c) {
    if (!global_fixed_set(c.set).empty()) return exact(false);
    const Rational radius =
        std::max(Rational(abs(c.xi.breakpoints().front())), Rational(abs(c.xi.breakpoints().back())));
    // Greedy witness: push the image of -radius to the right until the
    // interval [-radius, radius] is moved off itself.
    PLHomeo w;
    for (int step = 0; step < 10000 && !(evaluate(w, -radius) > radius); ++step) {
      PLHomeo best;
      bool have = false;
      for (const auto& g : c.set.generators()) {
        for (const PLHomeo& s : {g.map, invert(g.map)}) {
          PLHomeo cand = compose(s, w);
          if (!have || evaluate(cand, -radius) > evaluate(best, -radius)) {
            best = std::move(cand);
            have = true;
          }
        }
      }
      w = std::move(best);
    }
    if (!(evaluate(w, -radius) > radius)) return exact(false);
    const Exponent p(c.p);
    const Real d = koopman_distortion(w, c.xi, p);
    return margin(tol12() - abs(d - pow(Real(2), 1 / c.p)));
  });
  esc.note = "witness distortion equals 2^{1/p}";
  report.properties.push_back(std::move(esc));
  return report;
}

SuiteReport verify_mazur(const VerifyOptions& options) {
  RandomSource rs(options.seed + 2);
  SuiteReport report;
  struct MazurCase {
    StepFunction a, b;
  };
  for (auto [q, p] : {std::pair{2, 4}, std::pair{2, 16}, std::pair{1, 2}}) {
    const Exponent eq(q), ep(p);
    std::vector<MazurCase> cases;
    for (std::size_t i = 0; i < options.cases; ++i) {
      // Mix overlapping and nearby pairs: small distances stress the bound.
      StepFunction a = rs.unit_step_function(eq, 6, 20, 10);
      StepFunction b = i % 3 == 0 ? rs.unit_step_function(eq, 6, 20, 10) : a;
      if (i % 3 != 0) {
        std::vector<Real> v = b.values();
        for (auto& x : v) x += rs.real(Real("-0.05"), Real("0.05"));
        b = StepFunction(b.breakpoints(), std::move(v));
        b = b.scaled(1 / lp_norm(b, eq));
      }
      cases.push_back({std::move(a), std::move(b)});
    }
    const std::string tag = "(q,p)=(" + std::to_string(q) + "," + std::to_string(p) + ")";
    report.properties.push_back(check_property("mazur-lower-bound " + tag, cases, options.exec, [&](const MazurCase& c) {
      const Real lhs = Real(q) / Real(p) * lp_norm(subtract(c.a, c.b), eq);
      const Real rhs = lp_norm(subtract(mazur_map(c.a, eq, ep), mazur_map(c.b, eq, ep)), ep);
      return margin(rhs + tol12() - lhs);
    }));
    report.properties.push_back(check_property("mazur-unit-sphere " + tag, cases, options.exec, [&](const MazurCase& c) {
      return margin(tol12() - abs(lp_norm(mazur_map(c.a, eq, ep), ep) - 1));
    }));
    std::vector<Real> ratios(cases.size());
    for_each_index(cases.size(), options.exec,
                   [&](std::size_t i) { ratios[i] = mazur_holder_ratio(cases[i].a, cases[i].b, eq, ep); });
    PropertyResult info;
    info.name = "mazur-holder-ratio " + tag;
    info.cases = cases.size();
    info.note = "max observed ratio " + format_real(*std::max_element(ratios.begin(), ratios.end()), 6) +
                ", reported only";
    report.properties.push_back(std::move(info));
  }
  return report;
}

SuiteReport verify_lemmas(const VerifyOptions& options) {
  RandomSource rs(options.seed + 3);
  SuiteReport report;

  struct Triple {
    Real x, p, lip;
  };
  std::vector<Triple> triples;
  const Real thousand(1000);
  for (std::size_t i = 0; i < options.lemma_cases; ++i) {
    Real lip = exp(rs.real(Real(0), log(thousand)));
    if (lip <= 1) lip = Real("1.000001");
    Real x;
    switch (i % 4) {
      case 0: x = lip; break;
      case 1: x = 1 / lip; break;
      default: x = exp(rs.real(-log(lip), log(lip))); break;
    }
    x = std::clamp(x, Real(1 / lip), lip);
    const Real log_l = log(lip);
    Real p = rs.real(log_l, thousand);
    if (p <= log_l) p = log_l + Real("1e-6");
    triples.push_back({x, p, lip});
  }
  report.properties.push_back(check_property("log-power-inequality", triples, options.exec, [](const Triple& t) {
    return margin(log_power_bound_check(t.x, t.p, t.lip).slack);
  }));

  std::vector<Real> t_grid, s_grid;
  for (int i = 0; i < 1000; ++i) {
    t_grid.push_back(1 + Real(9999) * i / 999);
    s_grid.push_back(Real("1.41") * i / 999);
  }
  const Real tol10("1e-10");
  report.properties.push_back(check_property("phi-of-phi-inv", t_grid, options.exec, [&](const Real& t) {
    return margin(tol10 * t - abs(phi(phi_inv(t)) - t));
  }));
  report.properties.push_back(check_property("phi-inv-of-phi", s_grid, options.exec, [&](const Real& t) {
    return margin(tol10 - abs(phi_inv(phi(t)) - t));
  }));
  std::vector<std::size_t> steps(s_grid.size() - 1);
  for (std::size_t i = 0; i < steps.size(); ++i) steps[i] = i;
  report.properties.push_back(check_property("phi-strictly-increasing", steps, options.exec, [&](std::size_t i) {
    return margin(phi(s_grid[i + 1]) - phi(s_grid[i]));
  }));
  const Real switch_point = phi_exp_branch(phi_crossover());
  report.properties.push_back(check_property("phi-inv-branch-switch", t_grid, options.exec, [&](const Real& t) {
    const bool log_is_min = phi_inv_log_branch(t) <= phi_inv_sqrt_branch(t);
    return exact(log_is_min == (t <= switch_point));
  }));
  return report;
}

SuiteReport run_verify(Suite suite, const VerifyOptions& options) {
  SuiteReport out;
  auto append = [&](SuiteReport r) {
    out.properties.insert(out.properties.end(), r.properties.begin(), r.properties.end());
  };
  if (suite == Suite::group_axioms || suite == Suite::all) append(verify_group_axioms(options));
  if (suite == Suite::koopman || suite == Suite::all) append(verify_koopman(options));
  if (suite == Suite::mazur || suite == Suite::all) append(verify_mazur(options));
  if (suite == Suite::lemmas || suite == Suite::all) append(verify_lemmas(options));
  return out;
}

}  // namespace kazhlip
