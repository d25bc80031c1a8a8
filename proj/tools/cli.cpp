#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "kazhlip/bounds.hpp"
#include "kazhlip/errors.hpp"
#include "kazhlip/figures.hpp"
#include "kazhlip/groupact.hpp"
#include "kazhlip/io.hpp"
#include "kazhlip/limits.hpp"
#include "kazhlip/verify.hpp"

namespace kazhlip::cli {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    std::string item(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    // Trim.
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

struct Settings {
  unsigned precision = kDefaultPrecision;
  std::string format;
  std::string out_path;
};

class Emitter {
 public:
  Emitter(const Settings& s, std::ostream& out) : settings_(s), out_(out) {}

  void emit(const std::string& text) const {
    if (settings_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(settings_.out_path, std::ios::binary);
    if (!file) throw ParseError("--out", "cannot write '" + settings_.out_path + "'");
    file << text;
  }

 private:
  const Settings& settings_;
  std::ostream& out_;
};

std::string require_format(const Settings& s, std::string fallback, std::initializer_list<const char*> allowed) {
  std::string f = s.format.empty() ? std::move(fallback) : s.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw ParseError("--format", "'" + f + "' is not available here (choose " + list + ")");
}

Real parse_real_arg(const std::string& text, const std::string& path) {
  try {
    return parse_real(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, e.what());
  }
}

std::string text_report(const BoundReport& r) {
  std::ostringstream out;
  out << "group: " << r.group_name << " (labels " << r.label_hash << ")\n";
  for (const auto& g : r.per_generator) {
    out << "  " << g.label << ": Lip = " << to_string(g.lip) << ", displacement = " << to_string(g.displacement)
        << '\n';
  }
  out << "L = " << to_string(r.L) << ", M = " << to_string(r.M) << '\n';
  out << "global fixed set: " << r.fixed_points.to_string() << '\n';
  out << "p,n,d,kappa_upper\n";
  for (const auto& c : r.sweep) {
    out << format_real(c.p) << ',' << to_string(c.n) << ',' << format_real(c.distortion) << ','
        << format_real(c.kappa_upper) << (c.beyond_threshold ? "" : ",n<=M") << '\n';
  }
  out << "sqrt2 (1 - L^-1/2)^1/2 = " << format_real(r.lemma41_bound) << '\n';
  out << "log(L) / 2           = " << format_real(r.lemma43_bound) << '\n';
  out << "Phi^-1(L)            = " << format_real(r.phi_inv_of_L) << '\n';
  out << "empirical bound      = " << format_real(r.empirical_bound) << '\n';
  out << "kappa(S) <= " << format_real(r.headline) << (r.hypothesis_ok ? "" : "  [INVALID: global fixed point]")
      << '\n';
  return out.str();
}

std::string text_diagnostic(const LimitDiagnostic& d) {
  std::ostringstream out;
  out << "stages: " << d.stages.size() << ", base point " << to_string(d.base) << '\n';
  for (const auto& t : d.lip) {
    out << "Lip(" << t.label << "): " << t.annotation << ", last " << to_string(t.points.back().second)
        << (t.tends_to_one ? "" : "  [does not tend to 1]") << '\n';
  }
  for (const auto& w : d.words) {
    out << "estimate(" << w.word.to_string() << ") = " << format_real(to_real(w.estimate))
        << (w.converged ? "" : "  [not converged]") << '\n';
  }
  out << "verdict: " << d.verdict() << '\n';
  for (const auto& n : d.notes) out << "note: " << n << '\n';
  return out.str();
}

}  // namespace

std::vector<Rational> parse_schedule(std::string_view text) {
  const auto parts = split(text, ',');
  std::vector<Rational> out;
  std::size_t ellipsis = parts.size();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == "...") {
      if (ellipsis != parts.size()) throw std::invalid_argument("schedule: at most one '...'");
      ellipsis = i;
      continue;
    }
    out.push_back(parse_rational(parts[i]));
  }
  for (const auto& n : out) {
    if (!(n > 0)) throw std::invalid_argument("schedule: entries must be positive");
  }
  if (ellipsis == parts.size()) return out;
  if (ellipsis < 2 || ellipsis + 2 != parts.size()) {
    throw std::invalid_argument("schedule: '...' needs two terms before it and one after it");
  }
  const Rational last = out.back();
  out.pop_back();
  const Rational a = out[ellipsis - 2], b = out[ellipsis - 1];
  auto extend = [&](bool geometric) {
    std::vector<Rational> terms = out;
    const Rational step = geometric ? b / a : b - a;
    if (geometric ? !(step > 1) : !(step > 0)) return std::optional<std::vector<Rational>>{};
    for (std::size_t guard = 0; terms.back() < last; ++guard) {
      if (guard > 100000) throw std::invalid_argument("schedule: progression too long");
      terms.push_back(geometric ? terms.back() * step : terms.back() + step);
    }
    if (terms.back() != last) return std::optional<std::vector<Rational>>{};
    return std::optional<std::vector<Rational>>{std::move(terms)};
  };
  std::optional<std::vector<Rational>> result;
  if (ellipsis >= 3) {
    const Rational z = out[ellipsis - 3];
    if (a / z == b / a) {
      result = extend(true);
    } else if (a - z == b - a) {
      result = extend(false);
    } else {
      throw std::invalid_argument("schedule: terms before '...' are neither arithmetic nor geometric");
    }
  } else {
    result = extend(true);
    if (!result) result = extend(false);
  }
  if (!result) throw std::invalid_argument("schedule: increasing progression does not reach " + to_string(last));
  out = std::move(*result);
  return out;
}

std::vector<Real> parse_real_list(std::string_view text) {
  std::vector<Real> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_real(part));
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings settings;
  CLI::App app{"Lipschitz constants, Koopman representations and Kazhdan-constant bounds for PL actions on the line",
               "kazhlip"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<unsigned> precision_flag;
  app.add_option("--precision", precision_flag, "Significant digits of emitted decimals (>= 15)");
  app.add_option("--format", settings.format, "Output format: text, json, csv or svg");
  app.add_option("--out", settings.out_path, "Write the artifact to this file instead of stdout");

  std::string t_arg;
  auto* phi_cmd = app.add_subcommand("phi", "Evaluate Phi(t) = max{e^{2t}, 4(2 - t^2)^{-2}}");
  phi_cmd->add_option("t", t_arg)->required();
  auto* phi_inv_cmd = app.add_subcommand("phi-inv", "Evaluate Phi^-1(t)");
  phi_inv_cmd->add_option("t", t_arg)->required();

  std::string which = "phi-branches";
  std::string grid_arg;
  auto* table_cmd = app.add_subcommand("phi-table", "Branch values of Phi or Phi^-1 on a grid");
  table_cmd->add_option("--which", which, "phi-branches or phi-inv-branches");
  table_cmd->add_option("--grid", grid_arg, "start,end,step");

  std::string input;
  auto* lip_cmd = app.add_subcommand("lip", "Lipschitz constants and displacements of a generating set");
  lip_cmd->add_option("group", input)->required();
  auto* fixed_cmd = app.add_subcommand("fixed-points", "Global fixed set of a generating set");
  fixed_cmd->add_option("group", input)->required();

  std::string p_arg, schedule_arg;
  auto* bound_cmd = app.add_subcommand("bound", "Kazhdan-constant bounds from window vectors (default p = 2)");
  bound_cmd->add_option("group", input)->required();
  bound_cmd->add_option("--p", p_arg, "Comma-separated exponents >= 2");
  bound_cmd->add_option("--schedule", schedule_arg, "Window half-widths, e.g. 1,2,4,...,4096");
  auto* sweep_cmd = app.add_subcommand("sweep", "Distortion sweep over a p list (default 2..64)");
  sweep_cmd->add_option("group", input)->required();
  sweep_cmd->add_option("--p", p_arg, "Comma-separated exponents >= 2");
  sweep_cmd->add_option("--schedule", schedule_arg, "Window half-widths, e.g. 1,2,4,...,4096");

  std::string words_arg, base_arg = "0";
  int max_length = 3;
  bool no_normalize = false;
  std::string tolerance_arg = "1e-6";
  auto* limit_cmd = app.add_subcommand("limit-diag", "Limit-translation diagnostics for an action sequence");
  limit_cmd->add_option("sequence", input)->required();
  limit_cmd->add_option("--words", words_arg, "Semicolon-separated words, e.g. \"a; a b^-1\"");
  limit_cmd->add_option("--max-length", max_length, "Track all reduced words up to this length when --words is absent");
  limit_cmd->add_option("--base", base_arg, "Rational base point");
  limit_cmd->add_option("--tolerance", tolerance_arg, "Cauchy tolerance");
  limit_cmd->add_flag("--no-normalize", no_normalize, "Skip homothety normalization of stages");

  std::string suite_arg;
  std::uint64_t seed = VerifyOptions{}.seed;
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites: group-axioms, koopman, mazur, lemmas, all");
  verify_cmd->add_option("suite", suite_arg)->required();
  verify_cmd->add_option("--seed", seed, "Random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    settings.precision = precision_flag ? *precision_flag : precision_from_env();
    set_precision(settings.precision);
  } catch (const std::invalid_argument& e) {
    err << "error: --precision: " << e.what() << '\n';
    return kParseError;
  }

  const Emitter emitter(settings, out);
  try {
    if (phi_cmd->parsed() || phi_inv_cmd->parsed()) {
      const Real t = parse_real_arg(t_arg, "t");
      const Real v = phi_cmd->parsed() ? phi(t) : phi_inv(t);
      const std::string fmt = require_format(settings, "text", {"text", "json"});
      emitter.emit(fmt == "json" ? io::json{{"t", format_real(t)}, {"value", format_real(v)}}.dump(2) + "\n"
                                 : format_real(v) + "\n");
      return kOk;
    }

    if (table_cmd->parsed()) {
      FigureKind kind;
      if (which == "phi-branches") {
        kind = FigureKind::phi_branches;
      } else if (which == "phi-inv-branches") {
        kind = FigureKind::phi_inv_branches;
      } else {
        throw ParseError("--which", "expected phi-branches or phi-inv-branches");
      }
      if (grid_arg.empty()) grid_arg = kind == FigureKind::phi_branches ? "0,1.23,0.01" : "1,23,0.25";
      const auto g = split(grid_arg, ',');
      if (g.size() != 3) throw ParseError("--grid", "expected start,end,step");
      const Grid grid{parse_real_arg(g[0], "--grid[0]"), parse_real_arg(g[1], "--grid[1]"),
                      parse_real_arg(g[2], "--grid[2]")};
      const std::string fmt = require_format(settings, "csv", {"csv", "svg"});
      emitter.emit(fmt == "svg" ? figure_svg(kind, grid) : figure_csv(kind, grid));
      return kOk;
    }

    if (lip_cmd->parsed() || fixed_cmd->parsed() || bound_cmd->parsed() || sweep_cmd->parsed()) {
      const GeneratorSet set = io::generator_set_from_json(io::read_json_file(input));

      if (lip_cmd->parsed()) {
        const auto metrics = generator_metrics(set);
        Rational lip(1), disp(0);
        for (const auto& m : metrics) {
          lip = std::max(lip, m.lip);
          disp = std::max(disp, m.displacement);
        }
        const std::string fmt = require_format(settings, "text", {"text", "json", "csv"});
        std::ostringstream o;
        if (fmt == "json") {
          io::json gens = io::json::array();
          for (const auto& m : metrics) {
            gens.push_back({{"label", m.label}, {"lip", to_string(m.lip)}, {"displacement", to_string(m.displacement)}});
          }
          o << io::json{{"group_name", set.name()}, {"generators", gens}, {"L", to_string(lip)}, {"M", to_string(disp)}}
                   .dump(2)
            << '\n';
        } else if (fmt == "csv") {
          o << "label,lip,displacement\n";
          for (const auto& m : metrics) o << m.label << ',' << to_string(m.lip) << ',' << to_string(m.displacement) << '\n';
        } else {
          for (const auto& m : metrics) {
            o << m.label << ": Lip = " << to_string(m.lip) << ", displacement = " << to_string(m.displacement) << '\n';
          }
          o << "L = " << to_string(lip) << ", M = " << to_string(disp) << '\n';
        }
        emitter.emit(o.str());
        return kOk;
      }

      if (fixed_cmd->parsed()) {
        const IntervalSet fixed = global_fixed_set(set);
        const std::string fmt = require_format(settings, "text", {"text", "json"});
        if (fmt == "json") {
          emitter.emit(io::json{{"group_name", set.name()},
                                {"global_fixed_set", io::to_json(fixed)},
                                {"without_global_fixed_points", fixed.empty()}}
                           .dump(2) +
                       "\n");
        } else {
          emitter.emit(fixed.to_string() + "\n");
        }
        return kOk;
      }

      // bound / sweep
      Rational lip(1), disp(0);
      for (const auto& m : generator_metrics(set)) {
        lip = std::max(lip, m.lip);
        disp = std::max(disp, m.displacement);
      }
      std::vector<Real> ps;
      if (!p_arg.empty()) {
        try {
          ps = parse_real_list(p_arg);
        } catch (const std::invalid_argument& e) {
          throw ParseError("--p", e.what());
        }
      } else if (bound_cmd->parsed()) {
        ps = {Real(2)};
      } else {
        ps = default_p_list(lip);
      }
      std::vector<Rational> schedule;
      if (!schedule_arg.empty()) {
        try {
          schedule = parse_schedule(schedule_arg);
        } catch (const std::invalid_argument& e) {
          throw ParseError("--schedule", e.what());
        }
      } else {
        schedule = default_schedule(disp);
      }
      const BoundReport report = bound_report(set, ps, schedule);
      const std::string fmt = require_format(settings, "csv", {"text", "json", "csv"});
      if (fmt == "json") {
        emitter.emit(io::to_json(report).dump(2) + "\n");
      } else if (fmt == "text") {
        emitter.emit(text_report(report));
      } else {
        emitter.emit(io::bound_report_csv(report));
      }
      if (!report.hypothesis_ok) {
        err << "warning: the group has a global fixed point (" << report.fixed_points.to_string()
            << "); the Koopman representation has invariant vectors and the bounds do not apply\n";
        return kHypothesisFlag;
      }
      return kOk;
    }

    if (limit_cmd->parsed()) {
      const ActionSequence seq = io::action_sequence_from_json(io::read_json_file(input));
      std::vector<Word> words;
      if (!words_arg.empty()) {
        for (const auto& w : split(words_arg, ';')) {
          if (!w.empty()) words.push_back(Word::parse(w));
        }
      } else {
        words = all_words(seq.labels(), max_length);
      }
      Rational base;
      try {
        base = parse_rational(base_arg);
      } catch (const std::invalid_argument& e) {
        throw ParseError("--base", e.what());
      }
      DiagnosticOptions options;
      options.normalize = !no_normalize;
      options.cauchy_tolerance = parse_real_arg(tolerance_arg, "--tolerance");
      const LimitDiagnostic diag = limit_translation_diagnostic(seq, words, base, options);
      const std::string fmt = require_format(settings, "text", {"text", "json", "csv"});
      if (fmt == "json") {
        emitter.emit(io::to_json(diag).dump(2) + "\n");
      } else if (fmt == "csv") {
        emitter.emit(io::limit_diagnostic_csv(diag));
      } else {
        emitter.emit(text_diagnostic(diag));
      }
      return diag.lip_hypothesis_observed ? kOk : kHypothesisFlag;
    }

    if (verify_cmd->parsed()) {
      Suite suite;
      try {
        suite = parse_suite(suite_arg);
      } catch (const std::invalid_argument& e) {
        throw ParseError("suite", e.what());
      }
      VerifyOptions options;
      options.seed = seed;
      const SuiteReport report = run_verify(suite, options);
      require_format(settings, "text", {"text"});
      emitter.emit(report.to_text());
      return report.passed() ? kOk : kDomainError;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace kazhlip::cli
