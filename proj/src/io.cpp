#include "kazhlip/io.hpp"

#include <fstream>
#include <sstream>

#include "kazhlip/errors.hpp"

namespace kazhlip::io {

namespace {

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(join(path, key), "missing field");
  return *it;
}

const json& array_field(const json& j, const std::string& key, const std::string& path) {
  const json& a = field(j, key, path);
  if (!a.is_array()) throw ParseError(join(path, key), "expected an array");
  return a;
}

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw ParseError(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, e.what());
  }
}

Real real_from_json(const json& j, const std::string& path) {
  if (j.is_number()) return Real(j.dump());
  if (!j.is_string()) throw ParseError(path, "expected a decimal string");
  try {
    return parse_real(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(path, e.what());
  }
}

std::string string_field(const json& j, const std::string& key, const std::string& path) {
  const json& s = field(j, key, path);
  if (!s.is_string()) throw ParseError(join(path, key), "expected a string");
  return s.get<std::string>();
}

json real(const Real& x) { return format_real(x); }
json rational(const Rational& x) { return to_string(x); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path, std::string("invalid JSON: ") + e.what());
  }
}

json to_json(const PLHomeo& f) {
  json nodes = json::array();
  for (const auto& n : f.nodes()) nodes.push_back(json::array({rational(n.x), rational(n.y)}));
  return json{{"nodes", nodes}};
}

PLHomeo plhomeo_from_json(const json& j, const std::string& path) {
  const json& nodes = array_field(j, "nodes", path);
  const std::string npath = join(path, "nodes");
  std::vector<Node> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const json& pair = nodes[i];
    if (!pair.is_array() || pair.size() != 2) throw ParseError(index(npath, i), "expected a pair [x, y]");
    out.push_back(Node{rational_from_json(pair[0], index(index(npath, i), 0)),
                       rational_from_json(pair[1], index(index(npath, i), 1))});
  }
  try {
    return PLHomeo(std::move(out));
  } catch (const DomainError& e) {
    // The constructor reports "nodes[i]: why"; graft that onto our path.
    const std::string what = e.what();
    const auto colon = what.find(": ");
    if (what.rfind("nodes[", 0) == 0 && colon != std::string::npos) {
      throw ParseError(join(path, what.substr(0, colon)), what.substr(colon + 2));
    }
    throw ParseError(npath, what);
  }
}

json to_json(const GeneratorSet& set) {
  json gens = json::array();
  for (const auto& g : set.generators()) gens.push_back(json{{"label", g.label}, {"map", to_json(g.map)}});
  return json{{"name", set.name()}, {"symmetric", set.symmetric()}, {"generators", gens}};
}

GeneratorSet generator_set_from_json(const json& j, const std::string& path) {
  const std::string name = j.contains("name") ? string_field(j, "name", path) : std::string("unnamed");
  bool symmetric = false;
  if (j.is_object() && j.contains("symmetric")) {
    if (!j["symmetric"].is_boolean()) throw ParseError(join(path, "symmetric"), "expected a boolean");
    symmetric = j["symmetric"].get<bool>();
  }
  const json& gens = array_field(j, "generators", path);
  const std::string gpath = join(path, "generators");
  std::vector<Generator> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string p = index(gpath, i);
    out.push_back({string_field(gens[i], "label", p), plhomeo_from_json(field(gens[i], "map", p), join(p, "map"))});
  }
  try {
    return GeneratorSet(name, std::move(out), symmetric);
  } catch (const DomainError& e) {
    throw ParseError(path, e.what());
  }
}

json to_json(const StepFunction& f) {
  json b = json::array();
  for (const auto& x : f.breakpoints()) b.push_back(rational(x));
  json v = json::array();
  for (const auto& x : f.values()) v.push_back(real(x));
  return json{{"breakpoints", b}, {"values", v}};
}

StepFunction step_function_from_json(const json& j, const std::string& path) {
  const json& b = array_field(j, "breakpoints", path);
  const json& v = array_field(j, "values", path);
  std::vector<Rational> breaks;
  for (std::size_t i = 0; i < b.size(); ++i) breaks.push_back(rational_from_json(b[i], index(join(path, "breakpoints"), i)));
  std::vector<Real> values;
  for (std::size_t i = 0; i < v.size(); ++i) values.push_back(real_from_json(v[i], index(join(path, "values"), i)));
  try {
    return StepFunction(std::move(breaks), std::move(values));
  } catch (const DomainError& e) {
    throw ParseError(path, e.what());
  }
}

json to_json(const ActionSequence& seq) {
  json stages = json::array();
  for (const auto& s : seq.stages()) stages.push_back(to_json(s));
  json indices = json::array();
  for (const auto& n : seq.indices()) indices.push_back(rational(n));
  return json{{"labels", seq.labels()}, {"indices", indices}, {"stages", stages}};
}

ActionSequence action_sequence_from_json(const json& j, const std::string& path) {
  const json& labels = array_field(j, "labels", path);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].is_string()) throw ParseError(index(join(path, "labels"), i), "expected a string");
    names.push_back(labels[i].get<std::string>());
  }
  const json& stages = array_field(j, "stages", path);
  std::vector<GeneratorSet> sets;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    sets.push_back(generator_set_from_json(stages[i], index(join(path, "stages"), i)));
  }
  std::vector<Rational> indices;
  if (j.contains("indices")) {
    const json& idx = array_field(j, "indices", path);
    for (std::size_t i = 0; i < idx.size(); ++i) indices.push_back(rational_from_json(idx[i], index(join(path, "indices"), i)));
  }
  try {
    return ActionSequence(std::move(names), std::move(sets), std::move(indices));
  } catch (const DomainError& e) {
    throw ParseError(path, e.what());
  }
}

json to_json(const IntervalSet& set) {
  json parts = json::array();
  for (const auto& i : set.intervals()) {
    parts.push_back(json::array({i.lo ? json(rational(*i.lo)) : json("-inf"), i.hi ? json(rational(*i.hi)) : json("inf")}));
  }
  return parts;
}

json to_json(const BoundReport& r) {
  json gens = json::array();
  for (const auto& g : r.per_generator) {
    gens.push_back({{"label", g.label}, {"lip", rational(g.lip)}, {"displacement", rational(g.displacement)}});
  }
  json cells = json::array();
  for (const auto& c : r.sweep) {
    cells.push_back({{"p", real(c.p)},
                     {"n", rational(c.n)},
                     {"d", real(c.distortion)},
                     {"attained_by", c.attained_by},
                     {"kappa_upper", real(c.kappa_upper)},
                     {"beyond_threshold", c.beyond_threshold}});
  }
  return json{{"group_name", r.group_name},
              {"label_hash", r.label_hash},
              {"per_generator", gens},
              {"L", rational(r.L)},
              {"M", rational(r.M)},
              {"global_fixed_set", to_json(r.fixed_points)},
              {"hypothesis_ok", r.hypothesis_ok},
              {"sweep", cells},
              {"lemma41_bound", real(r.lemma41_bound)},
              {"lemma43_bound", real(r.lemma43_bound)},
              {"phi_inv_of_L", real(r.phi_inv_of_L)},
              {"kappa_max", real(r.kappa_max)},
              {"empirical_bound", real(r.empirical_bound)},
              {"headline", real(r.headline)},
              {"flags", r.flags}};
}

json to_json(const LimitDiagnostic& d) {
  json stages = json::array();
  for (const auto& s : d.stages) {
    json tr = json::object();
    for (const auto& [label, v] : s.translation_at_base) tr[label] = real(to_real(v));
    stages.push_back({{"n", rational(s.n)},
                      {"alpha", rational(s.alpha)},
                      {"max_lip", rational(s.max_lip)},
                      {"max_displacement", rational(s.max_displacement)},
                      {"max_displacement_label", s.max_displacement_label},
                      {"translation_estimates", tr}});
  }
  json lip = json::array();
  for (const auto& t : d.lip) {
    json pts = json::array();
    for (const auto& [n, l] : t.points) pts.push_back(json::array({rational(n), rational(l)}));
    lip.push_back({{"label", t.label}, {"points", pts}, {"trend", t.annotation}, {"tends_to_one", t.tends_to_one}});
  }
  json words = json::array();
  for (const auto& w : d.words) {
    json vals = json::array();
    for (const auto& v : w.values) vals.push_back(real(to_real(v)));
    words.push_back({{"word", w.word.to_string()},
                     {"values", vals},
                     {"last_difference", real(to_real(w.last_difference))},
                     {"estimate", real(to_real(w.estimate))},
                     {"converged", w.converged}});
  }
  json defects = json::array();
  for (const auto& row : d.defects) {
    json cd = json::array(), sd = json::array(), sb = json::array();
    for (const auto& v : row.composition_defect) cd.push_back(real(to_real(v)));
    for (const auto& v : row.stage_defect) sd.push_back(real(to_real(v)));
    for (const auto& v : row.stage_defect_bound) sb.push_back(real(to_real(v)));
    defects.push_back({{"left", row.left.to_string()},
                       {"right", row.right.to_string()},
                       {"composition_defect", cd},
                       {"stage_defect", sd},
                       {"stage_defect_bound", sb},
                       {"limit_defect", real(to_real(row.limit_defect))}});
  }
  return json{{"base", rational(d.base)},
              {"stages", stages},
              {"lip_trend", lip},
              {"words", words},
              {"defects", defects},
              {"lip_hypothesis_observed", d.lip_hypothesis_observed},
              {"all_converged", d.all_converged},
              {"max_limit_defect", real(to_real(d.max_limit_defect))},
              {"verdict", d.verdict()},
              {"notes", d.notes}};
}

std::string bound_report_csv(const BoundReport& r) {
  std::ostringstream out;
  out << "group_name,label_hash,p,n,d,kappa_upper,lemma41_bound,lemma43_bound,phi_inv_of_L\n";
  const std::string tail =
      format_real(r.lemma41_bound) + "," + format_real(r.lemma43_bound) + "," + format_real(r.phi_inv_of_L);
  for (const auto& c : r.sweep) {
    out << csv_escape(r.group_name) << ',' << r.label_hash << ',' << format_real(c.p) << ',' << to_string(c.n)
        << ',' << format_real(c.distortion) << ',' << format_real(c.kappa_upper) << ',' << tail << '\n';
  }
  return out.str();
}

std::string limit_diagnostic_csv(const LimitDiagnostic& d) {
  std::ostringstream out;
  out << "stage,word,value,defect\n";
  for (const auto& w : d.words) {
    for (std::size_t k = 0; k < w.values.size(); ++k) {
      out << to_string(d.stages[k].n) << ',' << csv_escape(w.word.to_string()) << ','
          << format_real(to_real(w.values[k])) << ',' << format_real(to_real(abs(w.values[k] - w.estimate)))
          << '\n';
    }
  }
  for (const auto& row : d.defects) {
    const std::string name = row.left.to_string() + " | " + row.right.to_string();
    for (std::size_t k = 0; k < row.stage_defect.size(); ++k) {
      out << to_string(d.stages[k].n) << ',' << csv_escape(name) << ','
          << format_real(to_real(row.composition_defect[k])) << ',' << format_real(to_real(row.stage_defect[k]))
          << '\n';
    }
  }
  return out.str();
}

}  // namespace kazhlip::io
