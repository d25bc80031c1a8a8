#pragma once

// JSON and CSV encodings. Rationals travel as exact "p/q" strings (a bare
// integer "p" is accepted); Real values as decimal strings at the
// configured precision. Loaders canonicalize and throw ParseError with the
// path of the offending field.

#include <string>

#include <json.hpp>

#include "kazhlip/bounds.hpp"
#include "kazhlip/groupact.hpp"
#include "kazhlip/interval_set.hpp"
#include "kazhlip/koopman.hpp"
#include "kazhlip/limits.hpp"
#include "kazhlip/plmap.hpp"

namespace kazhlip::io {

using nlohmann::json;

json read_json_file(const std::string& path);
json parse_json(const std::string& text);

json to_json(const PLHomeo& f);
PLHomeo plhomeo_from_json(const json& j, const std::string& path = "");

json to_json(const GeneratorSet& set);
GeneratorSet generator_set_from_json(const json& j, const std::string& path = "");

json to_json(const StepFunction& f);
StepFunction step_function_from_json(const json& j, const std::string& path = "");

json to_json(const ActionSequence& seq);
ActionSequence action_sequence_from_json(const json& j, const std::string& path = "");

json to_json(const IntervalSet& set);
json to_json(const BoundReport& report);
json to_json(const LimitDiagnostic& diag);

// Header plus one row per sweep cell:
// group_name,label_hash,p,n,d,kappa_upper,lemma41_bound,lemma43_bound,phi_inv_of_L
std::string bound_report_csv(const BoundReport& report);
// stage,word,value,defect
std::string limit_diagnostic_csv(const LimitDiagnostic& diag);

}  // namespace kazhlip::io
