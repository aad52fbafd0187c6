#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "jeopardy/analysis.hpp"
#include "jeopardy/labeler.hpp"

namespace jeopardy {

/// A label as it appears in JSON: an integer, or "input"/"output".
nlohmann::ordered_json label_json(Label label);

/// One row per configuration, `caller -> callee [dir] A={...} I={...}`,
/// sorted by caller (top first), callee and arguments, followed by the hints.
std::string render_text(const analysis::ConfigurationSet& configs,
                        const std::vector<analysis::Hint>& hints);

/// The report with fields configurations, hints and labels.
nlohmann::ordered_json render_json(const LabeledProgram& program,
                                   const analysis::ConfigurationSet& configs,
                                   const std::vector<analysis::Hint>& hints);

}  // namespace jeopardy
