#include "jeopardy/report.hpp"

#include <string_view>

namespace jeopardy {

nlohmann::ordered_json label_json(Label label) {
  switch (label.kind()) {
    case Label::Kind::input:
      return "input";
    case Label::Kind::output:
      return "output";
    case Label::Kind::numbered:
      break;
  }
  return label.index();
}

namespace {

nlohmann::ordered_json labels_json(const LabelSet& labels) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  labels.for_each([&](Label label) { out.push_back(label_json(label)); });
  return out;
}

std::string component_text(const std::vector<std::size_t>& component) {
  std::string out = "[";
  for (std::size_t i = 0; i < component.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(component[i]);
  }
  return out + "]";
}

}  // namespace

std::string render_text(const analysis::ConfigurationSet& configs,
                        const std::vector<analysis::Hint>& hints) {
  std::string out = "configurations:\n";
  for (const analysis::CallConfiguration& config : configs) out += "  " + config.to_string() + "\n";
  out += "hints:\n";
  if (hints.empty()) out += "  (none)\n";
  for (const analysis::Hint& hint : hints) {
    out += "  " + hint.function + " -> " + hint.callee + " at " + hint.call_label.to_string() +
           ": component " + component_text(hint.component) +
           " available in both directions, witnesses " + hint.witnesses.to_string() + "\n";
  }
  return out;
}

nlohmann::ordered_json render_json(const LabeledProgram& program,
                                   const analysis::ConfigurationSet& configs,
                                   const std::vector<analysis::Hint>& hints) {
  nlohmann::ordered_json out;
  nlohmann::ordered_json& rows = out["configurations"] = nlohmann::ordered_json::array();
  for (const analysis::CallConfiguration& config : configs) {
    nlohmann::ordered_json row;
    row["caller"] = config.caller;
    row["callee"] = config.callee.name;
    row["inverted"] = config.callee.inversions % 2 == 1;
    row["direction"] = std::string(analysis::to_string(config.direction()));
    row["argument_labels"] = labels_json(config.arguments);
    row["implicit_labels"] = labels_json(config.implicit);
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json& hint_rows = out["hints"] = nlohmann::ordered_json::array();
  for (const analysis::Hint& hint : hints) {
    nlohmann::ordered_json row;
    row["function"] = hint.function;
    row["call_label"] = label_json(hint.call_label);
    row["witness_labels"] = labels_json(hint.witnesses);
    hint_rows.push_back(std::move(row));
  }
  nlohmann::ordered_json& labels = out["labels"] = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < program.index().size(); ++i) {
    const LabelInfo& info = program.index()[i];
    labels[std::to_string(i)] = {{"function", info.function},
                                 {"kind", std::string(to_string(info.kind))}};
  }
  return out;
}

}  // namespace jeopardy
