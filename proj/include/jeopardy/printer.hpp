#pragma once

#include <string>

#include "jeopardy/syntax.hpp"

namespace jeopardy {

struct PrintOptions {
  /// Append `{-n-}` to every labeled node: after the leaf or closing bracket
  /// of a pattern, after the callee of an application, after `case`.
  bool show_labels = false;
};

/// Concrete syntax that re-parses to a structurally identical program.
/// Programs containing generated names re-parse with
/// `ParseOptions::allow_generated_names`.
std::string print_program(const Program& program, const PrintOptions& options = {});
std::string print_term(const Term& term, const PrintOptions& options = {});
std::string print_pattern(const Pattern& pattern, const PrintOptions& options = {});
std::string print_function_ref(const FunctionRef& ref);
std::string print_value(const Value& value);

}  // namespace jeopardy
