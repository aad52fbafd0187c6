#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jeopardy/syntax.hpp"

namespace jeopardy {

enum class DiagnosticKind {
  undefined_function,
  undefined_constructor,
  arity_mismatch,
  duplicate_function,
  duplicate_constructor,
  duplicate_type,
  non_linear_pattern,
  unbound_variable,
  naturals_undeclared,
};

std::string_view to_string(DiagnosticKind kind);

struct Diagnostic {
  DiagnosticKind kind;
  /// The offending name.
  Name subject;
  SourceSpan span;
  std::string message;
};

/// Constructors that tuple and list sugar expand to.
inline constexpr std::string_view kPairConstructor = "pair";
inline constexpr std::string_view kConsConstructor = "cons";
inline constexpr std::string_view kNilConstructor = "nil";

struct SugarUsage {
  bool tuples = false;
  bool lists = false;
  bool naturals = false;
};

SugarUsage sugar_usage(const Program& program);

/// Well-formedness of a sugared or core program. Empty iff the program is
/// accepted.
std::vector<Diagnostic> validate(const Program& program);

/// `file:line:col:` for a byte offset; either part is omitted when its
/// input is empty.
std::string source_location(std::string_view source, std::string_view path, std::size_t offset);

/// `file:line:col: Kind 'subject': message`, with line/col computed from the
/// source text when given.
std::string format_diagnostic(const Diagnostic& diagnostic, std::string_view source = {},
                              std::string_view path = {});

}  // namespace jeopardy
