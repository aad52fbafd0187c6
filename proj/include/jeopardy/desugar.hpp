#pragma once

#include <stdexcept>
#include <string>

#include "jeopardy/syntax.hpp"

namespace jeopardy {

class DesugarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Prefix of every name introduced by desugaring. The lexer rejects it in
/// user programs, so generated names never capture user variables.
inline constexpr std::string_view kGeneratedPrefix = "_";

/// Type names of the data declarations injected for tuple and list sugar.
inline constexpr std::string_view kTupleTypeName = "_tuple";
inline constexpr std::string_view kListTypeName = "_list";
inline constexpr std::string_view kAnyTypeName = "_any";

/// Rewrites a validated, possibly sugared program into core form: every
/// application argument is a pattern, every function parameter is a single
/// variable, and compound terms are expressed with nested case statements.
/// Non-pattern constructor arguments are hoisted left to right, leftmost
/// outermost. Fresh variables are `_v0`, `_v1`, ... numbered per definition.
Program desugar_program(const Program& program);

/// Desugars the pattern sugar (tuples, lists, natural literals) of a single
/// pattern.
Pattern desugar_pattern(const Pattern& pattern);

/// Desugars one term in the context of `program`, which supplies constructor
/// field types and function parameter types for the generated case
/// ascriptions. Fresh variables are numbered from zero.
Term desugar_term(const Term& term, const Program& program);

}  // namespace jeopardy
