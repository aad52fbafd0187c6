#pragma once

// Strict first-order evaluation of core programs in the conventional
// direction, with a call trace.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jeopardy/label.hpp"
#include "jeopardy/labeler.hpp"
#include "jeopardy/syntax.hpp"
#include "jeopardy/validate.hpp"

namespace jeopardy {

using Environment = std::map<Name, Value, std::less<>>;

/// Binds the variables of `pattern` to the matching parts of `value`, or
/// nullopt if the shapes differ. Extends `env` in place on success.
bool match_pattern(const Pattern& pattern, const Value& value, Environment& env);
std::optional<Environment> match_pattern(const Pattern& pattern, const Value& value);

/// Caller name used for the top-level call.
inline constexpr std::string_view kTopCaller = "⊤";

struct CallEvent {
  Name caller;
  Name callee;
  Value argument;
  /// Label of the application node; `input` for the top-level call.
  Label application_label;

  friend bool operator==(const CallEvent&, const CallEvent&) = default;
};

enum class RuntimeErrorKind {
  no_branch_matched,
  inverted_call,
  call_limit_exceeded,
  depth_limit_exceeded,
  unbound_variable,
};

std::string_view to_string(RuntimeErrorKind kind);

class RuntimeError : public std::runtime_error {
 public:
  RuntimeError(RuntimeErrorKind kind, std::optional<Label> label, const std::string& detail);

  RuntimeErrorKind kind() const { return kind_; }
  std::optional<Label> label() const { return label_; }

 private:
  RuntimeErrorKind kind_;
  std::optional<Label> label_;
};

struct EvalOptions {
  /// Upper bound on the number of calls in one run.
  std::size_t max_calls = 1'000'000;
  /// Upper bound on nested non-tail evaluation (case scrutinees).
  std::size_t max_depth = 10'000;
  /// Whether run_main records the call trace.
  bool record_trace = true;
};

using EventSink = std::function<void(const CallEvent&)>;

/// Evaluates `term`, which belongs to function `current`, in `env`.
Value eval_term(const LabeledProgram& program, const Environment& env, const Term& term,
                std::string_view current, const EventSink& sink = {},
                const EvalOptions& options = {});

struct RunResult {
  Value value;
  std::vector<CallEvent> trace;
};

/// Calls the main function on `input` from the empty context.
RunResult run_main(const LabeledProgram& program, const Value& input,
                   const EvalOptions& options = {});

/// Raised when an input literal is not a closed, well-formed value of the
/// program.
class ValueError : public std::runtime_error {
 public:
  explicit ValueError(Diagnostic diagnostic);
  const Diagnostic& diagnostic() const { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

/// Parses a value literal such as `[successor [zero]]`, `3` or `([a], [])`
/// against the constructors declared in `program` (a desugared program, so
/// that the sugar constructors are present). Throws ParseError or ValueError.
Value parse_value(std::string_view text, const Program& program);

/// Converts a closed core pattern to a value; nullopt if it has variables.
std::optional<Value> to_value(const Pattern& pattern);

}  // namespace jeopardy
