#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "jeopardy/syntax.hpp"

namespace jeopardy {

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, std::string expected, std::string found)
      : std::runtime_error("expected " + expected + ", found " + found),
        span_(span),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  SourceSpan span() const { return span_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  SourceSpan span_;
  std::string expected_;
  std::string found_;
};

struct ParseOptions {
  /// Accept `_`-prefixed identifiers such as the fresh names introduced by
  /// desugaring. Off for user programs, so generated names can never clash.
  bool allow_generated_names = false;
};

/// Largest accepted natural number literal.
inline constexpr std::uint32_t kMaxNaturalLiteral = 10000;

Program parse_program(std::string_view source, const ParseOptions& options = {});

/// Parses the whole input as one (possibly sugared) pattern.
Pattern parse_pattern(std::string_view source, const ParseOptions& options = {});

/// Parses the whole input as one (possibly sugared) term.
Term parse_term(std::string_view source, const ParseOptions& options = {});

}  // namespace jeopardy
