#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "jeopardy/parser.hpp"

namespace jeopardy::detail {

enum class TokenKind {
  identifier,
  wildcard,
  number,
  lbracket,
  rbracket,
  lparen,
  rparen,
  comma,
  colon,
  semicolon,
  arrow,
  equals,
  dot,
  kw_data,
  kw_main,
  kw_case,
  kw_of,
  kw_invert,
  kw_let,
  kw_in,
  end_of_input,
};

std::string describe(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  SourceSpan span;
  std::uint32_t number = 0;
};

/// Comments: `--` to end of line and nestable `{- ... -}` blocks.
std::vector<Token> tokenize(std::string_view source, const ParseOptions& options);

}  // namespace jeopardy::detail
