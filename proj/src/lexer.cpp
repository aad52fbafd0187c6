#include "lexer.hpp"

#include <cctype>
#include <charconv>
#include <unordered_map>

namespace jeopardy::detail {

std::string describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::identifier:
      return "identifier";
    case TokenKind::wildcard:
      return "'_'";
    case TokenKind::number:
      return "number";
    case TokenKind::lbracket:
      return "'['";
    case TokenKind::rbracket:
      return "']'";
    case TokenKind::lparen:
      return "'('";
    case TokenKind::rparen:
      return "')'";
    case TokenKind::comma:
      return "','";
    case TokenKind::colon:
      return "':'";
    case TokenKind::semicolon:
      return "';'";
    case TokenKind::arrow:
      return "'->'";
    case TokenKind::equals:
      return "'='";
    case TokenKind::dot:
      return "'.'";
    case TokenKind::kw_data:
      return "'data'";
    case TokenKind::kw_main:
      return "'main'";
    case TokenKind::kw_case:
      return "'case'";
    case TokenKind::kw_of:
      return "'of'";
    case TokenKind::kw_invert:
      return "'invert'";
    case TokenKind::kw_let:
      return "'let'";
    case TokenKind::kw_in:
      return "'in'";
    case TokenKind::end_of_input:
      return "end of input";
  }
  return "token";
}

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string printable(char c) {
  const auto byte = static_cast<unsigned char>(c);
  if (byte >= 0x20 && byte < 0x7f) return std::string("'") + c + "'";
  static constexpr char kHex[] = "0123456789abcdef";
  return std::string("byte 0x") + kHex[byte >> 4] + kHex[byte & 0xf];
}

const std::unordered_map<std::string_view, TokenKind>& keywords() {
  static const std::unordered_map<std::string_view, TokenKind> table = {
      {"data", TokenKind::kw_data}, {"main", TokenKind::kw_main},
      {"case", TokenKind::kw_case}, {"of", TokenKind::kw_of},
      {"invert", TokenKind::kw_invert}, {"let", TokenKind::kw_let},
      {"in", TokenKind::kw_in},
  };
  return table;
}

}  // namespace

std::vector<Token> tokenize(std::string_view src, const ParseOptions& options) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto push = [&](TokenKind kind, std::size_t begin, std::size_t end) {
    tokens.push_back(Token{kind, std::string(src.substr(begin, end - begin)), {begin, end}, 0});
  };

  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (c == '{' && i + 1 < src.size() && src[i + 1] == '-') {
      const std::size_t begin = i;
      int depth = 0;
      while (i < src.size()) {
        if (src[i] == '{' && i + 1 < src.size() && src[i + 1] == '-') {
          ++depth;
          i += 2;
        } else if (src[i] == '-' && i + 1 < src.size() && src[i + 1] == '}') {
          --depth;
          i += 2;
          if (depth == 0) break;
        } else {
          ++i;
        }
      }
      if (depth != 0) throw ParseError({begin, src.size()}, "'-}'", "end of input");
      continue;
    }

    const std::size_t begin = i;
    if (is_letter(c) || c == '_') {
      while (i < src.size() && is_ident_char(src[i])) ++i;
      const std::string_view word = src.substr(begin, i - begin);
      if (word == "_") {
        push(TokenKind::wildcard, begin, i);
      } else if (word.front() == '_' && !options.allow_generated_names) {
        throw ParseError({begin, i}, "identifier starting with a letter",
                         "'" + std::string(word) + "'");
      } else if (const auto kw = keywords().find(word); kw != keywords().end()) {
        push(kw->second, begin, i);
      } else {
        push(TokenKind::identifier, begin, i);
      }
      continue;
    }
    if (is_digit(c)) {
      while (i < src.size() && is_digit(src[i])) ++i;
      if (i < src.size() && is_ident_char(src[i])) {
        throw ParseError({begin, i + 1}, "separator after number", printable(src[i]));
      }
      std::uint32_t value = 0;
      const auto [ptr, ec] = std::from_chars(src.data() + begin, src.data() + i, value);
      if (ec != std::errc() || ptr != src.data() + i || value > kMaxNaturalLiteral) {
        throw ParseError({begin, i}, "natural number literal at most " +
                                         std::to_string(kMaxNaturalLiteral),
                         "'" + std::string(src.substr(begin, i - begin)) + "'");
      }
      push(TokenKind::number, begin, i);
      tokens.back().number = value;
      continue;
    }

    ++i;
    switch (c) {
      case '[':
        push(TokenKind::lbracket, begin, i);
        break;
      case ']':
        push(TokenKind::rbracket, begin, i);
        break;
      case '(':
        push(TokenKind::lparen, begin, i);
        break;
      case ')':
        push(TokenKind::rparen, begin, i);
        break;
      case ',':
        push(TokenKind::comma, begin, i);
        break;
      case ':':
        push(TokenKind::colon, begin, i);
        break;
      case ';':
        push(TokenKind::semicolon, begin, i);
        break;
      case '=':
        push(TokenKind::equals, begin, i);
        break;
      case '.':
        push(TokenKind::dot, begin, i);
        break;
      case '-':
        if (i < src.size() && src[i] == '>') {
          ++i;
          push(TokenKind::arrow, begin, i);
          break;
        }
        throw ParseError({begin, i}, "'->' or '--'", printable(c));
      default:
        throw ParseError({begin, i}, "token", printable(c));
    }
  }
  tokens.push_back(Token{TokenKind::end_of_input, "", {src.size(), src.size()}, 0});
  return tokens;
}

}  // namespace jeopardy::detail
