#include "jeopardy/parser.hpp"

#include <initializer_list>

#include "lexer.hpp"

namespace jeopardy {

namespace {

using detail::Token;
using detail::TokenKind;

constexpr int kMaxNesting = 256;

bool is_pattern_term(const Term& term) { return std::holds_alternative<PatternTerm>(term.node); }

Pattern take_pattern(Term&& term) { return std::move(std::get<PatternTerm>(term.node).pattern); }

class Parser {
 public:
  Parser(std::string_view source, const ParseOptions& options)
      : tokens_(detail::tokenize(source, options)) {}

  Program program() {
    Program prog;
    bool seen_main = false;
    while (!at(TokenKind::end_of_input) || !seen_main) {
      if (at(TokenKind::kw_data)) {
        prog.definitions.emplace_back(data_definition());
      } else if (at(TokenKind::identifier)) {
        prog.definitions.emplace_back(function_definition());
      } else if (at(TokenKind::kw_main) && !seen_main) {
        const std::size_t begin = peek().span.begin;
        advance();
        prog.main = function_ref();
        prog.main_meta.span = {begin, previous_end()};
        expect(TokenKind::dot);
        seen_main = true;
      } else {
        fail(seen_main ? "'data', a function definition or end of input"
                       : "'data', 'main' or a function definition");
      }
    }
    return prog;
  }

  Pattern whole_pattern() {
    Pattern p = pattern({});
    expect(TokenKind::end_of_input);
    return p;
  }

  Term whole_term() {
    Term t = term();
    expect(TokenKind::end_of_input);
    return t;
  }

 private:
  // RAII nesting guard so that adversarial inputs cannot exhaust the stack.
  class Nest {
   public:
    explicit Nest(Parser& parser) : parser_(parser) {
      if (++parser_.depth_ > kMaxNesting) {
        parser_.fail("nesting depth at most " + std::to_string(kMaxNesting));
      }
    }
    ~Nest() { --parser_.depth_; }
    Nest(const Nest&) = delete;
    Nest& operator=(const Nest&) = delete;

   private:
    Parser& parser_;
  };

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  bool at(TokenKind kind, std::size_t ahead = 0) const { return peek(ahead).kind == kind; }
  const Token& advance() {
    const Token& tok = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return tok;
  }
  std::size_t previous_end() const { return pos_ == 0 ? 0 : tokens_[pos_ - 1].span.end; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& tok = peek();
    std::string found = describe(tok.kind);
    if (tok.kind == TokenKind::identifier || tok.kind == TokenKind::number) {
      found += " '" + tok.text + "'";
    }
    throw ParseError(tok.span, expected, found);
  }

  const Token& expect(TokenKind kind) {
    if (!at(kind)) fail(describe(kind));
    return advance();
  }

  Name identifier() { return expect(TokenKind::identifier).text; }

  bool starts_atom(std::size_t ahead = 0) const {
    switch (peek(ahead).kind) {
      case TokenKind::identifier:
      case TokenKind::wildcard:
      case TokenKind::number:
      case TokenKind::lbracket:
      case TokenKind::lparen:
        return true;
      default:
        return false;
    }
  }

  /// `: τ` followed by one of `stops` is an ascription, not a cons.
  bool at_ascription(std::initializer_list<TokenKind> stops) const {
    if (!at(TokenKind::colon) || !at(TokenKind::identifier, 1)) return false;
    for (TokenKind stop : stops) {
      if (at(stop, 2)) return true;
    }
    return false;
  }

  // ---- definitions --------------------------------------------------------

  DataDefinition data_definition() {
    const std::size_t begin = peek().span.begin;
    expect(TokenKind::kw_data);
    DataDefinition data;
    data.type_name = identifier();
    expect(TokenKind::equals);
    while (at(TokenKind::lbracket)) {
      const std::size_t ctor_begin = peek().span.begin;
      advance();
      DataConstructor ctor;
      ctor.name = identifier();
      while (at(TokenKind::identifier)) ctor.field_types.push_back(advance().text);
      expect(TokenKind::rbracket);
      ctor.meta.span = {ctor_begin, previous_end()};
      data.constructors.push_back(std::move(ctor));
    }
    expect(TokenKind::dot);
    data.meta.span = {begin, previous_end()};
    return data;
  }

  FunctionDefinition function_definition() {
    const std::size_t begin = peek().span.begin;
    FunctionDefinition fn;
    fn.name = identifier();
    bool typed_parameter = false;
    if (at(TokenKind::lparen)) {
      // `(p : τ)`, `(p1, p2)` or `(p)`.
      const std::size_t open = peek().span.begin;
      advance();
      Pattern first = pattern({TokenKind::rparen});
      if (at(TokenKind::comma)) {
        advance();
        Pattern second = pattern({});
        expect(TokenKind::rparen);
        fn.parameter = Pattern{TuplePattern{std::move(first), std::move(second)}, std::nullopt,
                               NodeMeta{{open, previous_end()}}};
      } else if (at(TokenKind::colon)) {
        advance();
        fn.parameter_type = identifier();
        expect(TokenKind::rparen);
        fn.parameter = std::move(first);
        typed_parameter = true;
      } else {
        expect(TokenKind::rparen);
        fn.parameter = std::move(first);
      }
    } else {
      fn.parameter = pattern_atom();
    }
    if (at(TokenKind::colon)) {
      advance();
      Name first_type = identifier();
      if (at(TokenKind::colon)) {
        if (typed_parameter) fail("'='");
        advance();
        fn.parameter_type = std::move(first_type);
        fn.return_type = identifier();
      } else if (typed_parameter) {
        fn.return_type = std::move(first_type);
      } else {
        fn.parameter_type = std::move(first_type);
      }
    }
    expect(TokenKind::equals);
    fn.body = term();
    expect(TokenKind::dot);
    fn.meta.span = {begin, previous_end()};
    return fn;
  }

  FunctionRef function_ref() {
    Nest nest(*this);
    if (at(TokenKind::lparen)) {
      advance();
      expect(TokenKind::kw_invert);
      FunctionRef inner = function_ref();
      expect(TokenKind::rparen);
      return inner.inverted();
    }
    return FunctionRef::direct(identifier());
  }

  // ---- patterns -----------------------------------------------------------

  Pattern pattern(std::initializer_list<TokenKind> stops) {
    Nest nest(*this);
    const std::size_t begin = peek().span.begin;
    Pattern head = pattern_atom();
    if (at(TokenKind::colon) && !at_ascription(stops)) {
      advance();
      Pattern tail = pattern(stops);
      return Pattern{ConsPattern{std::move(head), std::move(tail)}, std::nullopt,
                     NodeMeta{{begin, previous_end()}}};
    }
    return head;
  }

  Pattern pattern_atom() {
    Nest nest(*this);
    const Token& tok = peek();
    const std::size_t begin = tok.span.begin;
    switch (tok.kind) {
      case TokenKind::identifier:
      case TokenKind::wildcard:
        advance();
        return make_variable(tok.text, tok.span);
      case TokenKind::number: {
        advance();
        return Pattern{NaturalPattern{tok.number}, std::nullopt, NodeMeta{tok.span}};
      }
      case TokenKind::lbracket: {
        advance();
        if (at(TokenKind::rbracket)) {
          advance();
          return Pattern{NilPattern{}, std::nullopt, NodeMeta{{begin, previous_end()}}};
        }
        Name name = identifier();
        std::vector<Pattern> args;
        while (!at(TokenKind::rbracket)) {
          if (!starts_atom()) fail("pattern or ']'");
          args.push_back(pattern_atom());
        }
        advance();
        return make_constructor(std::move(name), std::move(args), {begin, previous_end()});
      }
      case TokenKind::lparen: {
        advance();
        Pattern first = pattern({});
        if (at(TokenKind::comma)) {
          advance();
          Pattern second = pattern({});
          expect(TokenKind::rparen);
          return Pattern{TuplePattern{std::move(first), std::move(second)}, std::nullopt,
                         NodeMeta{{begin, previous_end()}}};
        }
        expect(TokenKind::rparen);
        return first;
      }
      default:
        fail("pattern");
    }
  }

  // ---- terms --------------------------------------------------------------

  Term term() {
    Nest nest(*this);
    const std::size_t begin = peek().span.begin;
    if (at(TokenKind::kw_case)) {
      advance();
      Term scrutinee = term();
      std::optional<Name> type;
      if (at(TokenKind::colon)) {
        advance();
        type = identifier();
      }
      expect(TokenKind::kw_of);
      std::vector<CaseBranch> branches;
      if (!at(TokenKind::semicolon)) fail("';' introducing a case branch");
      while (at(TokenKind::semicolon)) {
        advance();
        Pattern p = pattern({});
        expect(TokenKind::arrow);
        Term body = term();
        branches.push_back(CaseBranch{std::move(p), std::move(body)});
      }
      return make_case(std::move(scrutinee), std::move(type), std::move(branches),
                       {begin, previous_end()});
    }
    if (at(TokenKind::kw_let)) {
      advance();
      Pattern p = pattern({TokenKind::equals});
      std::optional<Name> type;
      if (at(TokenKind::colon)) {
        advance();
        type = identifier();
      }
      expect(TokenKind::equals);
      Term bound = term();
      expect(TokenKind::kw_in);
      Term body = term();
      return Term{Let{std::move(p), std::move(type), std::move(bound), std::move(body)},
                  std::nullopt, NodeMeta{{begin, previous_end()}}};
    }
    return cons_term();
  }

  Term cons_term() {
    Nest nest(*this);
    const std::size_t begin = peek().span.begin;
    Term head = application_term();
    if (!at(TokenKind::colon) || at_ascription({TokenKind::kw_of})) return head;
    advance();
    Term tail = cons_term();
    const SourceSpan span{begin, previous_end()};
    if (is_pattern_term(head) && is_pattern_term(tail)) {
      return make_pattern_term(Pattern{
          ConsPattern{take_pattern(std::move(head)), take_pattern(std::move(tail))},
          std::nullopt, NodeMeta{span}});
    }
    return Term{ConsTerm{std::move(head), std::move(tail)}, std::nullopt, NodeMeta{span}};
  }

  Term application_term() {
    const std::size_t begin = peek().span.begin;
    const bool inverted_callee = at(TokenKind::lparen) && at(TokenKind::kw_invert, 1);
    const bool named_callee = at(TokenKind::identifier) && starts_atom(1);
    if (!inverted_callee && !named_callee) return atom_term();
    FunctionRef callee = function_ref();
    if (!starts_atom()) fail("argument of '" + callee.name + "'");
    Term argument = atom_term();
    const SourceSpan span{begin, previous_end()};
    if (is_pattern_term(argument)) {
      return make_application(std::move(callee), take_pattern(std::move(argument)), span);
    }
    return Term{GeneralApplication{std::move(callee), std::move(argument)}, std::nullopt,
                NodeMeta{span}};
  }

  Term atom_term() {
    Nest nest(*this);
    const Token& tok = peek();
    const std::size_t begin = tok.span.begin;
    switch (tok.kind) {
      case TokenKind::identifier:
      case TokenKind::wildcard:
      case TokenKind::number:
        return make_pattern_term(pattern_atom());
      case TokenKind::lbracket: {
        if (at(TokenKind::rbracket, 1)) return make_pattern_term(pattern_atom());
        advance();
        Name name = identifier();
        std::vector<Term> args;
        bool all_patterns = true;
        while (!at(TokenKind::rbracket)) {
          if (!starts_atom()) fail("term or ']'");
          args.push_back(atom_term());
          all_patterns = all_patterns && is_pattern_term(args.back());
        }
        advance();
        const SourceSpan span{begin, previous_end()};
        if (all_patterns) {
          std::vector<Pattern> patterns;
          patterns.reserve(args.size());
          for (Term& arg : args) patterns.push_back(take_pattern(std::move(arg)));
          return make_pattern_term(make_constructor(std::move(name), std::move(patterns), span));
        }
        return Term{ConstructorTerm{std::move(name), std::move(args)}, std::nullopt,
                    NodeMeta{span}};
      }
      case TokenKind::lparen: {
        if (at(TokenKind::kw_invert, 1)) fail("term (an inverted function must be applied)");
        advance();
        Term first = term();
        if (at(TokenKind::comma)) {
          advance();
          Term second = term();
          expect(TokenKind::rparen);
          const SourceSpan span{begin, previous_end()};
          if (is_pattern_term(first) && is_pattern_term(second)) {
            return make_pattern_term(Pattern{
                TuplePattern{take_pattern(std::move(first)), take_pattern(std::move(second))},
                std::nullopt, NodeMeta{span}});
          }
          return Term{TupleTerm{std::move(first), std::move(second)}, std::nullopt,
                      NodeMeta{span}};
        }
        expect(TokenKind::rparen);
        return first;
      }
      default:
        fail("term");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

Program parse_program(std::string_view source, const ParseOptions& options) {
  return Parser(source, options).program();
}

Pattern parse_pattern(std::string_view source, const ParseOptions& options) {
  return Parser(source, options).whole_pattern();
}

Term parse_term(std::string_view source, const ParseOptions& options) {
  return Parser(source, options).whole_term();
}

}  // namespace jeopardy
