#pragma once

// Abstract syntax of Jeopardy: patterns, terms, definitions and programs, in
// both the sugared form produced by the parser and the core form produced by
// desugaring. Core form uses only VariablePattern/ConstructorPattern and the
// PatternTerm/Application/Case terms.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jeopardy/label.hpp"

namespace jeopardy {

/// Variable, constructor, type and function names share one representation;
/// grammar position tells them apart.
using Name = std::string;

/// Anonymous pattern variable. Never binds, exempt from linearity.
inline constexpr std::string_view kWildcard = "_";

/// Byte offsets into the source text.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

/// Node metadata that is ignored by structural equality, so that trees parsed
/// from differently formatted sources compare equal.
struct NodeMeta {
  SourceSpan span;

  friend bool operator==(const NodeMeta&, const NodeMeta&) { return true; }
};

/// Heap-allocated value with deep-copy semantics, for recursive variants.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT(google-explicit-constructor)
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& lhs, const Box& rhs) { return *lhs.ptr_ == *rhs.ptr_; }

 private:
  std::unique_ptr<T> ptr_;
};

// ---------------------------------------------------------------------------
// Function references

/// `f`, `(invert f)`, `(invert (invert f))`, ... stored as the underlying
/// function name and the number of `invert` wrappers.
struct FunctionRef {
  Name name;
  unsigned inversions = 0;

  static FunctionRef direct(Name name) { return {std::move(name), 0}; }
  FunctionRef inverted() const { return {name, inversions + 1}; }

  friend auto operator<=>(const FunctionRef&, const FunctionRef&) = default;
  friend bool operator==(const FunctionRef&, const FunctionRef&) = default;
};

// ---------------------------------------------------------------------------
// Patterns

struct Pattern;

struct VariablePattern {
  Name name;
  friend bool operator==(const VariablePattern&, const VariablePattern&) = default;
};

struct ConstructorPattern {
  Name name;
  std::vector<Pattern> args;
  friend bool operator==(const ConstructorPattern&, const ConstructorPattern&) = default;
};

// Sugar: `(p1, p2)`, `p1 : p2`, `[]`, `3`.
struct TuplePattern {
  Box<Pattern> first;
  Box<Pattern> second;
  friend bool operator==(const TuplePattern&, const TuplePattern&) = default;
};

struct ConsPattern {
  Box<Pattern> head;
  Box<Pattern> tail;
  friend bool operator==(const ConsPattern&, const ConsPattern&) = default;
};

struct NilPattern {
  friend bool operator==(const NilPattern&, const NilPattern&) = default;
};

struct NaturalPattern {
  std::uint32_t value = 0;
  friend bool operator==(const NaturalPattern&, const NaturalPattern&) = default;
};

struct Pattern {
  using Node = std::variant<VariablePattern, ConstructorPattern, TuplePattern, ConsPattern,
                            NilPattern, NaturalPattern>;

  Node node;
  std::optional<Label> label;
  NodeMeta meta;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

Pattern make_variable(Name name, SourceSpan span = {});
Pattern make_constructor(Name name, std::vector<Pattern> args, SourceSpan span = {});

bool is_core(const Pattern& pattern);

/// Names bound by a pattern in left-to-right order, wildcards excluded.
std::vector<Name> bound_variables(const Pattern& pattern);

// ---------------------------------------------------------------------------
// Terms

struct Term;

/// A pattern in term position. Its program point is the root pattern's label.
struct PatternTerm {
  Pattern pattern;
  friend bool operator==(const PatternTerm&, const PatternTerm&) = default;
};

/// `g p`; the argument is always a pattern.
struct Application {
  FunctionRef callee;
  Pattern argument;
  friend bool operator==(const Application&, const Application&) = default;
};

struct CaseBranch;

struct Case {
  Box<Term> scrutinee;
  std::optional<Name> scrutinee_type;
  std::vector<CaseBranch> branches;
  friend bool operator==(const Case&, const Case&) = default;
};

// Sugar. The parser only builds these when at least one operand is not a
// pattern; otherwise the whole thing is a PatternTerm.

/// `[c t1 ... tn]`
struct ConstructorTerm {
  Name name;
  std::vector<Term> args;
  friend bool operator==(const ConstructorTerm&, const ConstructorTerm&) = default;
};

/// `(t1, t2)`
struct TupleTerm {
  Box<Term> first;
  Box<Term> second;
  friend bool operator==(const TupleTerm&, const TupleTerm&) = default;
};

/// `t1 : t2`
struct ConsTerm {
  Box<Term> head;
  Box<Term> tail;
  friend bool operator==(const ConsTerm&, const ConsTerm&) = default;
};

/// `g t` with a non-pattern argument.
struct GeneralApplication {
  FunctionRef callee;
  Box<Term> argument;
  friend bool operator==(const GeneralApplication&, const GeneralApplication&) = default;
};

/// `let p : τ = t in t'`
struct Let {
  Pattern pattern;
  std::optional<Name> type;
  Box<Term> bound;
  Box<Term> body;
  friend bool operator==(const Let&, const Let&) = default;
};

struct Term {
  using Node = std::variant<PatternTerm, Application, Case, ConstructorTerm, TupleTerm, ConsTerm,
                            GeneralApplication, Let>;

  Node node;
  /// Unused for PatternTerm, whose label lives on the pattern.
  std::optional<Label> label;
  NodeMeta meta;

  friend bool operator==(const Term&, const Term&) = default;
};

struct CaseBranch {
  Pattern pattern;
  Term body;
  friend bool operator==(const CaseBranch&, const CaseBranch&) = default;
};

Term make_pattern_term(Pattern pattern);
Term make_application(FunctionRef callee, Pattern argument, SourceSpan span = {});
Term make_case(Term scrutinee, std::optional<Name> type, std::vector<CaseBranch> branches,
               SourceSpan span = {});

/// The program point of a term: the pattern's label for PatternTerm.
std::optional<Label> label_of(const Term& term);

/// True iff the term is a PatternTerm, Application or Case all the way down,
/// with only core patterns.
bool is_core(const Term& term);

// ---------------------------------------------------------------------------
// Definitions and programs

struct DataConstructor {
  Name name;
  std::vector<Name> field_types;
  NodeMeta meta;
  friend bool operator==(const DataConstructor&, const DataConstructor&) = default;
};

struct DataDefinition {
  Name type_name;
  std::vector<DataConstructor> constructors;
  NodeMeta meta;
  friend bool operator==(const DataDefinition&, const DataDefinition&) = default;
};

struct FunctionDefinition {
  Name name;
  Pattern parameter;
  std::optional<Name> parameter_type;
  std::optional<Name> return_type;
  Term body;
  NodeMeta meta;
  friend bool operator==(const FunctionDefinition&, const FunctionDefinition&) = default;
};

using Definition = std::variant<DataDefinition, FunctionDefinition>;

struct Program {
  std::vector<Definition> definitions;
  FunctionRef main;
  NodeMeta main_meta;

  const FunctionDefinition* find_function(std::string_view name) const;
  const DataConstructor* find_constructor(std::string_view name) const;

  std::vector<const FunctionDefinition*> functions() const;
  std::vector<const DataDefinition*> data_types() const;

  friend bool operator==(const Program&, const Program&) = default;
};

bool is_core(const Program& program);

// ---------------------------------------------------------------------------
// Values

/// A closed constructor tree.
struct Value {
  Name constructor;
  std::vector<Value> args;

  friend auto operator<=>(const Value&, const Value&) = default;
  friend bool operator==(const Value&, const Value&) = default;
};

/// `[zero]`, `[successor [zero]]`, ... for n.
Value natural_value(std::uint32_t n);
/// `[pair a b]`
Value pair_value(Value first, Value second);

}  // namespace jeopardy
