#include "jeopardy/validate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <type_traits>

namespace jeopardy {

std::string_view to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::undefined_function:
      return "UndefinedFunction";
    case DiagnosticKind::undefined_constructor:
      return "UndefinedConstructor";
    case DiagnosticKind::arity_mismatch:
      return "ArityMismatch";
    case DiagnosticKind::duplicate_function:
      return "DuplicateFunction";
    case DiagnosticKind::duplicate_constructor:
      return "DuplicateConstructor";
    case DiagnosticKind::duplicate_type:
      return "DuplicateType";
    case DiagnosticKind::non_linear_pattern:
      return "NonLinearPattern";
    case DiagnosticKind::unbound_variable:
      return "UnboundVariable";
    case DiagnosticKind::naturals_undeclared:
      return "NaturalsUndeclared";
  }
  return "Unknown";
}

namespace {

struct SugarScan {
  SugarUsage usage;

  void pattern(const Pattern& p) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, ConstructorPattern>) {
            for (const Pattern& arg : node.args) pattern(arg);
          } else if constexpr (std::is_same_v<T, TuplePattern>) {
            usage.tuples = true;
            pattern(*node.first);
            pattern(*node.second);
          } else if constexpr (std::is_same_v<T, ConsPattern>) {
            usage.lists = true;
            pattern(*node.head);
            pattern(*node.tail);
          } else if constexpr (std::is_same_v<T, NilPattern>) {
            usage.lists = true;
          } else if constexpr (std::is_same_v<T, NaturalPattern>) {
            usage.naturals = true;
          }
        },
        p.node);
  }

  void term(const Term& t) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, PatternTerm>) {
            pattern(node.pattern);
          } else if constexpr (std::is_same_v<T, Application>) {
            pattern(node.argument);
          } else if constexpr (std::is_same_v<T, Case>) {
            term(*node.scrutinee);
            for (const CaseBranch& b : node.branches) {
              pattern(b.pattern);
              term(b.body);
            }
          } else if constexpr (std::is_same_v<T, ConstructorTerm>) {
            for (const Term& arg : node.args) term(arg);
          } else if constexpr (std::is_same_v<T, TupleTerm>) {
            usage.tuples = true;
            term(*node.first);
            term(*node.second);
          } else if constexpr (std::is_same_v<T, ConsTerm>) {
            usage.lists = true;
            term(*node.head);
            term(*node.tail);
          } else if constexpr (std::is_same_v<T, GeneralApplication>) {
            term(*node.argument);
          } else if constexpr (std::is_same_v<T, Let>) {
            pattern(node.pattern);
            term(*node.bound);
            term(*node.body);
          }
        },
        t.node);
  }
};

class Validator {
 public:
  explicit Validator(const Program& program) : program_(program) {}

  std::vector<Diagnostic> run() {
    collect_declarations();
    if (!program_.find_function(program_.main.name)) {
      report(DiagnosticKind::undefined_function, program_.main.name, program_.main_meta.span,
             "main refers to an undefined function");
    }
    for (const FunctionDefinition* fn : program_.functions()) {
      std::set<Name> scope;
      binding_pattern(fn->parameter, scope);
      term(fn->body, scope);
    }
    return std::move(diagnostics_);
  }

 private:
  void report(DiagnosticKind kind, const Name& subject, SourceSpan span, std::string message) {
    diagnostics_.push_back(Diagnostic{kind, subject, span, std::move(message)});
  }

  void collect_declarations() {
    std::set<Name> types;
    std::set<Name> functions;
    for (const Definition& def : program_.definitions) {
      if (const auto* data = std::get_if<DataDefinition>(&def)) {
        if (!types.insert(data->type_name).second) {
          report(DiagnosticKind::duplicate_type, data->type_name, data->meta.span,
                 "data type declared more than once");
        }
        for (const DataConstructor& ctor : data->constructors) {
          if (!arities_.emplace(ctor.name, ctor.field_types.size()).second) {
            report(DiagnosticKind::duplicate_constructor, ctor.name, ctor.meta.span,
                   "constructor declared more than once");
          }
        }
      } else {
        const auto& fn = std::get<FunctionDefinition>(def);
        if (!functions.insert(fn.name).second) {
          report(DiagnosticKind::duplicate_function, fn.name, fn.meta.span,
                 "function defined more than once");
        }
      }
    }
    const SugarUsage usage = sugar_usage(program_);
    if (usage.tuples) arities_.emplace(Name(kPairConstructor), 2);
    if (usage.lists) {
      arities_.emplace(Name(kConsConstructor), 2);
      arities_.emplace(Name(kNilConstructor), 0);
    }
    const auto zero = arities_.find("zero");
    const auto successor = arities_.find("successor");
    naturals_ok_ = zero != arities_.end() && zero->second == 0 && successor != arities_.end() &&
                   successor->second == 1;
  }

  void constructor(const Name& name, std::size_t arity, SourceSpan span) {
    const auto it = arities_.find(name);
    if (it == arities_.end()) {
      report(DiagnosticKind::undefined_constructor, name, span, "constructor is not declared");
    } else if (it->second != arity) {
      report(DiagnosticKind::arity_mismatch, name, span,
             "expects " + std::to_string(it->second) + " argument(s), given " +
                 std::to_string(arity));
    }
  }

  void function(const FunctionRef& ref, SourceSpan span) {
    if (!program_.find_function(ref.name)) {
      report(DiagnosticKind::undefined_function, ref.name, span, "function is not defined");
    }
  }

  // Shared structural checks; `scope` is only consulted for patterns in term
  // position (where variables are uses rather than binders).
  void pattern_shape(const Pattern& p, const std::set<Name>* uses_scope) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, VariablePattern>) {
            if (uses_scope && !uses_scope->contains(node.name)) {
              report(DiagnosticKind::unbound_variable, node.name, p.meta.span,
                     "variable is not bound here");
            }
          } else if constexpr (std::is_same_v<T, ConstructorPattern>) {
            constructor(node.name, node.args.size(), p.meta.span);
            for (const Pattern& arg : node.args) pattern_shape(arg, uses_scope);
          } else if constexpr (std::is_same_v<T, TuplePattern>) {
            pattern_shape(*node.first, uses_scope);
            pattern_shape(*node.second, uses_scope);
          } else if constexpr (std::is_same_v<T, ConsPattern>) {
            pattern_shape(*node.head, uses_scope);
            pattern_shape(*node.tail, uses_scope);
          } else if constexpr (std::is_same_v<T, NaturalPattern>) {
            if (!naturals_ok_) {
              report(DiagnosticKind::naturals_undeclared, std::to_string(node.value), p.meta.span,
                     "natural number literals need [zero] and [successor _] constructors");
            }
          }
        },
        p.node);
  }

  /// Checks a binder and adds its variables to `scope`.
  void binding_pattern(const Pattern& p, std::set<Name>& scope) {
    pattern_shape(p, nullptr);
    std::set<Name> seen;
    for (const Name& name : bound_variables(p)) {
      if (!seen.insert(name).second) {
        report(DiagnosticKind::non_linear_pattern, name, p.meta.span,
               "variable occurs more than once in one pattern");
      }
      scope.insert(name);
    }
  }

  void term(const Term& t, const std::set<Name>& scope) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, PatternTerm>) {
            pattern_shape(node.pattern, &scope);
          } else if constexpr (std::is_same_v<T, Application>) {
            function(node.callee, t.meta.span);
            pattern_shape(node.argument, &scope);
          } else if constexpr (std::is_same_v<T, Case>) {
            term(*node.scrutinee, scope);
            for (const CaseBranch& branch : node.branches) {
              std::set<Name> inner = scope;
              binding_pattern(branch.pattern, inner);
              term(branch.body, inner);
            }
          } else if constexpr (std::is_same_v<T, ConstructorTerm>) {
            constructor(node.name, node.args.size(), t.meta.span);
            for (const Term& arg : node.args) term(arg, scope);
          } else if constexpr (std::is_same_v<T, TupleTerm>) {
            term(*node.first, scope);
            term(*node.second, scope);
          } else if constexpr (std::is_same_v<T, ConsTerm>) {
            term(*node.head, scope);
            term(*node.tail, scope);
          } else if constexpr (std::is_same_v<T, GeneralApplication>) {
            function(node.callee, t.meta.span);
            term(*node.argument, scope);
          } else if constexpr (std::is_same_v<T, Let>) {
            term(*node.bound, scope);
            std::set<Name> inner = scope;
            binding_pattern(node.pattern, inner);
            term(*node.body, inner);
          }
        },
        t.node);
  }

  const Program& program_;
  std::map<Name, std::size_t> arities_;
  bool naturals_ok_ = false;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

SugarUsage sugar_usage(const Program& program) {
  SugarScan scan;
  for (const FunctionDefinition* fn : program.functions()) {
    scan.pattern(fn->parameter);
    scan.term(fn->body);
  }
  return scan.usage;
}

std::vector<Diagnostic> validate(const Program& program) { return Validator(program).run(); }

std::string source_location(std::string_view source, std::string_view path, std::size_t offset) {
  std::string out;
  if (!path.empty()) out += std::string(path) + ":";
  if (!source.empty()) {
    offset = std::min(offset, source.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (source[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    out += std::to_string(line) + ":" + std::to_string(column) + ":";
  }
  return out;
}

std::string format_diagnostic(const Diagnostic& diagnostic, std::string_view source,
                              std::string_view path) {
  std::string out = source_location(source, path, diagnostic.span.begin);
  if (!out.empty()) out += " ";
  out += std::string(to_string(diagnostic.kind)) + " '" + diagnostic.subject + "': " +
         diagnostic.message;
  return out;
}

}  // namespace jeopardy
