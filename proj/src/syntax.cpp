#include "jeopardy/syntax.hpp"

#include <type_traits>

namespace jeopardy {

Pattern make_variable(Name name, SourceSpan span) {
  return Pattern{VariablePattern{std::move(name)}, std::nullopt, NodeMeta{span}};
}

Pattern make_constructor(Name name, std::vector<Pattern> args, SourceSpan span) {
  return Pattern{ConstructorPattern{std::move(name), std::move(args)}, std::nullopt, NodeMeta{span}};
}

bool is_core(const Pattern& pattern) {
  if (std::holds_alternative<VariablePattern>(pattern.node)) return true;
  if (const auto* ctor = std::get_if<ConstructorPattern>(&pattern.node)) {
    for (const Pattern& arg : ctor->args) {
      if (!is_core(arg)) return false;
    }
    return true;
  }
  return false;
}

namespace {

void collect_bound(const Pattern& pattern, std::vector<Name>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, VariablePattern>) {
          if (node.name != kWildcard) out.push_back(node.name);
        } else if constexpr (std::is_same_v<T, ConstructorPattern>) {
          for (const Pattern& arg : node.args) collect_bound(arg, out);
        } else if constexpr (std::is_same_v<T, TuplePattern>) {
          collect_bound(*node.first, out);
          collect_bound(*node.second, out);
        } else if constexpr (std::is_same_v<T, ConsPattern>) {
          collect_bound(*node.head, out);
          collect_bound(*node.tail, out);
        }
      },
      pattern.node);
}

}  // namespace

std::vector<Name> bound_variables(const Pattern& pattern) {
  std::vector<Name> out;
  collect_bound(pattern, out);
  return out;
}

Term make_pattern_term(Pattern pattern) {
  SourceSpan span = pattern.meta.span;
  return Term{PatternTerm{std::move(pattern)}, std::nullopt, NodeMeta{span}};
}

Term make_application(FunctionRef callee, Pattern argument, SourceSpan span) {
  return Term{Application{std::move(callee), std::move(argument)}, std::nullopt, NodeMeta{span}};
}

Term make_case(Term scrutinee, std::optional<Name> type, std::vector<CaseBranch> branches,
               SourceSpan span) {
  return Term{Case{std::move(scrutinee), std::move(type), std::move(branches)}, std::nullopt,
              NodeMeta{span}};
}

std::optional<Label> label_of(const Term& term) {
  if (const auto* pt = std::get_if<PatternTerm>(&term.node)) return pt->pattern.label;
  return term.label;
}

bool is_core(const Term& term) {
  if (const auto* pt = std::get_if<PatternTerm>(&term.node)) return is_core(pt->pattern);
  if (const auto* app = std::get_if<Application>(&term.node)) return is_core(app->argument);
  if (const auto* cs = std::get_if<Case>(&term.node)) {
    if (!is_core(*cs->scrutinee)) return false;
    for (const CaseBranch& branch : cs->branches) {
      if (!is_core(branch.pattern) || !is_core(branch.body)) return false;
    }
    return true;
  }
  return false;
}

const FunctionDefinition* Program::find_function(std::string_view name) const {
  for (const Definition& def : definitions) {
    if (const auto* fn = std::get_if<FunctionDefinition>(&def); fn && fn->name == name) return fn;
  }
  return nullptr;
}

const DataConstructor* Program::find_constructor(std::string_view name) const {
  for (const Definition& def : definitions) {
    if (const auto* data = std::get_if<DataDefinition>(&def)) {
      for (const DataConstructor& ctor : data->constructors) {
        if (ctor.name == name) return &ctor;
      }
    }
  }
  return nullptr;
}

std::vector<const FunctionDefinition*> Program::functions() const {
  std::vector<const FunctionDefinition*> out;
  for (const Definition& def : definitions) {
    if (const auto* fn = std::get_if<FunctionDefinition>(&def)) out.push_back(fn);
  }
  return out;
}

std::vector<const DataDefinition*> Program::data_types() const {
  std::vector<const DataDefinition*> out;
  for (const Definition& def : definitions) {
    if (const auto* data = std::get_if<DataDefinition>(&def)) out.push_back(data);
  }
  return out;
}

bool is_core(const Program& program) {
  for (const FunctionDefinition* fn : program.functions()) {
    if (!is_core(fn->parameter) || !is_core(fn->body)) return false;
  }
  return true;
}

Value natural_value(std::uint32_t n) {
  Value value{"zero", {}};
  for (std::uint32_t i = 0; i < n; ++i) {
    Value next{"successor", {}};
    next.args.push_back(std::move(value));
    value = std::move(next);
  }
  return value;
}

Value pair_value(Value first, Value second) {
  Value out{"pair", {}};
  out.args.reserve(2);
  out.args.push_back(std::move(first));
  out.args.push_back(std::move(second));
  return out;
}

}  // namespace jeopardy
