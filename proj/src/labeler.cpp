#include "jeopardy/labeler.hpp"

#include <stdexcept>
#include <type_traits>

namespace jeopardy {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::variable:
      return "variable";
    case NodeKind::constructor:
      return "constructor";
    case NodeKind::application:
      return "application";
    case NodeKind::case_:
      return "case";
  }
  return "unknown";
}

namespace {

using Scope = std::map<Name, Label>;

class Annotator {
 public:
  explicit Annotator(std::vector<LabelInfo>& index) : index_(index) {}

  void function(FunctionDefinition& fn) {
    current_ = fn.name;
    Scope scope;
    binder(fn.parameter, scope);
    term(fn.body, scope);
  }

 private:
  Label next(NodeKind kind, SourceSpan span) {
    const Label label = Label::numbered(static_cast<std::uint32_t>(index_.size()));
    index_.push_back(LabelInfo{current_, kind, span, {}, std::nullopt});
    return label;
  }

  // A pattern that binds variables into `scope`.
  void binder(Pattern& p, Scope& scope) {
    if (auto* var = std::get_if<VariablePattern>(&p.node)) {
      p.label = next(NodeKind::variable, p.meta.span);
      LabelInfo& info = index_.back();
      info.variable = var->name;
      if (var->name != kWildcard) {
        info.binder = p.label;
        scope.insert_or_assign(var->name, *p.label);
      }
      return;
    }
    auto& ctor = std::get<ConstructorPattern>(p.node);
    p.label = next(NodeKind::constructor, p.meta.span);
    for (Pattern& arg : ctor.args) binder(arg, scope);
  }

  // A pattern in term position: variables refer to existing binders.
  void use(Pattern& p, const Scope& scope) {
    if (auto* var = std::get_if<VariablePattern>(&p.node)) {
      p.label = next(NodeKind::variable, p.meta.span);
      LabelInfo& info = index_.back();
      info.variable = var->name;
      if (const auto it = scope.find(var->name); it != scope.end()) info.binder = it->second;
      return;
    }
    auto* ctor = std::get_if<ConstructorPattern>(&p.node);
    if (!ctor) throw std::invalid_argument("annotate expects a desugared program");
    p.label = next(NodeKind::constructor, p.meta.span);
    for (Pattern& arg : ctor->args) use(arg, scope);
  }

  void term(Term& t, const Scope& scope) {
    if (auto* pt = std::get_if<PatternTerm>(&t.node)) {
      use(pt->pattern, scope);
      return;
    }
    if (auto* app = std::get_if<Application>(&t.node)) {
      t.label = next(NodeKind::application, t.meta.span);
      use(app->argument, scope);
      return;
    }
    auto* cs = std::get_if<Case>(&t.node);
    if (!cs) throw std::invalid_argument("annotate expects a desugared program");
    t.label = next(NodeKind::case_, t.meta.span);
    term(*cs->scrutinee, scope);
    for (CaseBranch& branch : cs->branches) {
      Scope inner = scope;
      binder(branch.pattern, inner);
      term(branch.body, inner);
    }
  }

  std::vector<LabelInfo>& index_;
  Name current_;
};

void collect(const Pattern& p, LabelSet& out) {
  if (p.label) out.insert(*p.label);
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ConstructorPattern>) {
          for (const Pattern& arg : node.args) collect(arg, out);
        } else if constexpr (std::is_same_v<T, TuplePattern>) {
          collect(*node.first, out);
          collect(*node.second, out);
        } else if constexpr (std::is_same_v<T, ConsPattern>) {
          collect(*node.head, out);
          collect(*node.tail, out);
        }
      },
      p.node);
}

void collect(const Term& t, LabelSet& out) {
  if (t.label) out.insert(*t.label);
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, PatternTerm>) {
          collect(node.pattern, out);
        } else if constexpr (std::is_same_v<T, Application>) {
          collect(node.argument, out);
        } else if constexpr (std::is_same_v<T, Case>) {
          collect(*node.scrutinee, out);
          for (const CaseBranch& branch : node.branches) {
            collect(branch.pattern, out);
            collect(branch.body, out);
          }
        } else if constexpr (std::is_same_v<T, ConstructorTerm>) {
          for (const Term& arg : node.args) collect(arg, out);
        } else if constexpr (std::is_same_v<T, TupleTerm>) {
          collect(*node.first, out);
          collect(*node.second, out);
        } else if constexpr (std::is_same_v<T, ConsTerm>) {
          collect(*node.head, out);
          collect(*node.tail, out);
        } else if constexpr (std::is_same_v<T, GeneralApplication>) {
          collect(*node.argument, out);
        } else if constexpr (std::is_same_v<T, Let>) {
          collect(node.pattern, out);
          collect(*node.bound, out);
          collect(*node.body, out);
        }
      },
      t.node);
}

}  // namespace

LabelSet labels_of(const Pattern& pattern) {
  LabelSet out;
  collect(pattern, out);
  return out;
}

LabelSet labels_of(const Term& term) {
  LabelSet out;
  collect(term, out);
  return out;
}

const FunctionDefinition* LabeledProgram::function(std::string_view name) const {
  const auto it = function_positions_.find(name);
  if (it == function_positions_.end()) return nullptr;
  return &std::get<FunctionDefinition>(program_.definitions[it->second]);
}

const FunctionDefinition& LabeledProgram::main_function() const {
  const FunctionDefinition* fn = function(program_.main.name);
  if (!fn) throw std::out_of_range("main function '" + program_.main.name + "' is not defined");
  return *fn;
}

const LabelSet& LabeledProgram::labels_of_function(std::string_view name) const {
  const auto it = function_labels_.find(name);
  if (it == function_labels_.end()) {
    throw std::out_of_range("function '" + std::string(name) + "' is not defined");
  }
  return it->second;
}

LabeledProgram annotate(const Program& program) {
  LabeledProgram out;
  out.program_ = program;
  Annotator annotator(out.index_);
  for (std::size_t i = 0; i < out.program_.definitions.size(); ++i) {
    auto* fn = std::get_if<FunctionDefinition>(&out.program_.definitions[i]);
    if (!fn) continue;
    const auto first = static_cast<std::uint32_t>(out.index_.size());
    annotator.function(*fn);
    const auto last = static_cast<std::uint32_t>(out.index_.size());
    out.function_positions_.emplace(fn->name, i);
    out.function_labels_.emplace(fn->name, LabelSet::range(first, last));
  }
  return out;
}

}  // namespace jeopardy
