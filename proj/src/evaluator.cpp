#include "jeopardy/evaluator.hpp"

#include <memory>

#include "jeopardy/desugar.hpp"
#include "jeopardy/parser.hpp"
#include "jeopardy/printer.hpp"

namespace jeopardy {

std::string_view to_string(RuntimeErrorKind kind) {
  switch (kind) {
    case RuntimeErrorKind::no_branch_matched:
      return "NoBranchMatched";
    case RuntimeErrorKind::inverted_call:
      return "InvertedCall";
    case RuntimeErrorKind::call_limit_exceeded:
      return "CallLimitExceeded";
    case RuntimeErrorKind::depth_limit_exceeded:
      return "DepthLimitExceeded";
    case RuntimeErrorKind::unbound_variable:
      return "UnboundVariable";
  }
  return "RuntimeError";
}

namespace {

std::string runtime_message(RuntimeErrorKind kind, std::optional<Label> label,
                            const std::string& detail) {
  std::string out(to_string(kind));
  if (label) out += " at label " + label->to_string();
  if (!detail.empty()) out += ": " + detail;
  return out;
}

}  // namespace

RuntimeError::RuntimeError(RuntimeErrorKind kind, std::optional<Label> label,
                           const std::string& detail)
    : std::runtime_error(runtime_message(kind, label, detail)), kind_(kind), label_(label) {}

bool match_pattern(const Pattern& pattern, const Value& value, Environment& env) {
  if (const auto* var = std::get_if<VariablePattern>(&pattern.node)) {
    if (var->name != kWildcard) env.insert_or_assign(var->name, value);
    return true;
  }
  const auto* ctor = std::get_if<ConstructorPattern>(&pattern.node);
  if (!ctor) throw std::invalid_argument("match_pattern expects a core pattern");
  if (ctor->name != value.constructor || ctor->args.size() != value.args.size()) return false;
  for (std::size_t i = 0; i < ctor->args.size(); ++i) {
    if (!match_pattern(ctor->args[i], value.args[i], env)) return false;
  }
  return true;
}

std::optional<Environment> match_pattern(const Pattern& pattern, const Value& value) {
  Environment env;
  if (!match_pattern(pattern, value, env)) return std::nullopt;
  return env;
}

namespace {

// Runtime values share structure so that binding and passing them is cheap.
struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Name constructor;
  std::vector<NodePtr> args;
};

NodePtr to_node(const Value& value) {
  auto out = std::make_shared<Node>();
  out->constructor = value.constructor;
  out->args.reserve(value.args.size());
  for (const Value& arg : value.args) out->args.push_back(to_node(arg));
  return out;
}

Value to_value(const Node& node) {
  Value out{node.constructor, {}};
  out.args.reserve(node.args.size());
  for (const NodePtr& arg : node.args) out.args.push_back(to_value(*arg));
  return out;
}

using Bindings = std::map<Name, NodePtr, std::less<>>;

bool match(const Pattern& pattern, const NodePtr& value, Bindings& env) {
  if (const auto* var = std::get_if<VariablePattern>(&pattern.node)) {
    if (var->name != kWildcard) env.insert_or_assign(var->name, value);
    return true;
  }
  const auto* ctor = std::get_if<ConstructorPattern>(&pattern.node);
  if (!ctor) throw std::invalid_argument("match_pattern expects a core pattern");
  if (ctor->name != value->constructor || ctor->args.size() != value->args.size()) return false;
  for (std::size_t i = 0; i < ctor->args.size(); ++i) {
    if (!match(ctor->args[i], value->args[i], env)) return false;
  }
  return true;
}

class Evaluator {
 public:
  Evaluator(const LabeledProgram& program, const EventSink& sink, const EvalOptions& options)
      : program_(program), sink_(sink), options_(options) {}

  NodePtr instantiate(const Pattern& p, const Bindings& env) const {
    if (const auto* var = std::get_if<VariablePattern>(&p.node)) {
      const auto it = env.find(var->name);
      if (it == env.end()) {
        throw RuntimeError(RuntimeErrorKind::unbound_variable, p.label, "'" + var->name + "'");
      }
      return it->second;
    }
    const auto& ctor = std::get<ConstructorPattern>(p.node);
    auto out = std::make_shared<Node>();
    out->constructor = ctor.name;
    out->args.reserve(ctor.args.size());
    for (const Pattern& arg : ctor.args) out->args.push_back(instantiate(arg, env));
    return out;
  }

  const FunctionDefinition& enter(const FunctionRef& callee, std::string_view caller,
                                  const NodePtr& argument, Label site) {
    if (callee.inversions % 2 != 0) {
      throw RuntimeError(RuntimeErrorKind::inverted_call, site,
                         "cannot run " + print_function_ref(callee) + " backwards");
    }
    if (++calls_ > options_.max_calls) {
      throw RuntimeError(RuntimeErrorKind::call_limit_exceeded, site,
                         "more than " + std::to_string(options_.max_calls) + " calls");
    }
    const FunctionDefinition* fn = program_.function(callee.name);
    if (!fn) throw std::out_of_range("undefined function '" + callee.name + "'");
    if (sink_) sink_(CallEvent{Name(caller), callee.name, to_value(*argument), site});
    return *fn;
  }

  Bindings bind_parameter(const FunctionDefinition& fn, const NodePtr& argument) const {
    Bindings env;
    if (!match(fn.parameter, argument, env)) {
      throw RuntimeError(RuntimeErrorKind::no_branch_matched, fn.parameter.label,
                         "argument " + print_value(to_value(*argument)) +
                             " does not match the parameter of " + fn.name);
    }
    return env;
  }

  NodePtr call(const FunctionRef& callee, std::string_view caller, const NodePtr& argument,
               Label site) {
    const FunctionDefinition& fn = enter(callee, caller, argument, site);
    return eval(bind_parameter(fn, argument), fn.body, fn.name, 0);
  }

  // Tail positions (branch bodies, callee bodies) loop instead of recursing.
  NodePtr eval(Bindings env, const Term& start, std::string_view start_function,
               std::size_t depth) {
    if (depth > options_.max_depth) {
      throw RuntimeError(RuntimeErrorKind::depth_limit_exceeded, label_of(start),
                         "nesting deeper than " + std::to_string(options_.max_depth));
    }
    const Term* t = &start;
    Name current(start_function);
    while (true) {
      if (const auto* pt = std::get_if<PatternTerm>(&t->node)) return instantiate(pt->pattern, env);

      if (const auto* app = std::get_if<Application>(&t->node)) {
        const NodePtr argument = instantiate(app->argument, env);
        const Label site = t->label.value_or(Label::input());
        const FunctionDefinition& fn = enter(app->callee, current, argument, site);
        env = bind_parameter(fn, argument);
        current = fn.name;
        t = &fn.body;
        continue;
      }

      const auto* cs = std::get_if<Case>(&t->node);
      if (!cs) throw std::invalid_argument("evaluation expects a desugared program");
      const NodePtr scrutinee = eval(env, *cs->scrutinee, current, depth + 1);
      const CaseBranch* taken = nullptr;
      for (const CaseBranch& branch : cs->branches) {
        Bindings extended = env;
        if (match(branch.pattern, scrutinee, extended)) {
          env = std::move(extended);
          taken = &branch;
          break;
        }
      }
      if (!taken) {
        throw RuntimeError(RuntimeErrorKind::no_branch_matched, t->label,
                           "no branch matches " + print_value(to_value(*scrutinee)));
      }
      t = &taken->body;
    }
  }

 private:
  const LabeledProgram& program_;
  const EventSink& sink_;
  const EvalOptions& options_;
  std::size_t calls_ = 0;
};

}  // namespace

Value eval_term(const LabeledProgram& program, const Environment& env, const Term& term,
                std::string_view current, const EventSink& sink, const EvalOptions& options) {
  Bindings bindings;
  for (const auto& [name, value] : env) bindings.emplace(name, to_node(value));
  Evaluator evaluator(program, sink, options);
  return to_value(*evaluator.eval(std::move(bindings), term, current, 0));
}

RunResult run_main(const LabeledProgram& program, const Value& input, const EvalOptions& options) {
  RunResult out;
  EventSink sink;
  if (options.record_trace) {
    sink = [&out](const CallEvent& event) { out.trace.push_back(event); };
  }
  Evaluator evaluator(program, sink, options);
  out.value = to_value(*evaluator.call(program.program().main, kTopCaller, to_node(input),
                                       Label::input()));
  return out;
}

ValueError::ValueError(Diagnostic diagnostic)
    : std::runtime_error(diagnostic.message), diagnostic_(std::move(diagnostic)) {}

std::optional<Value> to_value(const Pattern& pattern) {
  const auto* ctor = std::get_if<ConstructorPattern>(&pattern.node);
  if (!ctor) return std::nullopt;
  Value out{ctor->name, {}};
  for (const Pattern& arg : ctor->args) {
    std::optional<Value> inner = to_value(arg);
    if (!inner) return std::nullopt;
    out.args.push_back(std::move(*inner));
  }
  return out;
}

namespace {

void check_declared(const Pattern& p, const Program& program) {
  const auto* ctor = std::get_if<ConstructorPattern>(&p.node);
  if (!ctor) {
    const auto& var = std::get<VariablePattern>(p.node);
    throw ValueError(Diagnostic{DiagnosticKind::unbound_variable, var.name, p.meta.span,
                                "input values must be closed"});
  }
  const DataConstructor* decl = program.find_constructor(ctor->name);
  if (!decl) {
    throw ValueError(Diagnostic{DiagnosticKind::undefined_constructor, ctor->name, p.meta.span,
                                "constructor is not declared"});
  }
  if (decl->field_types.size() != ctor->args.size()) {
    throw ValueError(Diagnostic{DiagnosticKind::arity_mismatch, ctor->name, p.meta.span,
                                "expected " + std::to_string(decl->field_types.size()) +
                                    " argument(s), found " + std::to_string(ctor->args.size())});
  }
  for (const Pattern& arg : ctor->args) check_declared(arg, program);
}

}  // namespace

Value parse_value(std::string_view text, const Program& program) {
  const Pattern core = desugar_pattern(parse_pattern(text));
  check_declared(core, program);
  return *to_value(core);
}

}  // namespace jeopardy
