#include "jeopardy/printer.hpp"

#include <type_traits>

namespace jeopardy {

namespace {

// Where a term appears decides how much of it needs parentheses.
enum class TermContext {
  tail,       // nothing follows that a case or let could swallow
  open,       // case/let need parentheses
  scrutinee,  // additionally, cons needs parentheses (`: τ of` is an ascription)
  cons_head,  // only applications and atoms stay bare
  atom,       // only atoms stay bare
};

enum class PatternContext { top, atom };

bool is_atomic(const Pattern& p) { return !std::holds_alternative<ConsPattern>(p.node); }

class Printer {
 public:
  explicit Printer(const PrintOptions& options) : options_(options) {}

  std::string take() { return std::move(out_); }

  void label(const std::optional<Label>& label) {
    if (options_.show_labels && label) out_ += "{-" + label->to_string() + "-}";
  }

  void pattern(const Pattern& p, PatternContext ctx) {
    const bool parens = ctx == PatternContext::atom && !is_atomic(p);
    if (parens) out_ += "(";
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, VariablePattern>) {
            out_ += node.name;
          } else if constexpr (std::is_same_v<T, ConstructorPattern>) {
            out_ += "[" + node.name;
            for (const Pattern& arg : node.args) {
              out_ += " ";
              pattern(arg, PatternContext::atom);
            }
            out_ += "]";
          } else if constexpr (std::is_same_v<T, TuplePattern>) {
            out_ += "(";
            pattern(*node.first, PatternContext::top);
            out_ += ", ";
            pattern(*node.second, PatternContext::top);
            out_ += ")";
          } else if constexpr (std::is_same_v<T, ConsPattern>) {
            pattern(*node.head, PatternContext::atom);
            out_ += " : ";
            pattern(*node.tail, PatternContext::top);
          } else if constexpr (std::is_same_v<T, NilPattern>) {
            out_ += "[]";
          } else if constexpr (std::is_same_v<T, NaturalPattern>) {
            out_ += std::to_string(node.value);
          }
        },
        p.node);
    if (parens) out_ += ")";
    label(p.label);
  }

  void function_ref(const FunctionRef& ref) {
    for (unsigned i = 0; i < ref.inversions; ++i) out_ += "(invert ";
    out_ += ref.name;
    for (unsigned i = 0; i < ref.inversions; ++i) out_ += ")";
  }

  void term(const Term& t, TermContext ctx, int indent) {
    const bool parens = needs_parens(t, ctx);
    if (parens) out_ += "(";
    std::visit([&](const auto& node) { emit(t, node, ctx, indent); }, t.node);
    if (parens) out_ += ")";
  }

  void newline(int indent) {
    out_ += "\n";
    out_.append(static_cast<std::size_t>(indent), ' ');
  }

 private:
  static bool needs_parens(const Term& t, TermContext ctx) {
    return std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Case> || std::is_same_v<T, Let>) {
            return ctx != TermContext::tail;
          } else if constexpr (std::is_same_v<T, ConsTerm>) {
            return ctx == TermContext::scrutinee || ctx == TermContext::cons_head ||
                   ctx == TermContext::atom;
          } else if constexpr (std::is_same_v<T, Application> ||
                               std::is_same_v<T, GeneralApplication>) {
            return ctx == TermContext::atom;
          } else if constexpr (std::is_same_v<T, PatternTerm>) {
            // A cons pattern in term position behaves like a cons term.
            return !is_atomic(node.pattern) &&
                   (ctx == TermContext::scrutinee || ctx == TermContext::cons_head ||
                    ctx == TermContext::atom);
          } else {
            return false;
          }
        },
        t.node);
  }

  void emit(const Term&, const PatternTerm& node, TermContext, int) {
    pattern(node.pattern, PatternContext::top);
  }

  void emit(const Term& t, const Application& node, TermContext, int) {
    function_ref(node.callee);
    label(t.label);
    out_ += " ";
    pattern(node.argument, PatternContext::atom);
  }

  void emit(const Term& t, const GeneralApplication& node, TermContext, int indent) {
    function_ref(node.callee);
    label(t.label);
    out_ += " ";
    term(*node.argument, TermContext::atom, indent);
  }

  void emit(const Term& t, const Case& node, TermContext ctx, int indent) {
    out_ += "case";
    label(t.label);
    out_ += " ";
    term(*node.scrutinee, TermContext::scrutinee, indent + 2);
    if (node.scrutinee_type) out_ += " : " + *node.scrutinee_type;
    out_ += " of";
    for (std::size_t i = 0; i < node.branches.size(); ++i) {
      const CaseBranch& branch = node.branches[i];
      const bool last = i + 1 == node.branches.size();
      newline(indent);
      out_ += "; ";
      pattern(branch.pattern, PatternContext::top);
      out_ += " ->";
      const TermContext body_ctx =
          last && ctx == TermContext::tail ? TermContext::tail : TermContext::open;
      const bool body_is_block = std::holds_alternative<Case>(branch.body.node) ||
                                 std::holds_alternative<Let>(branch.body.node);
      if (body_is_block && body_ctx == TermContext::tail) {
        newline(indent + 2);
      } else {
        out_ += " ";
      }
      term(branch.body, body_ctx, indent + 2);
    }
  }

  void emit(const Term& t, const ConstructorTerm& node, TermContext, int indent) {
    out_ += "[" + node.name;
    for (const Term& arg : node.args) {
      out_ += " ";
      term(arg, TermContext::atom, indent);
    }
    out_ += "]";
    label(t.label);
  }

  void emit(const Term& t, const TupleTerm& node, TermContext, int indent) {
    out_ += "(";
    term(*node.first, TermContext::open, indent);
    out_ += ", ";
    term(*node.second, TermContext::open, indent);
    out_ += ")";
    label(t.label);
  }

  void emit(const Term& t, const ConsTerm& node, TermContext, int indent) {
    term(*node.head, TermContext::cons_head, indent);
    out_ += " :";
    label(t.label);
    out_ += " ";
    term(*node.tail, TermContext::open, indent);
  }

  void emit(const Term& t, const Let& node, TermContext ctx, int indent) {
    out_ += "let";
    label(t.label);
    out_ += " ";
    pattern(node.pattern, PatternContext::atom);
    if (node.type) out_ += " : " + *node.type;
    out_ += " = ";
    term(*node.bound, TermContext::open, indent + 2);
    out_ += " in";
    newline(indent);
    term(*node.body, ctx == TermContext::tail ? TermContext::tail : TermContext::open, indent);
  }

  const PrintOptions& options_;
  std::string out_;
};

void print_parameter(Printer& printer, std::string& out, const FunctionDefinition& fn) {
  if (fn.parameter_type) {
    out += "(";
    printer.pattern(fn.parameter, PatternContext::atom);
    out += printer.take();
    out += " : " + *fn.parameter_type + ")";
    return;
  }
  // An untyped cons parameter `(h : t)` would read back as a typed one.
  const bool extra = !is_atomic(fn.parameter);
  if (extra) out += "(";
  printer.pattern(fn.parameter, PatternContext::atom);
  out += printer.take();
  if (extra) out += ")";
}

}  // namespace

std::string print_function_ref(const FunctionRef& ref) {
  Printer printer(PrintOptions{});
  printer.function_ref(ref);
  return printer.take();
}

std::string print_pattern(const Pattern& pattern, const PrintOptions& options) {
  Printer printer(options);
  printer.pattern(pattern, PatternContext::top);
  return printer.take();
}

std::string print_term(const Term& term, const PrintOptions& options) {
  Printer printer(options);
  printer.term(term, TermContext::tail, 2);
  return printer.take();
}

std::string print_value(const Value& value) {
  std::string out = "[" + value.constructor;
  for (const Value& arg : value.args) out += " " + print_value(arg);
  return out + "]";
}

std::string print_program(const Program& program, const PrintOptions& options) {
  std::string out;
  for (const Definition& def : program.definitions) {
    if (const auto* data = std::get_if<DataDefinition>(&def)) {
      out += "data " + data->type_name + " =";
      for (const DataConstructor& ctor : data->constructors) {
        out += " [" + ctor.name;
        for (const Name& field : ctor.field_types) out += " " + field;
        out += "]";
      }
      out += ".\n\n";
      continue;
    }
    const auto& fn = std::get<FunctionDefinition>(def);
    Printer printer(options);
    out += fn.name + " ";
    print_parameter(printer, out, fn);
    if (fn.return_type) out += " : " + *fn.return_type;
    out += " =";
    const bool block = std::holds_alternative<Case>(fn.body.node) ||
                       std::holds_alternative<Let>(fn.body.node);
    if (block) {
      printer.newline(2);
    } else {
      out += " ";
    }
    printer.term(fn.body, TermContext::tail, 2);
    out += printer.take();
    out += ".\n\n";
  }
  out += "main " + print_function_ref(program.main) + ".\n";
  return out;
}

}  // namespace jeopardy
