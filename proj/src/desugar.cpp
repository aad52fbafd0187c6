#include "jeopardy/desugar.hpp"

#include <map>
#include <type_traits>

#include "jeopardy/validate.hpp"

namespace jeopardy {

namespace {

class Desugarer {
 public:
  explicit Desugarer(const Program& program) : program_(program) {
    for (const DataDefinition* data : program.data_types()) {
      for (const DataConstructor& ctor : data->constructors) {
        field_types_.emplace(ctor.name, ctor.field_types);
      }
    }
  }

  void reset_fresh() { next_fresh_ = 0; }

  Name fresh() { return std::string(kGeneratedPrefix) + "v" + std::to_string(next_fresh_++); }

  static Pattern pattern(const Pattern& p) {
    const NodeMeta meta = p.meta;
    return std::visit(
        [&](const auto& node) -> Pattern {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, VariablePattern>) {
            return p;
          } else if constexpr (std::is_same_v<T, ConstructorPattern>) {
            std::vector<Pattern> args;
            args.reserve(node.args.size());
            for (const Pattern& arg : node.args) args.push_back(pattern(arg));
            return make_constructor(node.name, std::move(args), meta.span);
          } else if constexpr (std::is_same_v<T, TuplePattern>) {
            std::vector<Pattern> args;
            args.push_back(pattern(*node.first));
            args.push_back(pattern(*node.second));
            return make_constructor(Name(kPairConstructor), std::move(args), meta.span);
          } else if constexpr (std::is_same_v<T, ConsPattern>) {
            std::vector<Pattern> args;
            args.push_back(pattern(*node.head));
            args.push_back(pattern(*node.tail));
            return make_constructor(Name(kConsConstructor), std::move(args), meta.span);
          } else if constexpr (std::is_same_v<T, NilPattern>) {
            return make_constructor(Name(kNilConstructor), {}, meta.span);
          } else {
            Pattern value = make_constructor("zero", {}, meta.span);
            for (std::uint32_t i = 0; i < node.value; ++i) {
              std::vector<Pattern> args;
              args.push_back(std::move(value));
              value = make_constructor("successor", std::move(args), meta.span);
            }
            return value;
          }
        },
        p.node);
  }

  Term term(const Term& t) {
    const SourceSpan span = t.meta.span;
    return std::visit(
        [&](const auto& node) -> Term {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, PatternTerm>) {
            return make_pattern_term(pattern(node.pattern));
          } else if constexpr (std::is_same_v<T, Application>) {
            return make_application(node.callee, pattern(node.argument), span);
          } else if constexpr (std::is_same_v<T, Case>) {
            Term scrutinee = term(*node.scrutinee);
            std::vector<CaseBranch> branches;
            for (const CaseBranch& branch : node.branches) {
              branches.push_back(CaseBranch{pattern(branch.pattern), term(branch.body)});
            }
            return make_case(std::move(scrutinee), node.scrutinee_type, std::move(branches), span);
          } else if constexpr (std::is_same_v<T, ConstructorTerm>) {
            std::vector<const Term*> args;
            for (const Term& arg : node.args) args.push_back(&arg);
            return hoist(node.name, args, field_types_of(node.name), span);
          } else if constexpr (std::is_same_v<T, TupleTerm>) {
            return hoist(Name(kPairConstructor), {&*node.first, &*node.second},
                         field_types_of(kPairConstructor), span);
          } else if constexpr (std::is_same_v<T, ConsTerm>) {
            return hoist(Name(kConsConstructor), {&*node.head, &*node.tail},
                         field_types_of(kConsConstructor), span);
          } else if constexpr (std::is_same_v<T, GeneralApplication>) {
            if (const auto* pt = std::get_if<PatternTerm>(&node.argument->node)) {
              return make_application(node.callee, pattern(pt->pattern), span);
            }
            Term bound = term(*node.argument);
            const Name w = fresh();
            std::vector<CaseBranch> branches;
            branches.push_back(
                CaseBranch{make_variable(w, span), make_application(node.callee, make_variable(w, span), span)});
            return make_case(std::move(bound), argument_type(node.callee), std::move(branches),
                             span);
          } else {
            Term bound = term(*node.bound);
            std::vector<CaseBranch> branches;
            branches.push_back(CaseBranch{pattern(node.pattern), term(*node.body)});
            return make_case(std::move(bound), node.type, std::move(branches), span);
          }
        },
        t.node);
  }

  FunctionDefinition function(const FunctionDefinition& fn) {
    reset_fresh();
    FunctionDefinition out;
    out.name = fn.name;
    out.parameter_type = fn.parameter_type;
    out.return_type = fn.return_type;
    out.meta = fn.meta;
    if (std::holds_alternative<VariablePattern>(fn.parameter.node)) {
      out.parameter = fn.parameter;
      out.body = term(fn.body);
      return out;
    }
    // f p = t  ~>  f x = case x : τ of ; p -> t
    const Name x = fresh();
    const SourceSpan span = fn.parameter.meta.span;
    out.parameter = make_variable(x, span);
    std::vector<CaseBranch> branches;
    branches.push_back(CaseBranch{pattern(fn.parameter), term(fn.body)});
    out.body = make_case(make_pattern_term(make_variable(x, span)), fn.parameter_type,
                         std::move(branches), fn.body.meta.span);
    return out;
  }

 private:
  std::vector<Name> field_types_of(std::string_view constructor) const {
    const auto it = field_types_.find(Name(constructor));
    return it == field_types_.end() ? std::vector<Name>{} : it->second;
  }

  std::optional<Name> argument_type(const FunctionRef& callee) const {
    const FunctionDefinition* fn = program_.find_function(callee.name);
    if (!fn) return std::nullopt;
    // Running a function backwards consumes what it returns.
    return callee.inversions % 2 == 0 ? fn->parameter_type : fn->return_type;
  }

  // [c t1 ... tn]  ~>  case t_i : τ_i of ; w_i -> ... [c p1 ... pn]
  Term hoist(const Name& constructor, const std::vector<const Term*>& args,
             const std::vector<Name>& types, SourceSpan span) {
    struct Hoisted {
      Term bound;
      std::optional<Name> type;
      Name variable;
    };
    std::vector<Hoisted> hoisted;
    std::vector<Pattern> patterns;
    for (std::size_t i = 0; i < args.size(); ++i) {
      const Term& arg = *args[i];
      if (const auto* pt = std::get_if<PatternTerm>(&arg.node)) {
        patterns.push_back(pattern(pt->pattern));
        continue;
      }
      Term bound = term(arg);
      Name w = fresh();
      patterns.push_back(make_variable(w, arg.meta.span));
      std::optional<Name> type;
      if (i < types.size() && !types[i].starts_with(kGeneratedPrefix)) type = types[i];
      hoisted.push_back(Hoisted{std::move(bound), std::move(type), std::move(w)});
    }
    Term result = make_pattern_term(make_constructor(constructor, std::move(patterns), span));
    for (auto it = hoisted.rbegin(); it != hoisted.rend(); ++it) {
      std::vector<CaseBranch> branches;
      branches.push_back(CaseBranch{make_variable(it->variable, it->bound.meta.span), std::move(result)});
      result = make_case(std::move(it->bound), it->type, std::move(branches), span);
    }
    return result;
  }

  const Program& program_;
  std::map<Name, std::vector<Name>> field_types_;
  unsigned next_fresh_ = 0;
};

/// Declarations for the sugar constructors the program needs but does not
/// declare itself.
std::vector<Definition> injected_definitions(const Program& program) {
  const SugarUsage usage = sugar_usage(program);
  std::vector<Definition> out;

  auto declared = [&](std::string_view name, std::size_t arity) {
    const DataConstructor* ctor = program.find_constructor(name);
    if (ctor && ctor->field_types.size() != arity) {
      throw DesugarError("constructor '" + std::string(name) + "' is declared with " +
                         std::to_string(ctor->field_types.size()) +
                         " field(s) but sugar requires " + std::to_string(arity));
    }
    return ctor != nullptr;
  };
  const Name any(kAnyTypeName);

  if (usage.tuples && !declared(kPairConstructor, 2)) {
    DataDefinition tuple{Name(kTupleTypeName), {}, {}};
    tuple.constructors.push_back(DataConstructor{Name(kPairConstructor), {any, any}, {}});
    out.emplace_back(std::move(tuple));
  }
  if (usage.lists) {
    DataDefinition list{Name(kListTypeName), {}, {}};
    if (!declared(kConsConstructor, 2)) {
      list.constructors.push_back(
          DataConstructor{Name(kConsConstructor), {any, Name(kListTypeName)}, {}});
    }
    if (!declared(kNilConstructor, 0)) {
      list.constructors.push_back(DataConstructor{Name(kNilConstructor), {}, {}});
    }
    if (!list.constructors.empty()) out.emplace_back(std::move(list));
  }
  if (usage.naturals && !(declared("zero", 0) && declared("successor", 1))) {
    throw DesugarError("natural number literals need [zero] and [successor _] constructors");
  }
  return out;
}

}  // namespace

Pattern desugar_pattern(const Pattern& pattern) { return Desugarer::pattern(pattern); }

Term desugar_term(const Term& term, const Program& program) {
  Desugarer desugarer(program);
  return desugarer.term(term);
}

Program desugar_program(const Program& program) {
  Program out;
  out.definitions = injected_definitions(program);
  out.main = program.main;
  out.main_meta = program.main_meta;
  Desugarer desugarer(program);
  for (const Definition& def : program.definitions) {
    if (const auto* fn = std::get_if<FunctionDefinition>(&def)) {
      out.definitions.emplace_back(desugarer.function(*fn));
    } else {
      out.definitions.push_back(def);
    }
  }
  return out;
}

}  // namespace jeopardy
