#pragma once

// Random program generators for property tests.

#include <functional>
#include <string>
#include <vector>

#include "jeopardy/syntax.hpp"
#include "support.hpp"

namespace jeopardy::testing {

/// Core programs over `data t = [a] [b t] [p t t].` with functions f0..fn-1.
class CoreGenerator {
 public:
  CoreGenerator(Rng& rng, std::size_t functions) : rng_(rng), functions_(functions) {}

  Program program(std::size_t body_budget) {
    Program out;
    DataDefinition data{"t", {}, {}};
    data.constructors.push_back(DataConstructor{"a", {}, {}});
    data.constructors.push_back(DataConstructor{"b", {"t"}, {}});
    data.constructors.push_back(DataConstructor{"p", {"t", "t"}, {}});
    out.definitions.emplace_back(std::move(data));
    for (std::size_t i = 0; i < functions_; ++i) {
      FunctionDefinition fn;
      fn.name = "f" + std::to_string(i);
      fn.parameter = make_variable("x");
      next_var_ = 0;
      std::size_t budget = 1 + pick(rng_, body_budget);
      fn.body = term(budget, {"x"});
      out.definitions.emplace_back(std::move(fn));
    }
    out.main = FunctionRef{"f0", static_cast<unsigned>(pick(rng_, 2))};
    return out;
  }

  /// A term of at most `budget` nodes using variables from `scope`.
  Term term(std::size_t& budget, const std::vector<Name>& scope) {
    const std::size_t choice = budget <= 2 ? 0 : pick(rng_, 3);
    if (choice == 0 || budget <= 1) {
      if (budget > 0) --budget;
      return make_pattern_term(use(budget, scope));
    }
    if (choice == 1) {
      --budget;
      FunctionRef callee{"f" + std::to_string(pick(rng_, functions_)),
                         static_cast<unsigned>(pick(rng_, 3))};
      return make_application(std::move(callee), use(budget, scope));
    }
    --budget;
    Term scrutinee = term(budget, scope);
    std::vector<CaseBranch> branches;
    const std::size_t count = 1 + pick(rng_, 3);
    for (std::size_t i = 0; i < count && (i == 0 || budget > 1); ++i) {
      std::vector<Name> inner = scope;
      Pattern p = bind(budget, inner);
      Term body = term(budget, inner);
      branches.push_back(CaseBranch{std::move(p), std::move(body)});
    }
    return make_case(std::move(scrutinee), std::nullopt, std::move(branches));
  }

 private:
  // A pattern in term position.
  Pattern use(std::size_t& budget, const std::vector<Name>& scope) {
    if (budget == 0 || coin(rng_, 0.6)) return make_variable(scope[pick(rng_, scope.size())]);
    --budget;
    return constructor(budget, [&](std::size_t& b) { return use(b, scope); });
  }

  // A linear binding pattern; new names are appended to `scope`.
  Pattern bind(std::size_t& budget, std::vector<Name>& scope) {
    if (budget == 0 || coin(rng_, 0.6)) {
      if (budget > 0) --budget;
      if (coin(rng_, 0.1)) return make_variable(std::string(kWildcard));
      Name fresh = "v" + std::to_string(next_var_++);
      scope.push_back(fresh);
      return make_variable(std::move(fresh));
    }
    --budget;
    return constructor(budget, [&](std::size_t& b) { return bind(b, scope); });
  }

  template <typename Child>
  Pattern constructor(std::size_t& budget, Child child) {
    const std::size_t which = pick(rng_, 3);
    if (which == 0) return make_constructor("a", {});
    std::vector<Pattern> args;
    args.push_back(child(budget));
    if (which == 2) args.push_back(child(budget));
    return make_constructor(which == 1 ? "b" : "p", std::move(args));
  }

  Rng& rng_;
  std::size_t functions_;
  unsigned next_var_ = 0;
};

/// Sugared programs over naturals, pairs and lists, printed as source text.
class SugarGenerator {
 public:
  explicit SugarGenerator(Rng& rng) : rng_(rng) {}

  Program program() {
    Program out;
    DataDefinition nat{"nat", {}, {}};
    nat.constructors.push_back(DataConstructor{"zero", {}, {}});
    nat.constructors.push_back(DataConstructor{"successor", {"nat"}, {}});
    out.definitions.emplace_back(std::move(nat));
    const std::size_t count = 1 + pick(rng_, 3);
    for (std::size_t i = 0; i < count; ++i) {
      FunctionDefinition fn;
      fn.name = "g" + std::to_string(i);
      next_var_ = 0;
      std::vector<Name> scope;
      std::size_t budget = 4;
      fn.parameter = bind(budget, scope);
      if (scope.empty()) {
        scope.push_back("x");
        fn.parameter = make_variable("x");
      }
      if (coin(rng_, 0.3)) fn.parameter_type = "nat";
      if (coin(rng_, 0.3)) fn.return_type = "nat";
      budget = 3 + pick(rng_, 10);
      fn.body = term(budget, scope, count);
      out.definitions.emplace_back(std::move(fn));
    }
    out.main = FunctionRef{"g0", static_cast<unsigned>(pick(rng_, 2))};
    return out;
  }

 private:
  Term term(std::size_t& budget, const std::vector<Name>& scope, std::size_t functions) {
    if (budget <= 1) {
      if (budget > 0) --budget;
      return make_pattern_term(use(budget, scope));
    }
    --budget;
    auto callee = [&] {
      return FunctionRef{"g" + std::to_string(pick(rng_, functions)),
                         static_cast<unsigned>(pick(rng_, 3))};
    };
    auto sub = [&] { return Box<Term>(term(budget, scope, functions)); };
    switch (pick(rng_, 8)) {
      case 0:
        return make_pattern_term(use(budget, scope));
      case 1:
        return make_application(callee(), use(budget, scope));
      case 2: {
        Term scrutinee = term(budget, scope, functions);
        std::vector<CaseBranch> branches;
        const std::size_t count = 1 + pick(rng_, 3);
        for (std::size_t i = 0; i < count; ++i) {
          std::vector<Name> inner = scope;
          Pattern p = bind(budget, inner);
          branches.push_back(CaseBranch{std::move(p), term(budget, inner, functions)});
        }
        std::optional<Name> type;
        if (coin(rng_, 0.3)) type = "nat";
        return make_case(std::move(scrutinee), type, std::move(branches));
      }
      case 3: {
        Term t;
        t.node = ConstructorTerm{"successor", {term(budget, scope, functions)}};
        return t;
      }
      case 4: {
        Term t;
        t.node = TupleTerm{sub(), sub()};
        return t;
      }
      case 5: {
        Term t;
        t.node = ConsTerm{sub(), sub()};
        return t;
      }
      case 6: {
        Term t;
        t.node = GeneralApplication{callee(), sub()};
        return t;
      }
      default: {
        Box<Term> bound = sub();
        std::vector<Name> inner = scope;
        Pattern p = bind(budget, inner);
        std::optional<Name> type;
        if (coin(rng_, 0.3)) type = "nat";
        Term t;
        t.node = Let{std::move(p), type, std::move(bound),
                     Box<Term>(term(budget, inner, functions))};
        return t;
      }
    }
  }

  Pattern sugar(std::size_t& budget, const std::function<Pattern(std::size_t&)>& child) {
    Pattern p;
    switch (pick(rng_, 5)) {
      case 0:
        p.node = NaturalPattern{static_cast<std::uint32_t>(pick(rng_, 4))};
        return p;
      case 1:
        p.node = NilPattern{};
        return p;
      case 2:
        p.node = TuplePattern{Box<Pattern>(child(budget)), Box<Pattern>(child(budget))};
        return p;
      case 3:
        p.node = ConsPattern{Box<Pattern>(child(budget)), Box<Pattern>(child(budget))};
        return p;
      default: {
        std::vector<Pattern> args;
        args.push_back(child(budget));
        return make_constructor("successor", std::move(args));
      }
    }
  }

  Pattern use(std::size_t& budget, const std::vector<Name>& scope) {
    if (budget == 0 || coin(rng_, 0.6)) return make_variable(scope[pick(rng_, scope.size())]);
    --budget;
    return sugar(budget, [&](std::size_t& b) { return use(b, scope); });
  }

  Pattern bind(std::size_t& budget, std::vector<Name>& scope) {
    if (budget == 0 || coin(rng_, 0.6)) {
      if (budget > 0) --budget;
      if (coin(rng_, 0.1)) return make_variable(std::string(kWildcard));
      Name fresh = "y" + std::to_string(next_var_++);
      scope.push_back(fresh);
      return make_variable(std::move(fresh));
    }
    --budget;
    return sugar(budget, [&](std::size_t& b) { return bind(b, scope); });
  }

  Rng& rng_;
  unsigned next_var_ = 0;
};

}  // namespace jeopardy::testing
