#include <doctest.h>

#include <set>

#include "jeopardy/evaluator.hpp"
#include "jeopardy/parser.hpp"
#include "jeopardy/printer.hpp"
#include "support.hpp"

using namespace jeopardy;

namespace {

Value constant(const std::string& name) { return Value{name, {}}; }

/// Pair of the n-th Fibonacci number (1, 1, 2, 3, ...) and n, computed
/// iteratively.
std::pair<std::uint32_t, std::uint32_t> reference_fibonacci(std::uint32_t n) {
  std::uint32_t a = 1;
  std::uint32_t b = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t next = a + b;
    b = a;
    a = next;
  }
  return {b, n};
}

RunResult run(const LabeledProgram& lp, const std::string& input, const EvalOptions& options = {}) {
  return run_main(lp, parse_value(input, lp.program()), options);
}

RuntimeErrorKind failure(const LabeledProgram& lp, const std::string& input,
                         const EvalOptions& options = {}) {
  try {
    run(lp, input, options);
  } catch (const RuntimeError& e) {
    return e.kind();
  }
  FAIL("expected a runtime error");
  return RuntimeErrorKind::no_branch_matched;
}

}  // namespace

TEST_CASE("pattern matching") {
  const Value two = natural_value(2);
  SUBCASE("a variable binds the whole value") {
    const auto env = match_pattern(desugar_pattern(parse_pattern("x")), two);
    REQUIRE(env);
    CHECK(env->at("x") == two);
  }
  SUBCASE("constructors bind nested parts") {
    const auto env = match_pattern(desugar_pattern(parse_pattern("[successor k]")), two);
    REQUIRE(env);
    CHECK(env->at("k") == natural_value(1));
  }
  SUBCASE("the wildcard binds nothing") {
    const auto env = match_pattern(desugar_pattern(parse_pattern("_")), two);
    REQUIRE(env);
    CHECK(env->empty());
  }
  SUBCASE("mismatched constructors fail") {
    CHECK_FALSE(match_pattern(desugar_pattern(parse_pattern("[zero]")), two));
    CHECK_FALSE(match_pattern(desugar_pattern(parse_pattern("[successor [zero]]")), two));
  }
  SUBCASE("tuples") {
    const auto env = match_pattern(desugar_pattern(parse_pattern("(a, [zero])")),
                                   pair_value(two, natural_value(0)));
    REQUIRE(env);
    CHECK(env->at("a") == two);
  }
}

TEST_CASE("value literals") {
  const LabeledProgram lp = testing::labeled_fixture("sugar.jpd");
  CHECK(parse_value("2", lp.program()) == natural_value(2));
  CHECK(parse_value("[successor [zero]]", lp.program()) == natural_value(1));
  CHECK(print_value(parse_value("(1, [])", lp.program())) == "[pair [successor [zero]] [nil]]");
  CHECK_THROWS_AS(parse_value("x", lp.program()), ValueError);
  CHECK_THROWS_AS(parse_value("[nope]", lp.program()), ValueError);
  CHECK_THROWS_AS(parse_value("[successor]", lp.program()), ValueError);
  CHECK_THROWS_AS(parse_value("[zero", lp.program()), ParseError);
  try {
    parse_value("[nope]", lp.program());
  } catch (const ValueError& e) {
    CHECK(e.diagnostic().kind == DiagnosticKind::undefined_constructor);
  }
}

TEST_CASE("sum adds") {
  const LabeledProgram lp = testing::labeled_fixture("sum_main.jpd");
  for (std::uint32_t m = 0; m <= 6; ++m) {
    for (std::uint32_t n = 0; n <= 6; ++n) {
      CHECK(run_main(lp, pair_value(natural_value(m), natural_value(n))).value ==
            natural_value(m + n));
    }
  }
}

TEST_CASE("Fibonacci against an iterative reference") {
  for (const std::string name : {"fib.jpd", "fib_core.jpd"}) {
    CAPTURE(name);
    const LabeledProgram lp = testing::labeled_fixture(name);
    CHECK(run(lp, "0").value == pair_value(natural_value(1), natural_value(0)));
    for (std::uint32_t n = 0; n <= 12; ++n) {
      CAPTURE(n);
      const auto [fib, index] = reference_fibonacci(n);
      CHECK(run_main(lp, natural_value(n)).value ==
            pair_value(natural_value(fib), natural_value(index)));
    }
  }
}

TEST_CASE("the Fibonacci trace") {
  const LabeledProgram lp = testing::labeled_fixture("fib.jpd");
  const RunResult result = run(lp, "3");
  REQUIRE_FALSE(result.trace.empty());
  const CallEvent& top = result.trace.front();
  CHECK(top.caller == "⊤");
  CHECK(top.callee == "fibonacci");
  CHECK(top.application_label == Label::input());
  CHECK(top.argument == natural_value(3));

  std::set<std::pair<Name, Name>> edges;
  for (const CallEvent& e : result.trace) edges.emplace(e.caller, e.callee);
  const std::set<std::pair<Name, Name>> expected = {
      {"⊤", "fibonacci"},           {"fibonacci", "fibonacci_pair"}, {"fibonacci_pair", "fibber"},
      {"fibonacci_pair", "fibonacci_pair"}, {"fibber", "sum"},       {"sum", "sum"}};
  CHECK(edges == expected);
  CHECK(result.trace[1].application_label == Label::numbered(51));
  for (const CallEvent& e : result.trace) {
    if (e.caller == "⊤") continue;
    CHECK(lp.labels_of_function(e.caller).contains(e.application_label));
  }
}

TEST_CASE("identity makes one call") {
  const LabeledProgram lp = testing::labeled_fixture("identity.jpd");
  const RunResult result = run(lp, "[unit]");
  CHECK(result.value == constant("unit"));
  REQUIRE(result.trace.size() == 1);
  CHECK(result.trace[0].caller == "⊤");
  CHECK(result.trace[0].callee == "f");
}

TEST_CASE("the first matching branch wins") {
  CHECK(run(testing::labeled_fixture("first_match.jpd"), "0").value == constant("general"));
  CHECK(run(testing::labeled_fixture("first_match_swapped.jpd"), "0").value ==
        constant("special"));
  CHECK(run(testing::labeled_fixture("first_match_swapped.jpd"), "1").value ==
        constant("general"));
}

TEST_CASE("other fixtures") {
  const LabeledProgram mutual = testing::labeled_fixture("mutual.jpd");
  for (std::uint32_t n = 0; n <= 9; ++n) {
    CHECK(run_main(mutual, natural_value(n)).value == constant(n % 2 == 0 ? "true" : "false"));
  }
  const LabeledProgram nested = testing::labeled_fixture("nested_case.jpd");
  CHECK(run(nested, "(2, 5)").value == natural_value(2));
  CHECK(run(nested, "(5, 2)").value == natural_value(2));
  CHECK(run(nested, "(0, 0)").value == natural_value(0));
  const LabeledProgram sugar = testing::labeled_fixture("sugar.jpd");
  CHECK(print_value(run(sugar, "2").value) == print_value(parse_value("(3, 2) : (2, 2) : []", sugar.program())));
}

TEST_CASE("runtime errors") {
  SUBCASE("inverted calls cannot run") {
    const LabeledProgram lp = testing::labeled_fixture("invert.jpd");
    CHECK(failure(lp, "2") == RuntimeErrorKind::inverted_call);
  }
  SUBCASE("call limit") {
    const LabeledProgram lp = testing::labeled_program("data u = [u]. loop x = loop x. main loop.");
    EvalOptions options;
    options.max_calls = 100;
    CHECK(failure(lp, "[u]", options) == RuntimeErrorKind::call_limit_exceeded);
  }
  SUBCASE("depth limit") {
    const LabeledProgram lp = testing::labeled_program(
        "data nat = [zero] [successor nat]."
        "deep n = case n of ; [zero] -> [zero] ; [successor k] -> case deep k of ; z -> z."
        "main deep.");
    EvalOptions options;
    options.max_depth = 5;
    CHECK(run(lp, "4", options).value == natural_value(0));
    CHECK(failure(lp, "40", options) == RuntimeErrorKind::depth_limit_exceeded);
  }
  SUBCASE("no branch matched") {
    const LabeledProgram lp = testing::labeled_program(
        "data nat = [zero] [successor nat]. f x = case x of ; [zero] -> [zero]. main f.");
    CHECK(failure(lp, "1") == RuntimeErrorKind::no_branch_matched);
    try {
      run(lp, "1");
    } catch (const RuntimeError& e) {
      CHECK(e.label() == Label::numbered(1));
      CHECK(std::string(e.what()).find("NoBranchMatched at label 1") == 0);
    }
  }
  SUBCASE("a parameter pattern that does not match") {
    const LabeledProgram lp = testing::labeled_program(
        "data nat = [zero] [successor nat]. f [zero] = [zero]. main f.");
    CHECK(failure(lp, "1") == RuntimeErrorKind::no_branch_matched);
  }
}

TEST_CASE("long tail-recursive runs do not grow the stack") {
  const LabeledProgram lp = testing::labeled_fixture("sum_main.jpd");
  EvalOptions options;
  options.record_trace = false;
  CHECK(run_main(lp, pair_value(natural_value(10000), natural_value(0)), options).value ==
        natural_value(10000));
}

TEST_CASE("evaluation is deterministic") {
  const LabeledProgram lp = testing::labeled_fixture("fib.jpd");
  const RunResult first = run(lp, "6");
  const RunResult second = run(lp, "6");
  CHECK(first.value == second.value);
  CHECK(first.trace == second.trace);
}

TEST_CASE("eval_term in a given environment") {
  const LabeledProgram lp = testing::labeled_fixture("sum_main.jpd");
  const FunctionDefinition& sum = *lp.function("sum");
  Environment env;
  REQUIRE(match_pattern(sum.parameter, pair_value(natural_value(2), natural_value(3)), env));
  std::vector<CallEvent> events;
  const Value v = eval_term(lp, env, sum.body, "sum",
                            [&](const CallEvent& e) { events.push_back(e); });
  CHECK(v == natural_value(5));
  CHECK(events.size() == 2);
  for (const CallEvent& e : events) CHECK(e.caller == "sum");
}
