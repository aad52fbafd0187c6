// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>

#include "jeopardy/analysis.hpp"
#include "jeopardy/evaluator.hpp"
#include "jeopardy/parser.hpp"
#include "jeopardy/printer.hpp"
#include "jeopardy/report.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace jeopardy;
using namespace jeopardy::analysis;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

using Edges = std::set<std::pair<Name, Name>>;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Edges forward_edges(const ConfigurationSet& configs) {
  Edges out;
  for (const CallConfiguration& c : configs) {
    if (c.direction() == Direction::down) out.emplace(c.caller, c.callee.name);
  }
  return out;
}

Verdict fibonacci_configurations() {
  const auto start = std::chrono::steady_clock::now();
  const LabeledProgram fib = testing::labeled_fixture("fib.jpd");
  const ConfigurationSet configs = configurations(fib);
  const std::string report = render_text(configs, symmetry_hints(fib, configs));
  const double elapsed = seconds_since(start);

  const Edges expected = {{"⊤", "fibonacci"},
                          {"fibonacci", "fibonacci_pair"},
                          {"fibonacci_pair", "fibonacci_pair"},
                          {"fibonacci_pair", "fibber"},
                          {"fibber", "sum"},
                          {"sum", "sum"}};
  if (forward_edges(configs) != expected) return {false, "forward edges differ"};
  if (!configs.contains(make_configuration(std::string(kTop), FunctionRef{"fibonacci", 1},
                                           {Label::output()}, {}))) {
    return {false, "backward seed missing"};
  }
  const std::string oracle =
      testing::read_file(std::string(JEOPARDY_ORACLE_DIR) + "/fibonacci_expected.txt");
  if (report.compare(0, oracle.size(), oracle) != 0) return {false, "label sets differ from oracle"};
  if (elapsed >= 1.0) return {false, "took " + std::to_string(elapsed) + " s"};
  return {true, std::to_string(configs.size()) + " configurations match the oracle in " +
                    std::to_string(elapsed) + " s"};
}

Verdict first_step() {
  const LabeledProgram fib = testing::labeled_fixture("fib.jpd");
  const Analyzer analyzer(fib);
  const ConfigurationSet step = analyzer.call(
      make_configuration(std::string(kTop), FunctionRef{"fibonacci", 0}, {Label::input()}, {}));
  if (step.size() != 1) return {false, std::to_string(step.size()) + " configurations"};
  const CallConfiguration& c = *step.begin();
  // The argument of the only application in fibonacci's body.
  const auto& scrutinee = *std::get<Case>(fib.function("fibonacci")->body.node).scrutinee;
  const auto& app = std::get<Application>(scrutinee.node);
  const bool ok = c.caller == "fibonacci" && c.callee == FunctionRef{"fibonacci_pair", 0} &&
                  c.arguments == labels_of(app.argument) && c.arguments.size() == 1 &&
                  c.implicit == LabelSet{Label::input()};
  return {ok, c.to_string()};
}

Verdict fibber_hint() {
  const LabeledProgram fib = testing::labeled_fixture("fib.jpd");
  for (const Hint& h : symmetry_hints(fib, configurations(fib))) {
    if (h.function == "fibber" && h.callee == "sum" && h.component == std::vector<std::size_t>{0}) {
      return {true, "fibber -> sum at " + h.call_label.to_string() + ", witnesses " +
                        h.witnesses.to_string()};
    }
  }
  return {false, "no hint for fibber's call to sum"};
}

Verdict termination() {
  std::string detail;
  for (const std::string name : {"sum_main.jpd", "mutual.jpd", "ring10.jpd"}) {
    const LabeledProgram lp = testing::labeled_fixture(name);
    const Analyzer analyzer(lp);
    const auto start = std::chrono::steady_clock::now();
    const ConfigurationSet first = analyzer.configurations(WorklistOrder::fifo);
    const ConfigurationSet second = analyzer.configurations(WorklistOrder::fifo);
    const ConfigurationSet reordered = analyzer.configurations(WorklistOrder::lifo);
    const double elapsed = seconds_since(start) / 3;
    if (first != second || first != reordered) return {false, name + " is not deterministic"};
    if (elapsed >= 5.0) return {false, name + " took " + std::to_string(elapsed) + " s"};
    detail += name + " " + std::to_string(first.size()) + " in " + std::to_string(elapsed) + " s; ";
  }
  return {true, detail};
}

Verdict monotonicity() {
  testing::Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    if (const auto failure = testing::monotonicity_case(rng)) return {false, *failure};
  }
  return {true, "1000 cases, no counterexample"};
}

Verdict directions() {
  for (Direction d : {Direction::down, Direction::up}) {
    if (opposite(opposite(d)) != d) return {false, "op is not an involution"};
  }
  for (unsigned k = 0; k <= 4; ++k) {
    const Direction expected = k % 2 == 0 ? Direction::down : Direction::up;
    if (direction_of(FunctionRef{"f", k}) != expected) {
      return {false, "dir wrong at " + std::to_string(k) + " wrappers"};
    }
    std::string callee = "f";
    for (unsigned i = 0; i < k; ++i) callee = "(invert " + callee + ")";
    const Program p = parse_program("f x = " + callee + " x. main f.");
    const auto& app = std::get<Application>(std::get<FunctionDefinition>(p.definitions[0]).body.node);
    if (direction_of(app.callee) != expected) {
      return {false, "parsed dir wrong at " + std::to_string(k) + " wrappers"};
    }
  }
  return {true, "both directions, 0..4 wrappers"};
}

Verdict dynamic_soundness() {
  for (const std::string name : {"fib.jpd", "fib_core.jpd"}) {
    const LabeledProgram lp = testing::labeled_fixture(name);
    const Edges predicted = forward_edges(configurations(lp));
    for (std::uint32_t n = 0; n <= 5; ++n) {
      const RunResult run = run_main(lp, natural_value(n));
      for (const CallEvent& e : run.trace) {
        if (!predicted.contains({e.caller, e.callee})) {
          return {false, name + ": unpredicted call " + e.caller + " -> " + e.callee};
        }
      }
      std::uint32_t a = 1;
      std::uint32_t b = 1;
      for (std::uint32_t i = 0; i < n; ++i) b = std::exchange(a, a + b);
      if (run.value != pair_value(natural_value(b), natural_value(n))) {
        return {false, name + ": fibonacci " + std::to_string(n) + " = " + print_value(run.value)};
      }
    }
  }
  return {true, "inputs 0..5 on both encodings"};
}

Verdict front_end() {
  for (const std::string& name : testing::fixture_names()) {
    const Program first = parse_program(testing::read_fixture(name));
    const std::string printed = print_program(first);
    const Program second = parse_program(printed);
    if (second != first || print_program(second) != printed) return {false, name + " round-trip"};
    const Program core = testing::core_program(testing::read_fixture(name));
    if (desugar_program(core) != core) return {false, name + " desugar is not idempotent"};
  }
  testing::Rng rng(99);
  for (int i = 0; i < 10000; ++i) {
    std::string input(testing::pick(rng, 64), '\0');
    for (char& c : input) c = static_cast<char>(testing::pick(rng, 256));
    try {
      parse_program(input);
    } catch (const ParseError&) {
    } catch (const std::exception& e) {
      return {false, std::string("fuzz input raised ") + e.what()};
    }
  }
  return {true, "fixtures round-trip, desugar idempotent, 10000 fuzz inputs"};
}

}  // namespace

int main() {
  const std::vector<std::function<Verdict()>> criteria = {
      fibonacci_configurations, first_step, fibber_hint, termination,
      monotonicity,             directions, dynamic_soundness, front_end};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::cout << "criterion " << i + 1 << ": " << (v.pass ? "PASS" : "FAIL") << " " << v.detail
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
