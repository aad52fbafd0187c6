#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jeopardy/desugar.hpp"
#include "jeopardy/labeler.hpp"
#include "jeopardy/parser.hpp"
#include "jeopardy/validate.hpp"

namespace jeopardy::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(JEOPARDY_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

inline std::string read_fixture(const std::string& name) { return read_file(fixture_path(name)); }

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "fib.jpd",           "fib_core.jpd", "first_match.jpd", "first_match_swapped.jpd",
      "identity.jpd",      "invert.jpd",   "mutual.jpd",      "nested_case.jpd",
      "ring10.jpd",        "sugar.jpd",    "sum_main.jpd",
  };
  return names;
}

/// parse, validate, desugar. Throws if the program is rejected.
inline Program core_program(const std::string& source) {
  const Program parsed = parse_program(source);
  const std::vector<Diagnostic> diagnostics = validate(parsed);
  if (!diagnostics.empty()) throw std::runtime_error(format_diagnostic(diagnostics.front(), source));
  return desugar_program(parsed);
}

inline LabeledProgram labeled_program(const std::string& source) {
  return annotate(core_program(source));
}

inline LabeledProgram labeled_fixture(const std::string& name) {
  return labeled_program(read_fixture(name));
}

/// Fixed-seed generator so every property run is reproducible.
using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

}  // namespace jeopardy::testing
