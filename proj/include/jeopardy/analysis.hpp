#pragma once

// Available implicit arguments analysis.
//
// A call configuration (caller, callee, A, I) records, for one way of
// reaching a call, the labels of the call's arguments (A) and the labels of
// everything already available on the path that led there (I). The analysis
// computes the least set of configurations that contains the two top-level
// seeds (main run forwards on `input`, main run backwards on `output`) and is
// closed under `call`.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jeopardy/label.hpp"
#include "jeopardy/labeler.hpp"
#include "jeopardy/syntax.hpp"

namespace jeopardy::analysis {

enum class Direction { down, up };

std::string_view to_string(Direction direction);

/// op: the opposite direction.
constexpr Direction opposite(Direction d) {
  return d == Direction::down ? Direction::up : Direction::down;
}

/// dir: Down for a direct reference, flipped once per `invert`.
constexpr Direction direction_of(const FunctionRef& ref) {
  return ref.inversions % 2 == 0 ? Direction::down : Direction::up;
}

/// The reference with the opposite direction: unwraps one `invert` if there
/// is one, otherwise adds one.
FunctionRef flipped(const FunctionRef& ref);

/// Reserved caller name of the top-level seeds.
inline constexpr std::string_view kTop = "⊤";

struct CallConfiguration {
  Name caller;
  /// Always normalized to zero or one inversion.
  FunctionRef callee;
  LabelSet arguments;
  LabelSet implicit;

  bool from_top() const { return caller == kTop; }
  Direction direction() const { return direction_of(callee); }

  friend bool operator==(const CallConfiguration&, const CallConfiguration&) = default;
  /// By caller (top first), callee, arguments, then implicit labels.
  friend std::strong_ordering operator<=>(const CallConfiguration& lhs,
                                          const CallConfiguration& rhs);

  std::string to_string() const;
};

CallConfiguration make_configuration(Name caller, FunctionRef callee, LabelSet arguments,
                                     LabelSet implicit);

using ConfigurationSet = std::set<CallConfiguration>;

/// One outcome of analysing a term against the conventional direction: the
/// configurations reached, and the labels available once the term's result
/// is known.
struct Availability {
  ConfigurationSet configurations;
  LabelSet available;

  friend bool operator==(const Availability&, const Availability&) = default;
  friend auto operator<=>(const Availability&, const Availability&) = default;
};

using UpResult = std::set<Availability>;

enum class WorklistOrder { fifo, lifo };

struct FixpointStats {
  std::size_t iterations = 0;
};

/// The analysis over one labeled program. Holds a reference to the program,
/// which must outlive it.
class Analyzer {
 public:
  explicit Analyzer(const LabeledProgram& program) : program_(program) {}

  /// Configurations reachable from `t` when `caller` runs forwards.
  ConfigurationSet term_down(std::string_view caller, const LabelSet& implicit,
                             const Term& t) const;

  /// Configurations reachable from `t` when `caller` runs backwards, paired
  /// with the labels made available from the result.
  UpResult term_up(std::string_view caller, const LabelSet& implicit, const Term& t) const;

  /// Configurations reached by performing the call described by `config`.
  ConfigurationSet call(const CallConfiguration& config) const;

  /// The two top-level seeds for `main g.`.
  ConfigurationSet seeds() const;

  /// The least set containing the seeds and closed under `call`.
  ConfigurationSet configurations(WorklistOrder order = WorklistOrder::fifo,
                                  FixpointStats* stats = nullptr) const;

  const LabeledProgram& program() const { return program_; }

 private:
  const LabelSet& cached_labels(const Term& t) const;
  const LabelSet& cached_labels(const Pattern& p) const;
  const FunctionDefinition& definition(const FunctionRef& ref) const;

  const LabeledProgram& program_;
  mutable std::unordered_map<const void*, LabelSet> label_cache_;
};

/// Convenience wrapper around Analyzer::configurations.
ConfigurationSet configurations(const LabeledProgram& program);

/// The configuration order: (c, f, A, I) ⊑ (c', f', A', I') iff c = c',
/// f = f', A = A' and I ⊆ I'.
enum class Ordering { less, equal, greater, incomparable };

std::string_view to_string(Ordering ordering);

Ordering compare(const CallConfiguration& a, const CallConfiguration& b);

/// Join and meet for configurations with the same caller, callee and
/// arguments; nullopt otherwise.
std::optional<CallConfiguration> join(const CallConfiguration& a, const CallConfiguration& b);
std::optional<CallConfiguration> meet(const CallConfiguration& a, const CallConfiguration& b);

/// A call site at which a value the callee branches on is available both
/// when the program runs forwards and when it runs backwards.
struct Hint {
  /// The caller containing the call.
  Name function;
  Name callee;
  Label call_label;
  /// Position of the scrutinized component inside the callee's parameter,
  /// as constructor argument indices from the root.
  std::vector<std::size_t> component;
  /// Labels in the caller denoting the available value, found on either side.
  LabelSet witnesses;

  friend bool operator==(const Hint&, const Hint&) = default;
  friend auto operator<=>(const Hint&, const Hint&) = default;
};

std::vector<Hint> symmetry_hints(const LabeledProgram& program, const ConfigurationSet& configs);

}  // namespace jeopardy::analysis
