#include "jeopardy/analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace jeopardy::analysis {

std::string_view to_string(Direction direction) {
  return direction == Direction::down ? "down" : "up";
}

FunctionRef flipped(const FunctionRef& ref) {
  if (ref.inversions > 0) return FunctionRef{ref.name, ref.inversions - 1};
  return ref.inverted();
}

namespace {

FunctionRef normalized(const FunctionRef& ref) { return FunctionRef{ref.name, ref.inversions % 2}; }

}  // namespace

CallConfiguration make_configuration(Name caller, FunctionRef callee, LabelSet arguments,
                                     LabelSet implicit) {
  return CallConfiguration{std::move(caller), normalized(callee), std::move(arguments),
                           std::move(implicit)};
}

std::strong_ordering operator<=>(const CallConfiguration& lhs, const CallConfiguration& rhs) {
  if (auto c = !lhs.from_top() <=> !rhs.from_top(); c != 0) return c;
  if (auto c = lhs.caller <=> rhs.caller; c != 0) return c;
  if (auto c = lhs.callee.name <=> rhs.callee.name; c != 0) return c;
  if (auto c = lhs.callee.inversions <=> rhs.callee.inversions; c != 0) return c;
  if (auto c = lhs.arguments <=> rhs.arguments; c != 0) return c;
  return lhs.implicit <=> rhs.implicit;
}

std::string CallConfiguration::to_string() const {
  std::string callee_text = callee.name;
  for (unsigned i = 0; i < callee.inversions; ++i) callee_text = "(invert " + callee_text + ")";
  return caller + " -> " + callee_text + " [" + std::string(analysis::to_string(direction())) +
         "] A=" + arguments.to_string() + " I=" + implicit.to_string();
}

// ---------------------------------------------------------------------------

const LabelSet& Analyzer::cached_labels(const Term& t) const {
  auto [it, inserted] = label_cache_.try_emplace(&t);
  if (inserted) it->second = labels_of(t);
  return it->second;
}

const LabelSet& Analyzer::cached_labels(const Pattern& p) const {
  auto [it, inserted] = label_cache_.try_emplace(&p);
  if (inserted) it->second = labels_of(p);
  return it->second;
}

const FunctionDefinition& Analyzer::definition(const FunctionRef& ref) const {
  const FunctionDefinition* fn = program_.function(ref.name);
  if (!fn) throw std::out_of_range("undefined callee '" + ref.name + "'");
  return *fn;
}

ConfigurationSet Analyzer::term_down(std::string_view caller, const LabelSet& implicit,
                                     const Term& t) const {
  if (std::holds_alternative<PatternTerm>(t.node)) return {};
  if (const auto* app = std::get_if<Application>(&t.node)) {
    return {make_configuration(Name(caller), app->callee, cached_labels(app->argument), implicit)};
  }
  const auto* cs = std::get_if<Case>(&t.node);
  if (!cs) throw std::invalid_argument("analysis expects a desugared program");

  ConfigurationSet out = term_down(caller, implicit, *cs->scrutinee);
  const LabelSet with_scrutinee = implicit | cached_labels(*cs->scrutinee);
  for (const CaseBranch& branch : cs->branches) {
    ConfigurationSet reached =
        term_down(caller, with_scrutinee | cached_labels(branch.pattern), branch.body);
    out.merge(reached);
  }
  return out;
}

UpResult Analyzer::term_up(std::string_view caller, const LabelSet& implicit,
                           const Term& t) const {
  if (const auto* pt = std::get_if<PatternTerm>(&t.node)) {
    return {Availability{{}, implicit | cached_labels(pt->pattern)}};
  }
  if (const auto* app = std::get_if<Application>(&t.node)) {
    // Running g backwards starts from g's result: its body's root label.
    const FunctionDefinition& callee = definition(app->callee);
    const std::optional<Label> body_label = label_of(callee.body);
    const std::optional<Label> call_label = label_of(t);
    if (!body_label || !call_label) throw std::invalid_argument("analysis expects labeled terms");

    LabelSet available = implicit | cached_labels(app->argument);
    available.insert(*call_label);
    ConfigurationSet reached = {
        make_configuration(Name(caller), flipped(app->callee), LabelSet{*body_label}, implicit)};
    return {Availability{std::move(reached), std::move(available)}};
  }
  const auto* cs = std::get_if<Case>(&t.node);
  if (!cs) throw std::invalid_argument("analysis expects a desugared program");
  const std::optional<Label> case_label = label_of(t);
  if (!case_label) throw std::invalid_argument("analysis expects labeled terms");

  // The result is known first: analyse each branch body, then the scrutinee
  // with whatever the body and the branch pattern made available.
  UpResult out;
  for (const CaseBranch& branch : cs->branches) {
    for (const Availability& from_body : term_up(caller, implicit, branch.body)) {
      const LabelSet entering = from_body.available | cached_labels(branch.pattern);
      for (const Availability& from_scrutinee : term_up(caller, entering, *cs->scrutinee)) {
        Availability combined{from_body.configurations, from_scrutinee.available};
        combined.configurations.insert(from_scrutinee.configurations.begin(),
                                       from_scrutinee.configurations.end());
        combined.available.insert(*case_label);
        out.insert(std::move(combined));
      }
    }
  }
  return out;
}

ConfigurationSet Analyzer::call(const CallConfiguration& config) const {
  const FunctionDefinition& fn = definition(config.callee);
  // Availability entering the callee excludes the callee's own program points.
  const LabelSet entering =
      (config.implicit | config.arguments) - program_.labels_of_function(fn.name);
  if (config.direction() == Direction::down) return term_down(fn.name, entering, fn.body);

  ConfigurationSet out;
  for (const Availability& outcome : term_up(fn.name, entering, fn.body)) {
    out.insert(outcome.configurations.begin(), outcome.configurations.end());
  }
  return out;
}

ConfigurationSet Analyzer::seeds() const {
  const FunctionRef& main = program_.program().main;
  return {
      make_configuration(Name(kTop), main, LabelSet{Label::input()}, {}),
      make_configuration(Name(kTop), main.inverted(), LabelSet{Label::output()}, {}),
  };
}

ConfigurationSet Analyzer::configurations(WorklistOrder order, FixpointStats* stats) const {
  ConfigurationSet reached = seeds();
  std::deque<CallConfiguration> worklist(reached.begin(), reached.end());
  std::size_t iterations = 0;
  while (!worklist.empty()) {
    CallConfiguration next;
    if (order == WorklistOrder::fifo) {
      next = std::move(worklist.front());
      worklist.pop_front();
    } else {
      next = std::move(worklist.back());
      worklist.pop_back();
    }
    ++iterations;
    for (const CallConfiguration& found : call(next)) {
      if (reached.insert(found).second) worklist.push_back(found);
    }
  }
  if (stats) stats->iterations = iterations;
  return reached;
}

ConfigurationSet configurations(const LabeledProgram& program) {
  return Analyzer(program).configurations();
}

// ---------------------------------------------------------------------------

std::string_view to_string(Ordering ordering) {
  switch (ordering) {
    case Ordering::less:
      return "less";
    case Ordering::equal:
      return "equal";
    case Ordering::greater:
      return "greater";
    case Ordering::incomparable:
      return "incomparable";
  }
  return "incomparable";
}

namespace {

bool same_key(const CallConfiguration& a, const CallConfiguration& b) {
  return a.caller == b.caller && a.callee == b.callee && a.arguments == b.arguments;
}

}  // namespace

Ordering compare(const CallConfiguration& a, const CallConfiguration& b) {
  if (!same_key(a, b)) return Ordering::incomparable;
  if (a.implicit == b.implicit) return Ordering::equal;
  if (a.implicit.is_subset_of(b.implicit)) return Ordering::less;
  if (b.implicit.is_subset_of(a.implicit)) return Ordering::greater;
  return Ordering::incomparable;
}

std::optional<CallConfiguration> join(const CallConfiguration& a, const CallConfiguration& b) {
  if (!same_key(a, b)) return std::nullopt;
  CallConfiguration out = a;
  out.implicit |= b.implicit;
  return out;
}

std::optional<CallConfiguration> meet(const CallConfiguration& a, const CallConfiguration& b) {
  if (!same_key(a, b)) return std::nullopt;
  CallConfiguration out = a;
  out.implicit &= b.implicit;
  return out;
}

// ---------------------------------------------------------------------------
// Symmetry hints

namespace {

using Path = std::vector<std::size_t>;

/// Binds each variable of `p` (matched against the value at `at`) to its path.
void bind_paths(const Pattern& p, const Path& at, std::map<Label, Path>& paths) {
  if (std::holds_alternative<VariablePattern>(p.node)) {
    if (p.label) paths[*p.label] = at;
    return;
  }
  const auto& ctor = std::get<ConstructorPattern>(p.node);
  for (std::size_t i = 0; i < ctor.args.size(); ++i) {
    Path inner = at;
    inner.push_back(i);
    bind_paths(ctor.args[i], inner, paths);
  }
}

/// Parameter components a function branches on: scrutinees of cases with at
/// least two branches that are variables bound to a part of the parameter.
class ScrutinizedPaths {
 public:
  ScrutinizedPaths(const LabeledProgram& program, const FunctionDefinition& fn)
      : program_(program) {
    bind_paths(fn.parameter, {}, paths_);
    walk(fn.body);
  }

  const std::set<Path>& result() const { return result_; }

 private:
  std::optional<Path> path_of(const Term& t) const {
    const auto* pt = std::get_if<PatternTerm>(&t.node);
    if (!pt || !std::holds_alternative<VariablePattern>(pt->pattern.node) || !pt->pattern.label) {
      return std::nullopt;
    }
    const std::optional<Label> binder = program_.info(*pt->pattern.label).binder;
    if (!binder) return std::nullopt;
    const auto it = paths_.find(*binder);
    if (it == paths_.end()) return std::nullopt;
    return it->second;
  }

  void walk(const Term& t) {
    const auto* cs = std::get_if<Case>(&t.node);
    if (!cs) return;
    walk(*cs->scrutinee);
    const std::optional<Path> scrutinized = path_of(*cs->scrutinee);
    if (scrutinized && cs->branches.size() >= 2) result_.insert(*scrutinized);
    for (const CaseBranch& branch : cs->branches) {
      if (scrutinized) bind_paths(branch.pattern, *scrutinized, paths_);
      walk(branch.body);
    }
  }

  const LabeledProgram& program_;
  std::map<Label, Path> paths_;
  std::set<Path> result_;
};

struct CallSite {
  Name caller;
  const Application* application;
  Label label;
};

void collect_sites(const Term& t, const Name& caller, std::vector<CallSite>& out) {
  if (const auto* app = std::get_if<Application>(&t.node)) {
    if (t.label) out.push_back(CallSite{caller, app, *t.label});
    return;
  }
  if (const auto* cs = std::get_if<Case>(&t.node)) {
    collect_sites(*cs->scrutinee, caller, out);
    for (const CaseBranch& branch : cs->branches) collect_sites(branch.body, caller, out);
  }
}

/// The binder of the variable holding component `path` of the argument, if
/// the argument pattern exposes one.
std::optional<Label> component_binder(const LabeledProgram& program, const Pattern& argument,
                                      const Path& path) {
  const Pattern* node = &argument;
  for (std::size_t step : path) {
    if (std::holds_alternative<VariablePattern>(node->node)) break;
    const auto& ctor = std::get<ConstructorPattern>(node->node);
    if (step >= ctor.args.size()) return std::nullopt;
    node = &ctor.args[step];
  }
  if (!std::holds_alternative<VariablePattern>(node->node) || !node->label) return std::nullopt;
  return program.info(*node->label).binder;
}

LabelSet denoting(const LabeledProgram& program, const LabelSet& labels, Label binder) {
  LabelSet out;
  labels.for_each([&](Label label) {
    if (!label.is_numbered() || label.index() >= program.label_count()) return;
    const LabelInfo& info = program.info(label);
    if (info.kind == NodeKind::variable && info.binder == binder) out.insert(label);
  });
  return out;
}

}  // namespace

std::vector<Hint> symmetry_hints(const LabeledProgram& program, const ConfigurationSet& configs) {
  std::vector<CallSite> sites;
  for (const FunctionDefinition* fn : program.program().functions()) {
    collect_sites(fn->body, fn->name, sites);
  }

  // Configurations by (caller, callee).
  std::map<std::pair<Name, FunctionRef>, std::vector<const CallConfiguration*>> by_edge;
  for (const CallConfiguration& config : configs) {
    by_edge[{config.caller, config.callee}].push_back(&config);
  }
  const std::vector<const CallConfiguration*> none;
  auto edge = [&](const Name& caller, const FunctionRef& callee) -> const auto& {
    const auto it = by_edge.find({caller, callee});
    return it == by_edge.end() ? none : it->second;
  };

  std::vector<Hint> out;
  for (const CallSite& site : sites) {
    const FunctionRef& callee = site.application->callee;
    if (direction_of(callee) != Direction::down) continue;
    const FunctionDefinition* target = program.function(callee.name);
    if (!target) continue;

    const auto& forward = edge(site.caller, FunctionRef{callee.name, 0});
    const auto& backward = edge(site.caller, FunctionRef{callee.name, 1});
    const LabelSet site_arguments = labels_of(site.application->argument);

    const ScrutinizedPaths scrutinized(program, *target);
    for (const Path& path : scrutinized.result()) {
      const std::optional<Label> binder =
          component_binder(program, site.application->argument, path);
      if (!binder) continue;
      // A hint needs one forward and one backward configuration of this call
      // that each carry the value; the witnesses collect all of them.
      LabelSet down_witnesses;
      for (const CallConfiguration* down : forward) {
        if (down->arguments != site_arguments) continue;
        down_witnesses |= denoting(program, down->arguments | down->implicit, *binder);
      }
      LabelSet up_witnesses;
      for (const CallConfiguration* up : backward) {
        up_witnesses |= denoting(program, up->arguments | up->implicit, *binder);
      }
      if (down_witnesses.empty() || up_witnesses.empty()) continue;
      out.push_back(Hint{site.caller, callee.name, site.label, path,
                         down_witnesses | up_witnesses});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace jeopardy::analysis
