#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "jeopardy/label.hpp"
#include "jeopardy/syntax.hpp"

namespace jeopardy {

enum class NodeKind { variable, constructor, application, case_ };

std::string_view to_string(NodeKind kind);

/// What a numbered label points at.
struct LabelInfo {
  Name function;
  NodeKind kind;
  SourceSpan span;
  /// For variable nodes: the variable's name.
  Name variable;
  /// For variable nodes: the label of the binding occurrence (itself when it
  /// is the binder). Absent for wildcards and unbound uses.
  std::optional<Label> binder;
};

/// A core program in which every pattern and term node carries a unique
/// numbered label 0..N-1.
class LabeledProgram {
 public:
  const Program& program() const { return program_; }
  std::uint32_t label_count() const { return static_cast<std::uint32_t>(index_.size()); }
  const LabelInfo& info(Label label) const { return index_.at(label.index()); }
  const std::vector<LabelInfo>& index() const { return index_; }

  const FunctionDefinition* function(std::string_view name) const;
  const FunctionDefinition& main_function() const;

  /// labels(p, t) of a definition: everything in its parameter and body.
  const LabelSet& labels_of_function(std::string_view name) const;

 private:
  friend LabeledProgram annotate(const Program& program);

  Program program_;
  std::vector<LabelInfo> index_;
  std::map<Name, std::size_t, std::less<>> function_positions_;
  std::map<Name, LabelSet, std::less<>> function_labels_;
};

/// Labels a core program. Definitions are visited in source order; within a
/// function the parameter comes first, then the body, each in pre-order with
/// children left to right. A PatternTerm shares its root pattern's label.
LabeledProgram annotate(const Program& program);

/// All labels on the node and its descendants.
LabelSet labels_of(const Pattern& pattern);
LabelSet labels_of(const Term& term);

}  // namespace jeopardy
