#pragma once

#include <string>
#include <vector>

#include "tsgraph/graph.hpp"

namespace tsgraph {

enum class Property {
  TimeOrdered,
  RepeatingEdges,
  RepeatingAdjacencies,
  RepeatingOrientations,
  RepeatingAncestral,
  PastRepeatingAdjacencies,
  RepeatingSeparatingSets,
};

std::string to_string(Property p);

/// Decides a time-shift-persistent property of `g`. RepeatingAncestral needs
/// a graph without circle marks and RepeatingSeparatingSets a valid DMAG
/// (checked by enumerating every (pair, conditioning set, shift)); violations
/// of those preconditions raise SemanticError.
bool check_property(const WindowGraph& g, Property property);

/// Reflexive-transitive closure along directed edges; includes `v`.
std::vector<Vertex> ancestors_in(const WindowGraph& g, Vertex v);

/// Row-major V x V table: entry (u, v) is true iff u is an ancestor of v.
/// Only directed edges (tail/head) count.
class AncestorMatrix {
 public:
  explicit AncestorMatrix(const WindowGraph& g);
  bool is_ancestor(int u, int v) const {
    return bits_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)] != 0;
  }
  /// True iff u is an ancestor of some member of `targets`.
  bool is_ancestor_of_any(int u, const std::vector<int>& targets) const;

 private:
  std::size_t n_ = 0;
  std::vector<char> bits_;
};

struct DmagViolation {
  enum class Kind { DirectedCycle, AlmostDirectedCycle, InducingPath };
  Kind kind;
  /// Cycle or path, in traversal order.
  std::vector<Vertex> witness;
};

struct DmagReport {
  bool ancestral = true;
  bool maximal = true;
  std::vector<DmagViolation> violations;

  bool is_dmag() const { return ancestral && maximal; }
};

/// Ancestral and maximality check for graphs with tail/head marks only.
DmagReport validate_dmag(const WindowGraph& g);

/// True iff no vertex is a proper ancestor of itself along directed edges.
bool is_acyclic(const WindowGraph& g);

/// Induced subgraph on the vertices with t1 <= time <= t2. Times are kept.
WindowGraph induced_window(const WindowGraph& g, int t1, int t2);

}  // namespace tsgraph
