#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tsgraph/graph.hpp"
#include "tsgraph/ts_dag.hpp"

namespace tsgraph {

/// Background knowledge restricting a Markov equivalence class, from
/// weakest to strongest.
enum class Knowledge {
  None,
  /// Time order plus repeating orientations.
  TimeOrderOrientations,
  /// Time order plus repeating ancestral relationships.
  TimeOrderAncestral,
  /// Being a ts-DMAG.
  TsDag,
  /// Being a stationarified ts-DMAG.
  TsDagStat,
};

/// "none", "b_to", "b_ta", "b_d" or "b_d_stat".
std::string to_string(Knowledge k);
std::optional<Knowledge> knowledge_from_string(const std::string& s);

/// Whether a DMAG is consistent with the knowledge.
bool satisfies_knowledge(const WindowGraph& dmag, Knowledge k);

/// Same skeleton, same unshielded colliders, and the same collider status
/// for the discriminated vertex of every path discriminating in both.
bool markov_equivalent(const WindowGraph& m1, const WindowGraph& m2);

/// Default cap on the number of edges an enumeration may retype: 12, or the
/// value of the TSGRAPH_BUDGET environment variable when it is set.
int default_enumeration_budget();

/// Every DMAG that is Markov equivalent to `m` and satisfies `k`, sorted.
/// Throws BudgetExceeded when `m` has more than `max_edges` edges.
std::vector<WindowGraph> enumerate_class(const WindowGraph& m, Knowledge k,
                                         int max_edges = default_enumeration_budget());

/// Every DMAG with the skeleton of `g`, sorted, without any equivalence
/// filter. Meant for cross-checking on small graphs.
std::vector<WindowGraph> enumerate_skeleton_dmags(const WindowGraph& g,
                                                  int max_edges = default_enumeration_budget());

struct DpagReport {
  WindowGraph dpag;
  std::size_t class_size = 0;
  Knowledge knowledge = Knowledge::None;
};

/// Maximally informative DPAG: an edge end keeps a mark iff every class
/// member has it there, and becomes a circle otherwise.
DpagReport mi_dpag(const WindowGraph& m, Knowledge k, int max_edges = default_enumeration_budget());

/// Merges a non-empty set of DMAGs sharing one skeleton.
WindowGraph merge_marks(const std::vector<WindowGraph>& members);

/// mi_dpag of the ts-DMAG under the knowledge of an underlying ts-DAG.
DpagReport ts_dpag(const TsDagTemplate& tmpl, const ObservationScheme& scheme,
                   int max_edges = default_enumeration_budget());

enum class Informativeness { MoreInformative, LessInformative, Equal, Incomparable };

const char* to_string(Informativeness i);

/// Compares circle sets: p1 is more informative iff its circles are a
/// proper subset of p2's. Requires equal skeletons.
Informativeness compare_informativeness(const WindowGraph& p1, const WindowGraph& p2);

/// Knowledge pairs (plain side, stationarified side) for the comparison of
/// DPAGs before and after stationarification.
enum class KnowledgePair { TimeOrderOrientations, TimeOrderAncestral, TsDag };

struct MarkRef {
  Vertex at;
  Vertex other;

  friend bool operator==(const MarkRef&, const MarkRef&) = default;
};

struct StatComparison {
  WindowGraph plain;  // DPAG of the ts-DMAG
  WindowGraph stat;   // DPAG of its stationarification
  /// Non-circle marks of `stat` missing from `plain`.
  std::vector<MarkRef> violations;
  /// Marks fixed in `plain` but left as circles in `stat` on shared edges.
  std::vector<MarkRef> strict_marks;

  bool consistent() const { return violations.empty(); }
  bool strict() const { return !strict_marks.empty(); }
};

StatComparison compare_stat_dpags(const TsDagTemplate& tmpl, const ObservationScheme& scheme,
                                  KnowledgePair pair, int max_edges = default_enumeration_budget());

struct CircleWitness {
  MarkRef mark;
  /// Canonical ts-DAGs of class members with a tail and a head at the mark.
  TsDagTemplate tail_realizer;
  TsDagTemplate head_realizer;
  /// The two templates disagree on whether `at` is an ancestor of `other`.
  bool verified = false;
};

/// One witness pair per circle mark of the ts-DPAG.
std::vector<CircleWitness> circle_witnesses(const TsDagTemplate& tmpl, const ObservationScheme& scheme,
                                            int max_edges = default_enumeration_budget());

}  // namespace tsgraph
