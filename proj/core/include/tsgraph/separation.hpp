#pragma once

#include <vector>

#include "tsgraph/graph.hpp"
#include "tsgraph/lag_set.hpp"
#include "tsgraph/structure.hpp"
#include "tsgraph/ts_dag.hpp"

namespace tsgraph {

/// x independent of y given cond.
struct SepQuery {
  Vertex x;
  Vertex y;
  std::vector<Vertex> cond;
};

/// d-separation in a finite DAG by walk reachability over (vertex, arrival
/// direction) states; colliders must lie in the conditioning set.
bool d_separated_finite(const WindowGraph& dag, const SepQuery& q);

/// m-separation in a DMAG: a collider (arrowheads on both path edges at the
/// vertex) is open iff it is an ancestor of cond; any other vertex is open
/// iff it is not in cond.
bool m_separated(const WindowGraph& dmag, const SepQuery& q);

/// Repeated m-separation queries against one graph, by vertex index.
class MSeparation {
 public:
  explicit MSeparation(const WindowGraph& g);
  bool separated(int x, int y, const std::vector<int>& cond) const;

 private:
  const WindowGraph* g_;
  AncestorMatrix anc_;
};

/// tau is a member iff (i, -tau) is an ancestor of (j, 0) in the infinite
/// ts-DAG generated by `tmpl`.
LagSet ancestor_lag_set(const TsDagTemplate& tmpl, int i, int j);

/// Ancestor lag sets for every ordered variable pair.
class AncestryTable {
 public:
  explicit AncestryTable(const TsDagTemplate& tmpl);

  const LagSet& lags(int i, int j) const {
    return sets_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(j)];
  }
  /// Whether u is an ancestor of w in the infinite ts-DAG.
  bool is_ancestor(Vertex u, Vertex w) const {
    return u.time <= w.time && lags(u.var, w.var).contains(w.time - u.time);
  }
  /// Whether u and w share an ancestor (possibly one of them).
  bool have_common_ancestor(Vertex u, Vertex w) const;

 private:
  int n_;
  std::vector<LagSet> sets_;
};

/// Whether u and w share an ancestor in the infinite ts-DAG. Requires
/// |u.time - w.time| <= order.
bool common_ancestor(const TsDagTemplate& tmpl, Vertex u, Vertex w);

/// Exact d-separation in the infinite ts-DAG generated by a template.
/// Construction precomputes ancestry; queries are const and thread safe.
class InfiniteSeparation {
 public:
  explicit InfiniteSeparation(const TsDagTemplate& tmpl);

  const TsDagTemplate& tmpl() const { return tmpl_; }
  const AncestryTable& ancestry() const { return ancestry_; }

  /// All query times must be <= 0.
  bool separated(const SepQuery& q) const;

 private:
  TsDagTemplate tmpl_;
  AncestryTable ancestry_;
  // deep_[(a * n + b) * (2p + 1) + (db - da + p)]: band vertices (a, da) and
  // (b, db) share an ancestor.
  std::vector<char> deep_;
};

/// Convenience wrapper around InfiniteSeparation.
bool d_separated_tsdag(const TsDagTemplate& tmpl, const SepQuery& q);

}  // namespace tsgraph
