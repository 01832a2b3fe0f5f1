#pragma once

#include <vector>

#include "tsgraph/graph.hpp"
#include "tsgraph/ts_dag.hpp"

namespace tsgraph {

/// Element (i, j, lag) of the latent index set: a bidirected edge between
/// (i, t - lag) and (j, t) that repeats in the stationarified graph. For
/// lag 0, i < j.
struct LatentLabel {
  int i = 0;
  int j = 0;
  int lag = 0;

  friend bool operator==(const LatentLabel&, const LatentLabel&) = default;
  friend auto operator<=>(const LatentLabel&, const LatentLabel&) = default;
};

struct CanonicalDag {
  /// Original variables keep their indices; the latent for the k-th
  /// bidirected edge is variable n_vars + k, placed at the earlier
  /// endpoint's time. All other latent copies are isolated.
  WindowGraph dag;
  /// Endpoints (canonical order) of the bidirected edge behind each latent.
  std::vector<Edge> replaced;
};

/// Replaces every a <-> b by a <- l -> b. Requires an ancestral graph with
/// directed and bidirected edges only.
CanonicalDag canonical_dag(const WindowGraph& g);

/// Latent labels of `g`, taken from its stationarification and sorted.
std::vector<LatentLabel> latent_labels(const WindowGraph& g);

/// Canonical ts-DAG: original variables 0..n-1, then one latent variable
/// per label in sorted order. Needs a time ordered acyclic graph with
/// directed and bidirected edges over an evenly spaced time set; lags are
/// measured in units of that spacing.
TsDagTemplate canonical_ts_dag(const WindowGraph& g);

enum class MembershipMode {
  /// The caller asserts a DMAG; the check confirms it first.
  Dmag,
  /// Any directed mixed graph; cyclic input is simply not a member.
  MixedGraph,
};

/// How the canonical marginal relates to the input graph.
enum class MarginalRelation { Equal, ProperSubgraph, ProperSupergraph, Incomparable };

const char* to_string(MarginalRelation r);

struct MembershipReport {
  bool member = false;
  /// Set when the verdict is decided before marginalizing (cycle, time
  /// order); the diff is then empty.
  std::string reason;
  MarginalRelation relation = MarginalRelation::Equal;
  /// Typed edges present in the input but not in the canonical marginal.
  std::vector<Edge> only_in_input;
  /// Typed edges present in the canonical marginal but not in the input.
  std::vector<Edge> only_in_marginal;
};

/// Whether `g` equals the ts-DMAG of its canonical ts-DAG over its own time
/// window. Subsampled time sets are compared after dividing by the spacing.
MembershipReport is_ts_dmag(const WindowGraph& g, MembershipMode mode = MembershipMode::Dmag);

/// Whether `g` equals the stationarified ts-DMAG of its canonical ts-DAG.
bool is_stat_ts_dmag(const WindowGraph& g);

/// The unique ts-DMAG whose stationarification is `stat`.
WindowGraph recover_from_stat(const WindowGraph& stat);

}  // namespace tsgraph
