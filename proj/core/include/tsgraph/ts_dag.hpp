#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "tsgraph/graph.hpp"

namespace tsgraph {

/// (from, t - lag) -> (to, t) for every t.
struct LaggedEdge {
  int from = 0;
  int to = 0;
  int lag = 0;

  friend bool operator==(const LaggedEdge&, const LaggedEdge&) = default;
  friend auto operator<=>(const LaggedEdge&, const LaggedEdge&) = default;
};

/// Finite generator of an infinite time series DAG: variables, order p and
/// the lagged edges that repeat at every time step.
class TsDagTemplate {
 public:
  TsDagTemplate() = default;
  /// Order is the largest lag among `edges` (0 when there are none).
  TsDagTemplate(int n_vars, std::vector<LaggedEdge> edges);
  /// Explicit order; must equal the largest lag unless `edges` is empty.
  TsDagTemplate(int n_vars, int order, std::vector<LaggedEdge> edges);

  int n_vars() const { return n_vars_; }
  int order() const { return order_; }
  /// Sorted, duplicate free.
  const std::vector<LaggedEdge>& edges() const { return edges_; }
  bool has_edge(int from, int to, int lag) const;

  /// Incoming template edges of variable `to`.
  std::vector<LaggedEdge> parents_of(int to) const;

  friend bool operator==(const TsDagTemplate&, const TsDagTemplate&) = default;

 private:
  void validate() const;

  int n_vars_ = 0;
  int order_ = 0;
  std::vector<LaggedEdge> edges_;
};

/// Observed variables plus a regular (stride 1) or subsampled (stride n)
/// window {-m*n : 0 <= m*n <= tau_max}.
struct ObservationScheme {
  std::vector<int> observed_vars;
  int tau_max = 0;
  int stride = 1;

  /// Ascending observed time offsets.
  std::vector<int> times() const;
  /// Throws SemanticError unless the scheme is usable with `n_vars` variables.
  void validate(int n_vars) const;

  static ObservationScheme all_observed(int n_vars, int tau_max, int stride = 1);
};

/// The ts-DAG restricted to offsets [-depth, 0].
WindowGraph unroll(const TsDagTemplate& tmpl, int depth);

/// Random template; each admissible (i, j, lag) is kept with probability
/// `edge_density`. Contemporaneous edges respect a random variable order.
/// The returned order is the largest lag actually drawn.
TsDagTemplate random_ts_dag(int n_vars, int max_lag, double edge_density, std::uint64_t seed);

}  // namespace tsgraph
