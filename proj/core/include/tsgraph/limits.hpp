#pragma once

#include <string>

#include "tsgraph/equivalence.hpp"
#include "tsgraph/error.hpp"
#include "tsgraph/graph.hpp"
#include "tsgraph/ts_dag.hpp"

namespace tsgraph {

/// Comparison of the ts-DMAGs (and optionally ts-DPAGs) of one template for
/// two window lengths tau_max < tau_tilde.
struct WindowComparison {
  /// The latest tau_max + 1 steps of the larger graph form a subgraph of
  /// the smaller graph.
  bool latest_subgraph = false;
  /// ... and a proper one.
  bool latest_proper = false;
  /// The earliest tau_max + 1 steps of the larger graph equal the smaller
  /// graph after moving them to end at 0.
  bool earliest_equal = false;
  /// DPAG checks, only filled when requested.
  bool dpags_compared = false;
  /// Non-circle marks of the smaller DPAG persist in the larger one on
  /// shared edges.
  bool marks_monotone = true;
  /// Circles in the latest window of the larger DPAG are circles in the
  /// smaller DPAG.
  bool circles_contained = true;
  /// Some mark is fixed in the larger DPAG but a circle in the smaller.
  bool marks_gained = false;

  bool holds() const { return latest_subgraph && earliest_equal && marks_monotone && circles_contained; }
};

/// `scheme` fixes the observed variables, stride and tau_max; `tau_tilde`
/// must exceed tau_max and fit the stride.
WindowComparison window_compare(const TsDagTemplate& tmpl, const ObservationScheme& scheme, int tau_tilde,
                                bool compare_dpags = false, int max_edges = default_enumeration_budget());

struct LimitResult {
  WindowGraph graph;
  /// Window length at which the last change was observed plus the
  /// stability window.
  int tau_tilde = 0;
  /// Consecutive unchanged deepening steps seen at the end.
  int stable_steps = 0;
  /// Whether no adjacency reappeared after vanishing during deepening.
  bool adjacency_monotone = true;
};

/// Raised when deepening hits the iteration cap before stabilizing.
class LimitNotReached : public SemanticError {
 public:
  LimitNotReached(const std::string& what, LimitResult partial)
      : SemanticError(what), partial_(std::move(partial)) {}
  const LimitResult& partial() const { return partial_; }

 private:
  LimitResult partial_;
};

/// n_vars * order + tau_max + 1.
int default_stability_window(const TsDagTemplate& tmpl, int tau_max);

struct LimitOptions {
  /// 0 selects default_stability_window.
  int stability_window = 0;
  int max_iterations = 200;
  int max_edges = default_enumeration_budget();
};

/// Deepens the window one sampled step at a time and returns the section
/// [-tau_max, 0] once it stays unchanged for the stability window.
LimitResult limiting_ts_dmag(const TsDagTemplate& tmpl, const ObservationScheme& scheme,
                             const LimitOptions& options = {});

/// As limiting_ts_dmag, for the section of the ts-DPAG.
LimitResult limiting_ts_dpag(const TsDagTemplate& tmpl, const ObservationScheme& scheme,
                             const LimitOptions& options = {});

}  // namespace tsgraph
