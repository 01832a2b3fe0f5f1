#pragma once

#include "tsgraph/graph.hpp"
#include "tsgraph/ts_dag.hpp"

namespace tsgraph {

/// The ts-DMAG of `tmpl` observed through `scheme`. Observed variables are
/// renumbered 0..k-1 in increasing order of their template index; vertex
/// times are the scheme's offsets.
///
/// Two observed vertices are adjacent iff they are d-connected in the
/// infinite ts-DAG given their other observed ancestors in the window. The
/// mark at u is a tail iff u is an ancestor of the other endpoint.
WindowGraph ts_dmag(const TsDagTemplate& tmpl, const ObservationScheme& scheme);

/// induced_window(ts_dmag(tmpl, scheme), t1, t2), computing only the pairs
/// inside the section.
WindowGraph ts_dmag_window(const TsDagTemplate& tmpl, const ObservationScheme& scheme, int t1, int t2);

/// Marginal DMAG of a finite DAG onto the vertices whose variable index is
/// below `n_observed_vars` (all times kept).
WindowGraph marginalize_dag(const WindowGraph& dag, int n_observed_vars);

/// Largest subgraph with repeating edges: an edge survives iff every
/// time-shifted copy that fits in the time set is present with the same
/// type.
WindowGraph stationarify(const WindowGraph& g);

/// Regularly sampled template whose ts-DMAGs match those of `tmpl` under
/// stride `n` after dividing times by n. Variable (i, r) for r in [1, n)
/// carries index n_vars + i * (n - 1) + (r - 1) and is never observed.
TsDagTemplate subsample_to_regular(const TsDagTemplate& tmpl, int n);

/// Every lag multiplied by `n`: stride-n marginals of the result match the
/// regular marginals of `tmpl` after dividing times by n.
TsDagTemplate regular_to_subsample(const TsDagTemplate& tmpl, int n);

/// stationarify(ts_dmag) for a fully observed template with tau_max >= order;
/// also checks it against the unrolled window and throws std::logic_error on
/// mismatch.
WindowGraph no_unobservable_window(const TsDagTemplate& tmpl, int tau_max);

}  // namespace tsgraph
