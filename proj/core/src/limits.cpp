#include "tsgraph/limits.hpp"

#include <functional>

#include "tsgraph/marginal.hpp"
#include "tsgraph/structure.hpp"

namespace tsgraph {

namespace {

ObservationScheme with_tau_max(ObservationScheme s, int tau_max) {
  s.tau_max = tau_max;
  return s;
}

/// Latest sampled offset range of the smaller window.
int section_start(const ObservationScheme& s) { return s.times().front(); }

/// Section [start, 0] of the window of length `tau_tilde`.
using SectionFn = std::function<WindowGraph(int tau_tilde)>;

LimitResult deepen(const TsDagTemplate& tmpl, const ObservationScheme& scheme, const LimitOptions& options,
                   const SectionFn& section) {
  const int window = options.stability_window > 0 ? options.stability_window
                                                  : default_stability_window(tmpl, scheme.tau_max);
  const int step = scheme.stride;
  LimitResult result;
  result.tau_tilde = scheme.tau_max;
  result.graph = section(scheme.tau_max);
  std::vector<std::vector<char>> lost(static_cast<std::size_t>(result.graph.num_vertices()),
                                      std::vector<char>(static_cast<std::size_t>(result.graph.num_vertices()), 0));
  for (int it = 0; it < options.max_iterations; ++it) {
    const int tau_tilde = result.tau_tilde + step;
    WindowGraph next = section(tau_tilde);
    const int n = next.num_vertices();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const bool before = result.graph.adjacent_idx(u, v);
        const bool now = next.adjacent_idx(u, v);
        if (before && !now) lost[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        if (now && lost[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) result.adjacency_monotone = false;
      }
    }
    result.stable_steps = next == result.graph ? result.stable_steps + 1 : 0;
    result.graph = std::move(next);
    result.tau_tilde = tau_tilde;
    if (result.stable_steps >= window) return result;
  }
  throw LimitNotReached("window section did not stabilize within " + std::to_string(options.max_iterations) +
                            " deepening steps",
                        result);
}

}  // namespace

int default_stability_window(const TsDagTemplate& tmpl, int tau_max) {
  return tmpl.n_vars() * tmpl.order() + tau_max + 1;
}

WindowComparison window_compare(const TsDagTemplate& tmpl, const ObservationScheme& scheme, int tau_tilde,
                                bool compare_dpags, int max_edges) {
  const ObservationScheme big = with_tau_max(scheme, tau_tilde);
  if (tau_tilde <= scheme.tau_max) throw SemanticError("tau_tilde must exceed tau_max");
  if (big.times().front() == scheme.times().front()) {
    throw SemanticError("tau_tilde adds no sampled step at this stride");
  }
  const WindowGraph m = ts_dmag(tmpl, scheme);
  const WindowGraph mt = ts_dmag(tmpl, big);
  const int start = section_start(scheme);
  const int earliest = big.times().front();

  WindowComparison out;
  const WindowGraph latest = induced_window(mt, start, 0);
  out.latest_subgraph = is_subgraph(latest, m);
  out.latest_proper = out.latest_subgraph && latest.num_edges() < m.num_edges();
  out.earliest_equal = shift_times(induced_window(mt, earliest, earliest - start), start - earliest) == m;

  if (compare_dpags) {
    out.dpags_compared = true;
    const WindowGraph p = mi_dpag(m, Knowledge::TsDag, max_edges).dpag;
    const WindowGraph pt = mi_dpag(mt, Knowledge::TsDag, max_edges).dpag;
    for (const Edge& e : p.edges()) {
      auto f = pt.edge(e.a, e.b);
      if (!f) continue;
      auto check = [&](Mark small, Mark large) {
        if (small != Mark::Circle && small != large) out.marks_monotone = false;
        if (small == Mark::Circle && large != Mark::Circle) out.marks_gained = true;
      };
      check(e.at_a, f->at_a);
      check(e.at_b, f->at_b);
    }
    for (const Edge& e : induced_window(pt, start, 0).edges()) {
      auto f = p.edge(e.a, e.b);
      if (!f) continue;
      if ((e.at_a == Mark::Circle && f->at_a != Mark::Circle) ||
          (e.at_b == Mark::Circle && f->at_b != Mark::Circle)) {
        out.circles_contained = false;
      }
    }
  }
  return out;
}

LimitResult limiting_ts_dmag(const TsDagTemplate& tmpl, const ObservationScheme& scheme,
                             const LimitOptions& options) {
  const int start = section_start(scheme);
  return deepen(tmpl, scheme, options, [&](int tau_tilde) {
    return ts_dmag_window(tmpl, with_tau_max(scheme, tau_tilde), start, 0);
  });
}

LimitResult limiting_ts_dpag(const TsDagTemplate& tmpl, const ObservationScheme& scheme,
                             const LimitOptions& options) {
  const int start = section_start(scheme);
  return deepen(tmpl, scheme, options, [&](int tau_tilde) {
    const WindowGraph m = ts_dmag(tmpl, with_tau_max(scheme, tau_tilde));
    return induced_window(mi_dpag(m, Knowledge::TsDag, options.max_edges).dpag, start, 0);
  });
}

}  // namespace tsgraph
