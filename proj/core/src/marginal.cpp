#include "tsgraph/marginal.hpp"

#include <algorithm>
#include <stdexcept>

#include "tsgraph/error.hpp"
#include "tsgraph/separation.hpp"
#include "tsgraph/structure.hpp"

namespace tsgraph {

namespace {

/// Marginal over the scheme's window, keeping only the pairs whose endpoints
/// both lie in [t1, t2] (the conditioning sets still range over the window).
WindowGraph marginal_section(const TsDagTemplate& tmpl, const ObservationScheme& scheme, int t1, int t2) {
  scheme.validate(tmpl.n_vars());
  std::vector<int> observed = scheme.observed_vars;
  std::sort(observed.begin(), observed.end());

  WindowGraph out(static_cast<int>(observed.size()), scheme.times(), GraphKind::DMAG);
  const int n = out.num_vertices();
  // Template-level vertex for every graph vertex.
  std::vector<Vertex> orig(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    const Vertex v = out.vertex(u);
    orig[static_cast<std::size_t>(u)] = {observed[static_cast<std::size_t>(v.var)], v.time};
  }

  const InfiniteSeparation sep(tmpl);
  const AncestryTable& anc = sep.ancestry();
  std::vector<char> is_anc(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int w = 0; w < n; ++w) {
      is_anc[static_cast<std::size_t>(u * n + w)] =
          anc.is_ancestor(orig[static_cast<std::size_t>(u)], orig[static_cast<std::size_t>(w)]);
    }
  }

  auto in_section = [&](int u) {
    const int t = out.vertex(u).time;
    return t >= t1 && t <= t2;
  };
  for (int u = 0; u < n; ++u) {
    if (!in_section(u)) continue;
    for (int w = u + 1; w < n; ++w) {
      if (!in_section(w)) continue;
      SepQuery q{orig[static_cast<std::size_t>(u)], orig[static_cast<std::size_t>(w)], {}};
      for (int z = 0; z < n; ++z) {
        if (z == u || z == w) continue;
        if (is_anc[static_cast<std::size_t>(z * n + u)] || is_anc[static_cast<std::size_t>(z * n + w)]) {
          q.cond.push_back(orig[static_cast<std::size_t>(z)]);
        }
      }
      if (sep.separated(q)) continue;
      const Mark at_u = is_anc[static_cast<std::size_t>(u * n + w)] ? Mark::Tail : Mark::Head;
      const Mark at_w = is_anc[static_cast<std::size_t>(w * n + u)] ? Mark::Tail : Mark::Head;
      out.add_edge(out.vertex(u), out.vertex(w), at_u, at_w);
    }
  }
  return out;
}

}  // namespace

WindowGraph ts_dmag(const TsDagTemplate& tmpl, const ObservationScheme& scheme) {
  return marginal_section(tmpl, scheme, -scheme.tau_max, 0);
}

WindowGraph ts_dmag_window(const TsDagTemplate& tmpl, const ObservationScheme& scheme, int t1, int t2) {
  return induced_window(marginal_section(tmpl, scheme, t1, t2), t1, t2);
}

WindowGraph marginalize_dag(const WindowGraph& dag, int n_observed_vars) {
  if (n_observed_vars < 1 || n_observed_vars > dag.n_vars()) {
    throw SemanticError("observed variable count out of range");
  }
  if (!is_acyclic(dag)) throw SemanticError("marginalization needs an acyclic graph");
  WindowGraph out(n_observed_vars, dag.times(), GraphKind::DMAG);
  const AncestorMatrix anc(dag);
  const int n = out.num_vertices();
  std::vector<int> orig(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) orig[static_cast<std::size_t>(u)] = dag.index(out.vertex(u));

  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      const int ou = orig[static_cast<std::size_t>(u)];
      const int ow = orig[static_cast<std::size_t>(w)];
      SepQuery q{out.vertex(u), out.vertex(w), {}};
      for (int z = 0; z < n; ++z) {
        const int oz = orig[static_cast<std::size_t>(z)];
        if (z != u && z != w && (anc.is_ancestor(oz, ou) || anc.is_ancestor(oz, ow))) {
          q.cond.push_back(out.vertex(z));
        }
      }
      if (d_separated_finite(dag, q)) continue;
      out.add_edge(out.vertex(u), out.vertex(w), anc.is_ancestor(ou, ow) ? Mark::Tail : Mark::Head,
                   anc.is_ancestor(ow, ou) ? Mark::Tail : Mark::Head);
    }
  }
  return out;
}

WindowGraph stationarify(const WindowGraph& g) {
  WindowGraph out(g.n_vars(), g.times(), g.kind());
  const auto& ts = g.times();
  for (const Edge& e : g.edges()) {
    bool keep = true;
    for (int t : ts) {
      const int dt = t - e.a.time;
      if (!std::binary_search(ts.begin(), ts.end(), e.b.time + dt)) continue;
      auto f = g.edge({e.a.var, e.a.time + dt}, {e.b.var, e.b.time + dt});
      if (!f || f->at_a != e.at_a || f->at_b != e.at_b) {
        keep = false;
        break;
      }
    }
    if (keep) out.add_edge(e.a, e.b, e.at_a, e.at_b);
  }
  return out;
}

TsDagTemplate subsample_to_regular(const TsDagTemplate& tmpl, int n) {
  if (n < 2) throw SemanticError("stride must be at least 2");
  const int nv = tmpl.n_vars();
  // Variable standing for (i, t) with t = n * s - r, 0 <= r < n, at time s.
  auto var = [&](int i, int r) { return r == 0 ? i : nv + i * (n - 1) + (r - 1); };
  std::vector<LaggedEdge> edges;
  for (const auto& e : tmpl.edges()) {
    for (int r = 0; r < n; ++r) {
      edges.push_back({var(e.from, (r + e.lag) % n), var(e.to, r), (r + e.lag) / n});
    }
  }
  return TsDagTemplate(nv * n, std::move(edges));
}

TsDagTemplate regular_to_subsample(const TsDagTemplate& tmpl, int n) {
  if (n < 2) throw SemanticError("stride must be at least 2");
  std::vector<LaggedEdge> edges;
  for (const auto& e : tmpl.edges()) edges.push_back({e.from, e.to, e.lag * n});
  return TsDagTemplate(tmpl.n_vars(), tmpl.order() * n, std::move(edges));
}

WindowGraph no_unobservable_window(const TsDagTemplate& tmpl, int tau_max) {
  if (tau_max < tmpl.order()) {
    throw SemanticError("tau_max must be at least the template order");
  }
  WindowGraph stat = stationarify(ts_dmag(tmpl, ObservationScheme::all_observed(tmpl.n_vars(), tau_max)));
  WindowGraph window = unroll(tmpl, tau_max);
  if (!(stat == window)) {
    throw std::logic_error("stationarified ts-DMAG differs from the unrolled window");
  }
  stat.set_kind(GraphKind::DAG);
  return stat;
}

}  // namespace tsgraph
