#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tsgraph/structure.hpp"

namespace tsgraph::testing {

Instance random_instance(Rng& rng, const CorpusSpec& spec) {
  for (;;) {
    Instance in;
    in.seed = rng.next();
    const int n = rng.uniform(1, spec.max_vars);
    const int p = rng.uniform(0, spec.max_lag);
    const double density = rng.real(spec.min_density, spec.max_density);
    in.tmpl = random_ts_dag(n, p, density, in.seed);
    const int latent = rng.uniform(0, std::min(spec.max_latent, n - 1));
    std::vector<int> vars(static_cast<std::size_t>(n));
    std::iota(vars.begin(), vars.end(), 0);
    std::shuffle(vars.begin(), vars.end(), rng.engine());
    vars.resize(static_cast<std::size_t>(n - latent));
    std::sort(vars.begin(), vars.end());
    in.scheme = {vars, rng.uniform(0, spec.max_tau), 1};
    const int observed = static_cast<int>(vars.size()) * (in.scheme.tau_max + 1);
    if (spec.max_observed_vertices > 0 && observed > spec.max_observed_vertices) continue;
    return in;
  }
}

std::vector<Instance> make_corpus(std::size_t count, std::uint64_t seed, const CorpusSpec& spec) {
  Rng rng(seed);
  std::vector<Instance> out;
  out.reserve(count);
  while (out.size() < count) out.push_back(random_instance(rng, spec));
  return out;
}

SepQuery random_query(Rng& rng, const TsDagTemplate& tmpl, int max_depth) {
  const int n = tmpl.n_vars();
  auto vertex = [&] { return Vertex{rng.uniform(0, n - 1), -rng.uniform(0, max_depth)}; };
  SepQuery q{vertex(), vertex(), {}};
  while (q.y == q.x) {
    if (n == 1 && max_depth == 0) throw std::invalid_argument("no room for two distinct vertices");
    q.y = vertex();
  }
  for (int c = rng.uniform(0, 3); c > 0; --c) {
    const Vertex v = vertex();
    if (v != q.x && v != q.y && std::find(q.cond.begin(), q.cond.end(), v) == q.cond.end()) q.cond.push_back(v);
  }
  return q;
}

int certified_depth(const TsDagTemplate& tmpl, const SepQuery& q) {
  int lo = std::min(q.x.time, q.y.time);
  for (const Vertex& c : q.cond) lo = std::min(lo, c.time);
  const int n = tmpl.n_vars();
  const int p = tmpl.order();
  return -lo + p + n * n * (p + 1) * (p + 1);
}

namespace {

template <typename Blocked>
bool separated_by_paths(const WindowGraph& g, const SepQuery& q, Blocked&& blocked) {
  const int x = g.index(q.x);
  const int y = g.index(q.y);
  std::vector<int> path{x};
  std::vector<char> on(static_cast<std::size_t>(g.num_vertices()), 0);
  on[static_cast<std::size_t>(x)] = 1;
  bool connected = false;
  auto dfs = [&](auto&& self, int v) -> void {
    if (connected) return;
    for (int w : g.neighbors(v)) {
      if (on[static_cast<std::size_t>(w)]) continue;
      if (path.size() >= 2 && blocked(path[path.size() - 2], v, w)) continue;
      if (w == y) {
        connected = true;
        return;
      }
      path.push_back(w);
      on[static_cast<std::size_t>(w)] = 1;
      self(self, w);
      on[static_cast<std::size_t>(w)] = 0;
      path.pop_back();
      if (connected) return;
    }
  };
  dfs(dfs, x);
  return !connected;
}

constexpr auto kHead = static_cast<std::uint8_t>(Mark::Head);

}  // namespace

bool d_separated_paths(const WindowGraph& dag, const SepQuery& q) {
  const AncestorMatrix anc(dag);
  std::vector<int> cond;
  std::vector<char> in_cond(static_cast<std::size_t>(dag.num_vertices()), 0);
  for (const Vertex& c : q.cond) {
    cond.push_back(dag.index(c));
    in_cond[static_cast<std::size_t>(dag.index(c))] = 1;
  }
  return separated_by_paths(dag, q, [&](int prev, int v, int next) {
    const bool collider = dag.is_parent_idx(prev, v) && dag.is_parent_idx(next, v);
    if (collider) return !anc.is_ancestor_of_any(v, cond);
    return in_cond[static_cast<std::size_t>(v)] != 0;
  });
}

bool m_separated_paths(const WindowGraph& g, const SepQuery& q) {
  const AncestorMatrix anc(g);
  std::vector<int> cond;
  std::vector<char> in_cond(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const Vertex& c : q.cond) {
    cond.push_back(g.index(c));
    in_cond[static_cast<std::size_t>(g.index(c))] = 1;
  }
  return separated_by_paths(g, q, [&](int prev, int v, int next) {
    const bool collider = g.mark_code(prev, v) == kHead && g.mark_code(next, v) == kHead;
    if (collider) return !anc.is_ancestor_of_any(v, cond);
    return in_cond[static_cast<std::size_t>(v)] != 0;
  });
}

WindowGraph ts_dmag_by_subsets(const TsDagTemplate& tmpl, const ObservationScheme& scheme) {
  std::vector<int> observed = scheme.observed_vars;
  std::sort(observed.begin(), observed.end());
  WindowGraph out(static_cast<int>(observed.size()), scheme.times(), GraphKind::DMAG);
  const int nv = out.num_vertices();
  std::vector<Vertex> orig;
  for (int u = 0; u < nv; ++u) {
    const Vertex v = out.vertex(u);
    orig.push_back({observed[static_cast<std::size_t>(v.var)], v.time});
  }
  const int depth = certified_depth(tmpl, {orig.front(), orig.front(), {}});
  const WindowGraph dag = unroll(tmpl, depth);
  const AncestorMatrix anc(dag);

  for (int u = 0; u < nv; ++u) {
    for (int w = u + 1; w < nv; ++w) {
      std::vector<Vertex> others;
      for (int z = 0; z < nv; ++z) {
        if (z != u && z != w) others.push_back(orig[static_cast<std::size_t>(z)]);
      }
      bool separable = false;
      for (std::uint32_t mask = 0; mask < (1u << others.size()) && !separable; ++mask) {
        SepQuery q{orig[static_cast<std::size_t>(u)], orig[static_cast<std::size_t>(w)], {}};
        for (std::size_t k = 0; k < others.size(); ++k) {
          if (mask & (1u << k)) q.cond.push_back(others[k]);
        }
        separable = d_separated_finite(dag, q);
      }
      if (separable) continue;
      const int du = dag.index(orig[static_cast<std::size_t>(u)]);
      const int dw = dag.index(orig[static_cast<std::size_t>(w)]);
      out.add_edge(out.vertex(u), out.vertex(w), anc.is_ancestor(du, dw) ? Mark::Tail : Mark::Head,
                   anc.is_ancestor(dw, du) ? Mark::Tail : Mark::Head);
    }
  }
  return out;
}

bool same_m_separations(const WindowGraph& a, const WindowGraph& b) {
  const MSeparation sa(a);
  const MSeparation sb(b);
  const int n = a.num_vertices();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      std::vector<int> others;
      for (int z = 0; z < n; ++z) {
        if (z != x && z != y) others.push_back(z);
      }
      for (std::uint32_t mask = 0; mask < (1u << others.size()); ++mask) {
        std::vector<int> cond;
        for (std::size_t k = 0; k < others.size(); ++k) {
          if (mask & (1u << k)) cond.push_back(others[k]);
        }
        if (sa.separated(x, y, cond) != sb.separated(x, y, cond)) return false;
      }
    }
  }
  return true;
}

WindowGraph random_dag(Rng& rng, int n_vars, const std::vector<int>& times, double density) {
  WindowGraph g(n_vars, times, GraphKind::DAG);
  std::vector<int> order(static_cast<std::size_t>(g.num_vertices()));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng.engine());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (rng.coin(density)) g.add_directed(g.vertex(order[i]), g.vertex(order[j]));
    }
  }
  return g;
}

std::vector<Vertex> vertices_of(const WindowGraph& g) {
  std::vector<Vertex> out;
  for (int u = 0; u < g.num_vertices(); ++u) out.push_back(g.vertex(u));
  return out;
}

}  // namespace tsgraph::testing
