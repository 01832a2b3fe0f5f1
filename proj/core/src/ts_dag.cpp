#include "tsgraph/ts_dag.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "tsgraph/error.hpp"

namespace tsgraph {

TsDagTemplate::TsDagTemplate(int n_vars, std::vector<LaggedEdge> edges)
    : n_vars_(n_vars), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& e : edges_) order_ = std::max(order_, e.lag);
  validate();
}

TsDagTemplate::TsDagTemplate(int n_vars, int order, std::vector<LaggedEdge> edges)
    : n_vars_(n_vars), order_(order), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  validate();
  if (!edges_.empty()) {
    int max_lag = 0;
    for (const auto& e : edges_) max_lag = std::max(max_lag, e.lag);
    if (max_lag != order_) {
      throw SemanticError("template order " + std::to_string(order_) +
                          " differs from the largest edge lag " + std::to_string(max_lag));
    }
  }
}

void TsDagTemplate::validate() const {
  if (n_vars_ < 1) throw SemanticError("template needs at least one variable");
  if (order_ < 0) throw SemanticError("template order must be non-negative");
  for (const auto& e : edges_) {
    if (e.from < 0 || e.from >= n_vars_ || e.to < 0 || e.to >= n_vars_) {
      throw SemanticError("template edge refers to an unknown variable");
    }
    if (e.lag < 0) throw SemanticError("template edges may not point backwards in time");
    if (e.lag > order_) throw SemanticError("template edge lag exceeds the order");
    if (e.lag == 0 && e.from == e.to) throw SemanticError("contemporaneous self loop");
  }
  // Kahn's algorithm on the contemporaneous subgraph.
  std::vector<int> indegree(static_cast<std::size_t>(n_vars_), 0);
  for (const auto& e : edges_) {
    if (e.lag == 0) ++indegree[static_cast<std::size_t>(e.to)];
  }
  std::vector<int> ready;
  for (int v = 0; v < n_vars_; ++v) {
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  }
  int seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& e : edges_) {
      if (e.lag == 0 && e.from == v && --indegree[static_cast<std::size_t>(e.to)] == 0) {
        ready.push_back(e.to);
      }
    }
  }
  if (seen != n_vars_) throw SemanticError("contemporaneous edges form a directed cycle");
}

bool TsDagTemplate::has_edge(int from, int to, int lag) const {
  return std::binary_search(edges_.begin(), edges_.end(), LaggedEdge{from, to, lag});
}

std::vector<LaggedEdge> TsDagTemplate::parents_of(int to) const {
  std::vector<LaggedEdge> out;
  for (const auto& e : edges_) {
    if (e.to == to) out.push_back(e);
  }
  return out;
}

std::vector<int> ObservationScheme::times() const {
  std::vector<int> out;
  for (int off = (tau_max / stride) * stride; off >= 0; off -= stride) out.push_back(-off);
  return out;
}

void ObservationScheme::validate(int n_vars) const {
  if (observed_vars.empty()) throw SemanticError("observed variable set is empty");
  if (tau_max < 0) throw SemanticError("tau_max must be non-negative");
  if (stride < 1) throw SemanticError("stride must be positive");
  auto sorted = observed_vars;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw SemanticError("observed variables contain duplicates");
  }
  if (sorted.front() < 0 || sorted.back() >= n_vars) {
    throw SemanticError("observed variable index out of range");
  }
}

ObservationScheme ObservationScheme::all_observed(int n_vars, int tau_max, int stride) {
  ObservationScheme s;
  s.observed_vars.resize(static_cast<std::size_t>(n_vars));
  std::iota(s.observed_vars.begin(), s.observed_vars.end(), 0);
  s.tau_max = tau_max;
  s.stride = stride;
  return s;
}

WindowGraph unroll(const TsDagTemplate& tmpl, int depth) {
  if (depth < 0) throw SemanticError("unroll depth must be non-negative");
  auto g = WindowGraph::regular(tmpl.n_vars(), depth, GraphKind::DAG);
  for (int t = -depth; t <= 0; ++t) {
    for (const auto& e : tmpl.edges()) {
      if (t - e.lag < -depth) continue;
      g.add_directed({e.from, t - e.lag}, {e.to, t});
    }
  }
  return g;
}

TsDagTemplate random_ts_dag(int n_vars, int max_lag, double edge_density, std::uint64_t seed) {
  if (n_vars < 1) throw SemanticError("template needs at least one variable");
  if (max_lag < 0) throw SemanticError("max lag must be non-negative");
  if (!(edge_density >= 0.0 && edge_density <= 1.0)) {
    throw SemanticError("edge density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(edge_density);
  std::vector<int> rank(static_cast<std::size_t>(n_vars));
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);

  std::vector<LaggedEdge> edges;
  for (int lag = 0; lag <= max_lag; ++lag) {
    for (int i = 0; i < n_vars; ++i) {
      for (int j = 0; j < n_vars; ++j) {
        if (lag == 0 && rank[static_cast<std::size_t>(i)] >= rank[static_cast<std::size_t>(j)]) {
          continue;
        }
        if (keep(rng)) edges.push_back({i, j, lag});
      }
    }
  }
  return TsDagTemplate(n_vars, std::move(edges));
}

}  // namespace tsgraph
