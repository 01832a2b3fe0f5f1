#include "tsgraph/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tsgraph/error.hpp"
#include "tsgraph/marginal.hpp"
#include "tsgraph/structure.hpp"

namespace tsgraph {

namespace {

void require_directed_mixed(const WindowGraph& g, const char* what) {
  for (const Edge& e : g.edges()) {
    if (!e.directed() && !e.bidirected()) {
      throw SemanticError(std::string(what) + " needs directed and bidirected edges only");
    }
  }
}

/// Spacing of an evenly spaced time set; 1 for a single time step.
int time_spacing(const WindowGraph& g) {
  const auto& ts = g.times();
  if (ts.empty()) throw SemanticError("graph has no time steps");
  if (ts.size() == 1) return 1;
  const int step = ts[1] - ts[0];
  for (std::size_t k = 1; k < ts.size(); ++k) {
    if (ts[k] - ts[k - 1] != step) throw SemanticError("time set is not evenly spaced");
  }
  return step;
}

/// Copy of `g` moved so its latest step is 0 and compressed to unit spacing.
struct Normalized {
  WindowGraph graph;
  int shift = 0;
  int spacing = 1;

  Edge restore(const Edge& e) const {
    auto back = [&](Vertex v) { return Vertex{v.var, v.time * spacing - shift}; };
    return {back(e.a), back(e.b), e.at_a, e.at_b};
  }
};

Normalized normalize(const WindowGraph& g) {
  Normalized n;
  n.spacing = time_spacing(g);
  n.shift = -g.times().back();
  n.graph = compress_times(shift_times(g, n.shift), n.spacing);
  return n;
}

bool time_ordered(const WindowGraph& g) { return check_property(g, Property::TimeOrdered); }

WindowGraph canonical_marginal(const WindowGraph& normalized) {
  const TsDagTemplate tmpl = canonical_ts_dag(normalized);
  std::vector<int> observed(static_cast<std::size_t>(normalized.n_vars()));
  std::iota(observed.begin(), observed.end(), 0);
  const int tau_max = static_cast<int>(normalized.times().size()) - 1;
  return ts_dmag(tmpl, {observed, tau_max, 1});
}

}  // namespace

const char* to_string(MarginalRelation r) {
  switch (r) {
    case MarginalRelation::Equal: return "equal";
    case MarginalRelation::ProperSubgraph: return "proper_subgraph";
    case MarginalRelation::ProperSupergraph: return "proper_supergraph";
    case MarginalRelation::Incomparable: return "incomparable";
  }
  return "?";
}

CanonicalDag canonical_dag(const WindowGraph& g) {
  require_directed_mixed(g, "canonical DAG");
  if (!validate_dmag(g).ancestral) throw SemanticError("canonical DAG needs an ancestral graph");
  CanonicalDag out;
  for (const Edge& e : g.edges()) {
    if (e.bidirected()) out.replaced.push_back(e);
  }
  const int n = g.n_vars();
  out.dag = WindowGraph(n + static_cast<int>(out.replaced.size()), g.times(), GraphKind::DAG);
  for (const Edge& e : g.edges()) {
    if (e.directed()) out.dag.add_edge(e.a, e.b, e.at_a, e.at_b);
  }
  for (std::size_t k = 0; k < out.replaced.size(); ++k) {
    const Edge& e = out.replaced[k];
    const Vertex l{n + static_cast<int>(k), e.a.time};
    out.dag.add_directed(l, e.a);
    out.dag.add_directed(l, e.b);
  }
  return out;
}

std::vector<LatentLabel> latent_labels(const WindowGraph& g) {
  const int spacing = time_spacing(g);
  std::set<LatentLabel> labels;
  for (const Edge& e : stationarify(g).edges()) {
    if (e.bidirected()) labels.insert({e.a.var, e.b.var, (e.b.time - e.a.time) / spacing});
  }
  return {labels.begin(), labels.end()};
}

TsDagTemplate canonical_ts_dag(const WindowGraph& g) {
  require_directed_mixed(g, "canonical ts-DAG");
  if (!is_acyclic(g)) throw SemanticError("canonical ts-DAG needs an acyclic graph");
  if (!time_ordered(g)) throw SemanticError("canonical ts-DAG needs a time ordered graph");
  const int spacing = time_spacing(g);
  const int n = g.n_vars();

  std::set<LaggedEdge> edges;
  std::set<LatentLabel> labels;
  for (const Edge& e : stationarify(g).edges()) {
    const int lag = (e.b.time - e.a.time) / spacing;
    if (e.bidirected()) {
      labels.insert({e.a.var, e.b.var, lag});
    } else if (e.at_a == Mark::Tail) {
      edges.insert({e.a.var, e.b.var, lag});
    } else {
      edges.insert({e.b.var, e.a.var, lag});  // contemporaneous, pointing to a
    }
  }
  int k = n;
  for (const LatentLabel& l : labels) {
    edges.insert({k, l.i, 0});
    edges.insert({k, l.j, l.lag});
    ++k;
  }
  return TsDagTemplate(k, {edges.begin(), edges.end()});
}

MembershipReport is_ts_dmag(const WindowGraph& g, MembershipMode mode) {
  require_directed_mixed(g, "ts-DMAG membership");
  MembershipReport report;
  if (mode == MembershipMode::Dmag) {
    if (!validate_dmag(g).is_dmag()) throw SemanticError("input is asserted to be a DMAG but is not");
  } else if (!is_acyclic(g)) {
    report.reason = "graph has a directed cycle";
    return report;
  }
  if (!time_ordered(g)) {
    report.reason = "graph is not time ordered";
    return report;
  }
  const Normalized norm = normalize(g);
  const WindowGraph marginal = canonical_marginal(norm.graph);

  const auto in_edges = norm.graph.edges();
  const auto out_edges = marginal.edges();
  std::vector<Edge> only_in, only_out;
  std::set_difference(in_edges.begin(), in_edges.end(), out_edges.begin(), out_edges.end(),
                      std::back_inserter(only_in));
  std::set_difference(out_edges.begin(), out_edges.end(), in_edges.begin(), in_edges.end(),
                      std::back_inserter(only_out));
  for (const Edge& e : only_in) report.only_in_input.push_back(norm.restore(e));
  for (const Edge& e : only_out) report.only_in_marginal.push_back(norm.restore(e));

  report.member = only_in.empty() && only_out.empty();
  if (report.member) {
    report.relation = MarginalRelation::Equal;
  } else if (only_out.empty()) {
    report.relation = MarginalRelation::ProperSubgraph;
  } else if (only_in.empty()) {
    report.relation = MarginalRelation::ProperSupergraph;
  } else {
    report.relation = MarginalRelation::Incomparable;
  }
  return report;
}

bool is_stat_ts_dmag(const WindowGraph& g) {
  require_directed_mixed(g, "stationarified ts-DMAG membership");
  if (!is_acyclic(g) || !time_ordered(g)) return false;
  const Normalized norm = normalize(g);
  return norm.graph == stationarify(canonical_marginal(norm.graph));
}

WindowGraph recover_from_stat(const WindowGraph& stat) {
  if (!is_stat_ts_dmag(stat)) {
    throw SemanticError("input is not the stationarification of a ts-DMAG");
  }
  const Normalized norm = normalize(stat);
  WindowGraph m = canonical_marginal(norm.graph);
  return shift_times(stretch_times(m, norm.spacing), -norm.shift);
}

}  // namespace tsgraph
