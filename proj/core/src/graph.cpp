#include "tsgraph/graph.hpp"

#include <algorithm>
#include <sstream>

#include "tsgraph/error.hpp"

namespace tsgraph {

namespace {

std::uint8_t code(Mark m) { return static_cast<std::uint8_t>(m); }

char end_symbol_left(Mark m) {
  switch (m) {
    case Mark::Tail: return '-';
    case Mark::Head: return '<';
    case Mark::Circle: return 'o';
  }
  return '?';
}

char end_symbol_right(Mark m) {
  switch (m) {
    case Mark::Tail: return '-';
    case Mark::Head: return '>';
    case Mark::Circle: return 'o';
  }
  return '?';
}

}  // namespace

bool valid_mark_pair(Mark at_a, Mark at_b) {
  if (at_a == Mark::Tail) return at_b == Mark::Head;
  if (at_b == Mark::Tail) return at_a == Mark::Head;
  return true;
}

std::string arrow(Mark at_a, Mark at_b) {
  return {end_symbol_left(at_a), '-', end_symbol_right(at_b)};
}

std::string to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::DAG: return "dag";
    case GraphKind::MixedGraph: return "mixed";
    case GraphKind::DMAG: return "dmag";
    case GraphKind::DPAG: return "dpag";
  }
  return "mixed";
}

WindowGraph::WindowGraph(int n_vars, std::vector<int> times, GraphKind kind)
    : n_vars_(n_vars), times_(std::move(times)), kind_(kind) {
  if (n_vars_ < 1) throw SemanticError("graph needs at least one variable");
  if (times_.empty()) throw SemanticError("graph needs a non-empty time set");
  for (std::size_t k = 1; k < times_.size(); ++k) {
    if (times_[k] <= times_[k - 1]) throw SemanticError("time set must be strictly increasing");
  }
  const auto n = static_cast<std::size_t>(num_vertices());
  marks_.assign(n * n, 0);
  neighbors_.assign(n, {});
}

WindowGraph WindowGraph::regular(int n_vars, int tau_max, GraphKind kind) {
  if (tau_max < 0) throw SemanticError("tau_max must be non-negative");
  std::vector<int> times;
  for (int t = -tau_max; t <= 0; ++t) times.push_back(t);
  return WindowGraph(n_vars, std::move(times), kind);
}

std::optional<int> WindowGraph::index_of(Vertex v) const {
  if (v.var < 0 || v.var >= n_vars_) return std::nullopt;
  auto it = std::lower_bound(times_.begin(), times_.end(), v.time);
  if (it == times_.end() || *it != v.time) return std::nullopt;
  return static_cast<int>(it - times_.begin()) * n_vars_ + v.var;
}

int WindowGraph::index(Vertex v) const {
  auto idx = index_of(v);
  if (!idx) throw SemanticError("vertex " + to_string(v) + " is not in the graph");
  return *idx;
}

void WindowGraph::set_marks(int u, int v, std::uint8_t at_u, std::uint8_t at_v) {
  const auto n = static_cast<std::size_t>(num_vertices());
  const bool had = marks_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] != 0;
  marks_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = at_u;
  marks_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = at_v;
  const bool has = at_u != 0;
  if (had == has) return;
  auto& nu = neighbors_[static_cast<std::size_t>(u)];
  auto& nv = neighbors_[static_cast<std::size_t>(v)];
  if (has) {
    nu.insert(std::lower_bound(nu.begin(), nu.end(), v), v);
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++num_edges_;
  } else {
    nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --num_edges_;
  }
}

void WindowGraph::add_edge(Vertex a, Vertex b, Mark at_a, Mark at_b) {
  if (adjacent(a, b)) {
    throw SemanticError("duplicate edge between " + to_string(a) + " and " + to_string(b));
  }
  set_edge(a, b, at_a, at_b);
}

void WindowGraph::set_edge(Vertex a, Vertex b, Mark at_a, Mark at_b) {
  if (a == b) throw SemanticError("self loop at " + to_string(a));
  if (!valid_mark_pair(at_a, at_b)) {
    throw SemanticError("edge type " + arrow(at_a, at_b) + " is not allowed");
  }
  set_marks(index(a), index(b), code(at_a), code(at_b));
}

void WindowGraph::remove_edge(Vertex a, Vertex b) { set_marks(index(a), index(b), 0, 0); }

bool WindowGraph::adjacent(Vertex a, Vertex b) const {
  auto u = index_of(a);
  auto v = index_of(b);
  return u && v && adjacent_idx(*u, *v);
}

std::optional<Mark> WindowGraph::mark_at(Vertex at, Vertex other) const {
  auto u = index_of(at);
  auto v = index_of(other);
  if (!u || !v) return std::nullopt;
  const auto m = mark_code(*v, *u);
  if (m == 0) return std::nullopt;
  return static_cast<Mark>(m);
}

std::optional<Edge> WindowGraph::edge(Vertex a, Vertex b) const {
  if (b < a) std::swap(a, b);
  auto at_a = mark_at(a, b);
  if (!at_a) return std::nullopt;
  return Edge{a, b, *at_a, *mark_at(b, a)};
}

std::vector<Edge> WindowGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int u = 0; u < num_vertices(); ++u) {
    for (int v : neighbors(u)) {
      if (v <= u) continue;
      out.push_back(Edge{vertex(u), vertex(v), static_cast<Mark>(mark_code(v, u)),
                         static_cast<Mark>(mark_code(u, v))});
    }
  }
  return out;
}

bool WindowGraph::has_circles() const {
  return std::any_of(marks_.begin(), marks_.end(),
                     [](std::uint8_t m) { return m == code(Mark::Circle); });
}

bool is_subgraph(const WindowGraph& sub, const WindowGraph& super) {
  if (sub.n_vars() > super.n_vars()) return false;
  for (int t : sub.times()) {
    if (!std::binary_search(super.times().begin(), super.times().end(), t)) return false;
  }
  for (const Edge& e : sub.edges()) {
    auto f = super.edge(e.a, e.b);
    if (!f || *f != e) return false;
  }
  return true;
}

namespace {

WindowGraph remap_times(const WindowGraph& g, auto&& map) {
  std::vector<int> times;
  times.reserve(g.times().size());
  for (int t : g.times()) times.push_back(map(t));
  WindowGraph out(g.n_vars(), std::move(times), g.kind());
  for (const Edge& e : g.edges()) {
    out.add_edge({e.a.var, map(e.a.time)}, {e.b.var, map(e.b.time)}, e.at_a, e.at_b);
  }
  return out;
}

}  // namespace

WindowGraph shift_times(const WindowGraph& g, int delta) {
  return remap_times(g, [delta](int t) { return t + delta; });
}

WindowGraph compress_times(const WindowGraph& g, int factor) {
  if (factor < 1) throw SemanticError("time compression factor must be positive");
  for (int t : g.times()) {
    if (t % factor != 0) throw SemanticError("time offsets are not multiples of the stride");
  }
  return remap_times(g, [factor](int t) { return t / factor; });
}

WindowGraph stretch_times(const WindowGraph& g, int factor) {
  if (factor < 1) throw SemanticError("time stretch factor must be positive");
  return remap_times(g, [factor](int t) { return t * factor; });
}

std::string to_string(Vertex v) {
  std::ostringstream os;
  os << "(" << v.var << "," << v.time << ")";
  return os.str();
}

std::string to_string(const Edge& e) {
  return to_string(e.a) + " " + arrow(e.at_a, e.at_b) + " " + to_string(e.b);
}

}  // namespace tsgraph
