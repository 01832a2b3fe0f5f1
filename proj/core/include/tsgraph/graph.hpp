#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tsgraph {

/// A vertex (variable, time). Times are non-positive offsets from the
/// reference step 0.
struct Vertex {
  int var = 0;
  int time = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  // Canonical order is lexicographic by (time, var).
  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
    if (auto c = a.time <=> b.time; c != 0) return c;
    return a.var <=> b.var;
  }
};

enum class Mark : std::uint8_t { Tail = 1, Head = 2, Circle = 3 };

/// One edge of a directed partial mixed graph, stored with a < b.
struct Edge {
  Vertex a;
  Vertex b;
  Mark at_a = Mark::Tail;
  Mark at_b = Mark::Head;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge& x, const Edge& y) {
    if (auto c = x.a <=> y.a; c != 0) return c;
    if (auto c = x.b <=> y.b; c != 0) return c;
    if (auto c = x.at_a <=> y.at_a; c != 0) return c;
    return x.at_b <=> y.at_b;
  }

  bool directed() const { return at_a == Mark::Tail || at_b == Mark::Tail; }
  bool bidirected() const { return at_a == Mark::Head && at_b == Mark::Head; }
  bool has_circle() const { return at_a == Mark::Circle || at_b == Mark::Circle; }
};

/// Whether (at_a, at_b) is one of the edge types of a directed partial mixed
/// graph: -->, <--, <->, o->, <-o, o-o.
bool valid_mark_pair(Mark at_a, Mark at_b);

/// Arrow notation of an edge read from a to b, e.g. "-->" or "<-o".
std::string arrow(Mark at_a, Mark at_b);

enum class GraphKind : std::uint8_t { DAG, MixedGraph, DMAG, DPAG };

std::string to_string(GraphKind kind);

/// Finite directed partial mixed graph over I x T with at most one edge per
/// vertex pair. Vertices are indexed by (time position, var) so that index
/// order equals the canonical vertex order. Edge marks live in a dense
/// matrix: `mark_code(u, v)` is the mark at v on the edge u *-* v, or 0.
class WindowGraph {
 public:
  WindowGraph() = default;
  /// `times` must be strictly increasing.
  WindowGraph(int n_vars, std::vector<int> times, GraphKind kind = GraphKind::MixedGraph);

  /// Time set {-tau_max, ..., 0}.
  static WindowGraph regular(int n_vars, int tau_max, GraphKind kind = GraphKind::MixedGraph);

  int n_vars() const { return n_vars_; }
  const std::vector<int>& times() const { return times_; }
  int num_vertices() const { return n_vars_ * static_cast<int>(times_.size()); }
  GraphKind kind() const { return kind_; }
  void set_kind(GraphKind kind) { kind_ = kind; }

  bool contains(Vertex v) const { return index_of(v).has_value(); }
  std::optional<int> index_of(Vertex v) const;
  /// Like index_of but throws SemanticError for undeclared vertices.
  int index(Vertex v) const;
  Vertex vertex(int idx) const {
    return {idx % n_vars_, times_[static_cast<std::size_t>(idx / n_vars_)]};
  }

  /// Adds an edge a *-* b with the given marks; rejects duplicates, self
  /// loops, undeclared vertices and mark pairs outside the allowed types.
  void add_edge(Vertex a, Vertex b, Mark at_a, Mark at_b);
  void add_directed(Vertex from, Vertex to) { add_edge(from, to, Mark::Tail, Mark::Head); }
  void add_bidirected(Vertex a, Vertex b) { add_edge(a, b, Mark::Head, Mark::Head); }
  /// Overwrites the marks of an existing edge, or adds it.
  void set_edge(Vertex a, Vertex b, Mark at_a, Mark at_b);
  void remove_edge(Vertex a, Vertex b);

  bool adjacent(Vertex a, Vertex b) const;
  bool adjacent_idx(int u, int v) const { return mark_code(u, v) != 0; }
  std::uint8_t mark_code(int u, int v) const {
    return marks_[static_cast<std::size_t>(u) * static_cast<std::size_t>(num_vertices()) +
                  static_cast<std::size_t>(v)];
  }
  /// Mark at `at` on the edge between `at` and `other`, if adjacent.
  std::optional<Mark> mark_at(Vertex at, Vertex other) const;
  std::optional<Edge> edge(Vertex a, Vertex b) const;

  /// All edges in canonical order.
  std::vector<Edge> edges() const;
  std::size_t num_edges() const { return num_edges_; }
  const std::vector<int>& neighbors(int u) const { return neighbors_[static_cast<std::size_t>(u)]; }

  bool has_circles() const;
  /// u -> v, i.e. tail at u and head at v.
  bool is_parent_idx(int u, int v) const {
    return mark_code(v, u) == static_cast<std::uint8_t>(Mark::Tail) &&
           mark_code(u, v) == static_cast<std::uint8_t>(Mark::Head);
  }

  /// Structural equality: vertex set and typed edge set; the kind tag is
  /// advisory and ignored.
  friend bool operator==(const WindowGraph& x, const WindowGraph& y) {
    return x.n_vars_ == y.n_vars_ && x.times_ == y.times_ && x.marks_ == y.marks_;
  }

 private:
  void set_marks(int u, int v, std::uint8_t at_u, std::uint8_t at_v);

  int n_vars_ = 0;
  std::vector<int> times_;
  GraphKind kind_ = GraphKind::MixedGraph;
  std::vector<std::uint8_t> marks_;
  std::vector<std::vector<int>> neighbors_;
  std::size_t num_edges_ = 0;
};

/// Subgraph relation on typed edges: every edge of `sub` is in `super` with
/// the same type and sub's vertices are a subset of super's.
bool is_subgraph(const WindowGraph& sub, const WindowGraph& super);

/// Copy of `g` with every time offset moved by `delta`.
WindowGraph shift_times(const WindowGraph& g, int delta);

/// Copy of `g` with every time offset divided by `factor` (all offsets must
/// be multiples of it).
WindowGraph compress_times(const WindowGraph& g, int factor);

/// Copy of `g` with every time offset multiplied by `factor`.
WindowGraph stretch_times(const WindowGraph& g, int factor);

std::string to_string(Vertex v);
std::string to_string(const Edge& e);

}  // namespace tsgraph
