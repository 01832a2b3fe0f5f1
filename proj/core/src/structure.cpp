#include "tsgraph/structure.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tsgraph/error.hpp"
#include "tsgraph/separation.hpp"

namespace tsgraph {

namespace {

constexpr auto kTail = static_cast<std::uint8_t>(Mark::Tail);
constexpr auto kHead = static_cast<std::uint8_t>(Mark::Head);

void require_no_circles(const WindowGraph& g, const char* what) {
  if (g.has_circles()) {
    throw SemanticError(std::string(what) + " is undefined for graphs with circle marks");
  }
}

/// Non-zero shifts dt such that both t1 + dt and t2 + dt are in the time set.
std::vector<int> shifts_for(const WindowGraph& g, int t1, int t2) {
  std::vector<int> out;
  const auto& ts = g.times();
  for (int t : ts) {
    const int dt = t - t1;
    if (dt == 0) continue;
    if (std::binary_search(ts.begin(), ts.end(), t2 + dt)) out.push_back(dt);
  }
  return out;
}

Vertex shifted(Vertex v, int dt) { return {v.var, v.time + dt}; }

enum class ShiftCheck { Adjacency, Orientation, Edge, PastAdjacency };

bool edges_repeat(const WindowGraph& g, ShiftCheck check) {
  for (const Edge& e : g.edges()) {
    for (int dt : shifts_for(g, e.a.time, e.b.time)) {
      if (check == ShiftCheck::PastAdjacency && dt > 0) continue;
      auto f = g.edge(shifted(e.a, dt), shifted(e.b, dt));
      switch (check) {
        case ShiftCheck::Adjacency:
        case ShiftCheck::PastAdjacency:
          if (!f) return false;
          break;
        case ShiftCheck::Orientation:
          if (f && (f->at_a != e.at_a || f->at_b != e.at_b)) return false;
          break;
        case ShiftCheck::Edge:
          if (!f || f->at_a != e.at_a || f->at_b != e.at_b) return false;
          break;
      }
    }
  }
  return true;
}

bool time_ordered(const WindowGraph& g) {
  for (const Edge& e : g.edges()) {
    // Canonical order puts a no later than b, so only b -> a can point back.
    if (e.at_b == Mark::Tail && e.at_a == Mark::Head && e.a.time < e.b.time) return false;
  }
  return true;
}

bool ancestral_relations_repeat(const WindowGraph& g) {
  require_no_circles(g, "repeating ancestral relationships");
  AncestorMatrix anc(g);
  const int n = g.num_vertices();
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v || !anc.is_ancestor(u, v)) continue;
      const Vertex a = g.vertex(u);
      const Vertex b = g.vertex(v);
      for (int dt : shifts_for(g, a.time, b.time)) {
        if (!anc.is_ancestor(g.index(shifted(a, dt)), g.index(shifted(b, dt)))) return false;
      }
    }
  }
  return true;
}

bool separating_sets_repeat(const WindowGraph& g) {
  require_no_circles(g, "repeating separating sets");
  if (!validate_dmag(g).is_dmag()) {
    throw SemanticError("repeating separating sets requires a valid DMAG");
  }
  MSeparation msep(g);
  const int n = g.num_vertices();
  std::set<int> deltas;
  for (int t1 : g.times()) {
    for (int t2 : g.times()) {
      if (t1 != t2) deltas.insert(t2 - t1);
    }
  }
  for (int dt : deltas) {
    std::vector<int> movable;
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
      if (auto w = g.index_of(shifted(g.vertex(v), dt))) {
        movable.push_back(v);
        image[static_cast<std::size_t>(v)] = *w;
      }
    }
    const auto m = movable.size();
    if (m > 22) throw BudgetExceeded("repeating separating sets check is too large", 1ULL << m);
    for (std::size_t xi = 0; xi < m; ++xi) {
      for (std::size_t yi = xi + 1; yi < m; ++yi) {
        const int x = movable[xi];
        const int y = movable[yi];
        std::vector<int> rest;
        for (int v : movable) {
          if (v != x && v != y) rest.push_back(v);
        }
        const std::uint64_t subsets = 1ULL << rest.size();
        std::vector<int> cond;
        std::vector<int> cond_shifted;
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
          cond.clear();
          cond_shifted.clear();
          for (std::size_t k = 0; k < rest.size(); ++k) {
            if (mask >> k & 1U) {
              cond.push_back(rest[k]);
              cond_shifted.push_back(image[static_cast<std::size_t>(rest[k])]);
            }
          }
          if (msep.separated(x, y, cond) &&
              !msep.separated(image[static_cast<std::size_t>(x)],
                              image[static_cast<std::size_t>(y)], cond_shifted)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

/// Directed path from u to v (inclusive) using parent links; assumes one exists.
std::vector<Vertex> directed_path(const WindowGraph& g, int from, int to) {
  const int n = g.num_vertices();
  std::vector<int> prev(static_cast<std::size_t>(n), -2);
  std::deque<int> queue{from};
  prev[static_cast<std::size_t>(from)] = -1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == to && u != from) break;
    for (int w : g.neighbors(u)) {
      if (!g.is_parent_idx(u, w) || prev[static_cast<std::size_t>(w)] != -2) continue;
      prev[static_cast<std::size_t>(w)] = u;
      queue.push_back(w);
    }
  }
  std::vector<Vertex> path;
  for (int v = to; v != -1; v = prev[static_cast<std::size_t>(v)]) {
    path.push_back(g.vertex(v));
    if (v == from && path.size() > 1) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::string to_string(Property p) {
  switch (p) {
    case Property::TimeOrdered: return "time_ordered";
    case Property::RepeatingEdges: return "repeating_edges";
    case Property::RepeatingAdjacencies: return "repeating_adjacencies";
    case Property::RepeatingOrientations: return "repeating_orientations";
    case Property::RepeatingAncestral: return "repeating_ancestral";
    case Property::PastRepeatingAdjacencies: return "past_repeating_adjacencies";
    case Property::RepeatingSeparatingSets: return "repeating_separating_sets";
  }
  return "unknown";
}

bool check_property(const WindowGraph& g, Property property) {
  switch (property) {
    case Property::TimeOrdered: return time_ordered(g);
    case Property::RepeatingEdges: return edges_repeat(g, ShiftCheck::Edge);
    case Property::RepeatingAdjacencies: return edges_repeat(g, ShiftCheck::Adjacency);
    case Property::RepeatingOrientations: return edges_repeat(g, ShiftCheck::Orientation);
    case Property::PastRepeatingAdjacencies: return edges_repeat(g, ShiftCheck::PastAdjacency);
    case Property::RepeatingAncestral: return ancestral_relations_repeat(g);
    case Property::RepeatingSeparatingSets: return separating_sets_repeat(g);
  }
  return false;
}

AncestorMatrix::AncestorMatrix(const WindowGraph& g)
    : n_(static_cast<std::size_t>(g.num_vertices())), bits_(n_ * n_, 0) {
  std::vector<int> stack;
  for (int v = 0; v < static_cast<int>(n_); ++v) {
    // Walk upwards from v; every vertex reached is an ancestor of v.
    stack.assign(1, v);
    bits_[static_cast<std::size_t>(v) * n_ + static_cast<std::size_t>(v)] = 1;
    while (!stack.empty()) {
      const int w = stack.back();
      stack.pop_back();
      for (int p : g.neighbors(w)) {
        if (!g.is_parent_idx(p, w)) continue;
        char& bit = bits_[static_cast<std::size_t>(p) * n_ + static_cast<std::size_t>(v)];
        if (bit) continue;
        bit = 1;
        stack.push_back(p);
      }
    }
  }
}

bool AncestorMatrix::is_ancestor_of_any(int u, const std::vector<int>& targets) const {
  return std::any_of(targets.begin(), targets.end(), [&](int t) { return is_ancestor(u, t); });
}

std::vector<Vertex> ancestors_in(const WindowGraph& g, Vertex v) {
  require_no_circles(g, "ancestry");
  const int target = g.index(v);
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<int> stack{target};
  seen[static_cast<std::size_t>(target)] = 1;
  while (!stack.empty()) {
    const int w = stack.back();
    stack.pop_back();
    for (int p : g.neighbors(w)) {
      if (g.is_parent_idx(p, w) && !seen[static_cast<std::size_t>(p)]) {
        seen[static_cast<std::size_t>(p)] = 1;
        stack.push_back(p);
      }
    }
  }
  std::vector<Vertex> out;
  for (int u = 0; u < g.num_vertices(); ++u) {
    if (seen[static_cast<std::size_t>(u)]) out.push_back(g.vertex(u));
  }
  return out;
}

bool is_acyclic(const WindowGraph& g) {
  AncestorMatrix anc(g);
  for (const Edge& e : g.edges()) {
    const int a = g.index(e.a);
    const int b = g.index(e.b);
    if (e.at_a == Mark::Tail && e.at_b == Mark::Head && anc.is_ancestor(b, a)) return false;
    if (e.at_b == Mark::Tail && e.at_a == Mark::Head && anc.is_ancestor(a, b)) return false;
  }
  return true;
}

DmagReport validate_dmag(const WindowGraph& g) {
  require_no_circles(g, "DMAG validation");
  DmagReport report;
  AncestorMatrix anc(g);
  const int n = g.num_vertices();

  std::set<std::vector<Vertex>> cycles;
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      const auto at_u = g.mark_code(v, u);
      const auto at_v = g.mark_code(u, v);
      if (at_u == kTail && at_v == kHead && anc.is_ancestor(v, u)) {
        auto cycle = directed_path(g, v, u);
        auto key = cycle;
        std::sort(key.begin(), key.end());
        if (cycles.insert(key).second) {
          report.ancestral = false;
          report.violations.push_back({DmagViolation::Kind::DirectedCycle, std::move(cycle)});
        }
      } else if (at_u == kHead && at_v == kHead && u < v &&
                 (anc.is_ancestor(u, v) || anc.is_ancestor(v, u))) {
        report.ancestral = false;
        auto path = anc.is_ancestor(u, v) ? directed_path(g, u, v) : directed_path(g, v, u);
        report.violations.push_back({DmagViolation::Kind::AlmostDirectedCycle, std::move(path)});
      }
    }
  }

  // Inducing paths a *-> v1 <-> ... <-> vk <-* b through an({a, b}).
  std::vector<int> prev(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (g.adjacent_idx(a, b)) continue;
      auto allowed = [&](int v) {
        return v != a && v != b && (anc.is_ancestor(v, a) || anc.is_ancestor(v, b));
      };
      std::fill(prev.begin(), prev.end(), -2);
      std::deque<int> queue;
      for (int v : g.neighbors(a)) {
        if (allowed(v) && g.mark_code(a, v) == kHead) {
          prev[static_cast<std::size_t>(v)] = a;
          queue.push_back(v);
        }
      }
      int last = -1;
      while (!queue.empty() && last < 0) {
        const int v = queue.front();
        queue.pop_front();
        if (g.adjacent_idx(v, b) && g.mark_code(b, v) == kHead) {
          last = v;
          break;
        }
        for (int w : g.neighbors(v)) {
          if (!allowed(w) || prev[static_cast<std::size_t>(w)] != -2) continue;
          if (g.mark_code(v, w) == kHead && g.mark_code(w, v) == kHead) {
            prev[static_cast<std::size_t>(w)] = v;
            queue.push_back(w);
          }
        }
      }
      if (last < 0) continue;
      report.maximal = false;
      std::vector<Vertex> path{g.vertex(b)};
      for (int v = last; v != a; v = prev[static_cast<std::size_t>(v)]) path.push_back(g.vertex(v));
      path.push_back(g.vertex(a));
      std::reverse(path.begin(), path.end());
      report.violations.push_back({DmagViolation::Kind::InducingPath, std::move(path)});
    }
  }
  return report;
}

WindowGraph induced_window(const WindowGraph& g, int t1, int t2) {
  if (t1 > t2) throw SemanticError("induced window needs t1 <= t2");
  std::vector<int> times;
  for (int t : g.times()) {
    if (t >= t1 && t <= t2) times.push_back(t);
  }
  if (times.empty()) throw SemanticError("induced window contains no time step of the graph");
  WindowGraph out(g.n_vars(), std::move(times), g.kind());
  for (const Edge& e : g.edges()) {
    if (out.contains(e.a) && out.contains(e.b)) out.add_edge(e.a, e.b, e.at_a, e.at_b);
  }
  return out;
}

}  // namespace tsgraph
