#include "tsgraph/separation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tsgraph/error.hpp"

namespace tsgraph {

namespace {

constexpr auto kHead = static_cast<std::uint8_t>(Mark::Head);

enum Direction : int { kUp = 0, kDown = 1 };  // arrived from a child / from a parent

void check_query_shape(const SepQuery& q) {
  if (q.x == q.y) throw SemanticError("separation query needs two distinct vertices");
  for (const Vertex& c : q.cond) {
    if (c == q.x || c == q.y) {
      throw SemanticError("query endpoints may not be conditioned on");
    }
  }
}

/// S_tau = {i : (i, -tau) is an ancestor of (target, 0)} computed by the
/// recurrence over the last `order` sets, until the window repeats.
struct AncestorSequence {
  std::vector<std::vector<bool>> sets;  // sets[tau][i]
  int period = 1;
};

AncestorSequence ancestor_sequence(const TsDagTemplate& tmpl, int target, int min_length) {
  const int n = tmpl.n_vars();
  const int p = tmpl.order();
  const int window = std::max(p, 1);
  AncestorSequence seq;
  std::map<std::vector<bool>, int> seen;
  int repeat_at = -1;

  auto close_contemporaneous = [&](std::vector<bool>& s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& e : tmpl.edges()) {
        if (e.lag == 0 && s[static_cast<std::size_t>(e.to)] &&
            !s[static_cast<std::size_t>(e.from)]) {
          s[static_cast<std::size_t>(e.from)] = true;
          changed = true;
        }
      }
    }
  };

  for (int tau = 0;; ++tau) {
    std::vector<bool> s(static_cast<std::size_t>(n), false);
    if (tau == 0) {
      s[static_cast<std::size_t>(target)] = true;
    } else {
      for (const auto& e : tmpl.edges()) {
        if (e.lag >= 1 && e.lag <= tau &&
            seq.sets[static_cast<std::size_t>(tau - e.lag)][static_cast<std::size_t>(e.to)]) {
          s[static_cast<std::size_t>(e.from)] = true;
        }
      }
    }
    close_contemporaneous(s);
    seq.sets.push_back(std::move(s));

    if (repeat_at < 0) {
      std::vector<bool> key;
      key.reserve(static_cast<std::size_t>(window * n));
      for (int k = tau - window + 1; k <= tau; ++k) {
        for (int i = 0; i < n; ++i) {
          key.push_back(k >= 0 && seq.sets[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]);
        }
      }
      auto [it, inserted] = seen.emplace(std::move(key), tau);
      if (!inserted) {
        repeat_at = tau;
        seq.period = tau - it->second;
      }
    }
    if (repeat_at >= 0 && tau + 1 >= min_length) break;
  }
  return seq;
}

int padded_length(const TsDagTemplate& tmpl) {
  const int side = tmpl.n_vars() * (tmpl.order() + 1);
  return side * side + 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Finite graphs

bool d_separated_finite(const WindowGraph& dag, const SepQuery& q) {
  check_query_shape(q);
  for (const Edge& e : dag.edges()) {
    if (!e.directed()) throw SemanticError("d-separation needs a graph of directed edges");
  }
  const int n = dag.num_vertices();
  const int x = dag.index(q.x);
  const int y = dag.index(q.y);
  std::vector<char> in_cond(static_cast<std::size_t>(n), 0);
  for (const Vertex& c : q.cond) in_cond[static_cast<std::size_t>(dag.index(c))] = 1;

  std::vector<char> visited(static_cast<std::size_t>(2 * n), 0);
  std::vector<std::pair<int, int>> stack{{x, kUp}};
  visited[static_cast<std::size_t>(2 * x + kUp)] = 1;
  auto push = [&](int v, int dir) {
    char& bit = visited[static_cast<std::size_t>(2 * v + dir)];
    if (!bit) {
      bit = 1;
      stack.emplace_back(v, dir);
    }
  };
  while (!stack.empty()) {
    auto [v, dir] = stack.back();
    stack.pop_back();
    if (v == y) return false;
    const bool conditioned = in_cond[static_cast<std::size_t>(v)] != 0;
    for (int w : dag.neighbors(v)) {
      const bool w_is_parent = dag.is_parent_idx(w, v);
      if (dir == kUp && !conditioned) {
        push(w, w_is_parent ? kUp : kDown);
      } else if (dir == kDown && !conditioned && !w_is_parent) {
        push(w, kDown);
      } else if (dir == kDown && conditioned && w_is_parent) {
        push(w, kUp);
      }
    }
  }
  return true;
}

MSeparation::MSeparation(const WindowGraph& g) : g_(&g), anc_(g) {
  if (g.has_circles()) throw SemanticError("m-separation needs a graph without circle marks");
}

bool MSeparation::separated(int x, int y, const std::vector<int>& cond) const {
  const WindowGraph& g = *g_;
  const int n = g.num_vertices();
  std::vector<char> in_cond(static_cast<std::size_t>(n), 0);
  std::vector<char> open_collider(static_cast<std::size_t>(n), 0);
  for (int c : cond) in_cond[static_cast<std::size_t>(c)] = 1;
  for (int v = 0; v < n; ++v) {
    open_collider[static_cast<std::size_t>(v)] = anc_.is_ancestor_of_any(v, cond) ? 1 : 0;
  }

  // State (v, h): the walk reached v and the mark at v on the last edge is a head.
  std::vector<char> visited(static_cast<std::size_t>(2 * n), 0);
  std::vector<std::pair<int, int>> stack;
  auto push = [&](int v, int h) {
    char& bit = visited[static_cast<std::size_t>(2 * v + h)];
    if (!bit) {
      bit = 1;
      stack.emplace_back(v, h);
    }
  };
  for (int w : g.neighbors(x)) push(w, g.mark_code(x, w) == kHead ? 1 : 0);
  while (!stack.empty()) {
    auto [v, h] = stack.back();
    stack.pop_back();
    if (v == y) return false;
    for (int w : g.neighbors(v)) {
      const bool head_out = g.mark_code(w, v) == kHead;
      const bool collider = h == 1 && head_out;
      const bool open = collider ? open_collider[static_cast<std::size_t>(v)] != 0
                                 : in_cond[static_cast<std::size_t>(v)] == 0;
      if (open) push(w, g.mark_code(v, w) == kHead ? 1 : 0);
    }
  }
  return true;
}

bool m_separated(const WindowGraph& dmag, const SepQuery& q) {
  check_query_shape(q);
  MSeparation msep(dmag);
  std::vector<int> cond;
  cond.reserve(q.cond.size());
  for (const Vertex& c : q.cond) cond.push_back(dmag.index(c));
  return msep.separated(dmag.index(q.x), dmag.index(q.y), cond);
}

// ---------------------------------------------------------------------------
// Infinite ts-DAGs

LagSet ancestor_lag_set(const TsDagTemplate& tmpl, int i, int j) {
  if (i < 0 || i >= tmpl.n_vars() || j < 0 || j >= tmpl.n_vars()) {
    throw SemanticError("lag set query refers to an unknown variable");
  }
  auto seq = ancestor_sequence(tmpl, j, padded_length(tmpl));
  std::vector<bool> members;
  members.reserve(seq.sets.size());
  for (const auto& s : seq.sets) members.push_back(s[static_cast<std::size_t>(i)]);
  return LagSet(std::move(members), seq.period);
}

AncestryTable::AncestryTable(const TsDagTemplate& tmpl) : n_(tmpl.n_vars()) {
  sets_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
  const int length = padded_length(tmpl);
  for (int j = 0; j < n_; ++j) {
    auto seq = ancestor_sequence(tmpl, j, length);
    for (int i = 0; i < n_; ++i) {
      std::vector<bool> members;
      members.reserve(seq.sets.size());
      for (const auto& s : seq.sets) members.push_back(s[static_cast<std::size_t>(i)]);
      sets_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
            static_cast<std::size_t>(j)] = LagSet(std::move(members), seq.period);
    }
  }
}

bool AncestryTable::have_common_ancestor(Vertex u, Vertex w) const {
  if (u == w) return true;
  // (a, s) is a common ancestor iff d = u.time - s is in lags(a, u.var) and
  // d + (w.time - u.time) is in lags(a, w.var).
  const long long delta = static_cast<long long>(w.time) - u.time;
  const long long lo = std::max(0LL, -delta);
  for (int a = 0; a < n_; ++a) {
    const LagSet& lu = lags(a, u.var);
    const LagSet& lw = lags(a, w.var);
    const long long span = std::max(lu.threshold(), lw.threshold()) + std::llabs(delta) +
                           std::lcm(static_cast<long long>(lu.period()),
                                    static_cast<long long>(lw.period()));
    for (long long d = lo; d <= lo + span; ++d) {
      if (lu.contains(d) && lw.contains(d + delta)) return true;
    }
  }
  return false;
}

bool common_ancestor(const TsDagTemplate& tmpl, Vertex u, Vertex w) {
  if (std::abs(u.time - w.time) > tmpl.order()) {
    throw SemanticError("common ancestor query outside the band of width order");
  }
  if (u.var < 0 || u.var >= tmpl.n_vars() || w.var < 0 || w.var >= tmpl.n_vars()) {
    throw SemanticError("common ancestor query refers to an unknown variable");
  }
  return AncestryTable(tmpl).have_common_ancestor(u, w);
}

InfiniteSeparation::InfiniteSeparation(const TsDagTemplate& tmpl)
    : tmpl_(tmpl), ancestry_(tmpl) {
  const int n = tmpl_.n_vars();
  const int p = tmpl_.order();
  const int width = 2 * p + 1;
  deep_.assign(static_cast<std::size_t>(n * n * width), 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int d = -p; d <= p; ++d) {
        deep_[static_cast<std::size_t>((a * n + b) * width + d + p)] =
            ancestry_.have_common_ancestor({a, 0}, {b, d}) ? 1 : 0;
      }
    }
  }
}

bool InfiniteSeparation::separated(const SepQuery& q) const {
  check_query_shape(q);
  const int n = tmpl_.n_vars();
  const int p = tmpl_.order();
  auto check_vertex = [&](const Vertex& v) {
    if (v.var < 0 || v.var >= n) throw SemanticError("query vertex refers to an unknown variable");
    if (v.time > 0) throw SemanticError("query vertices must not lie in the future of offset 0");
  };
  check_vertex(q.x);
  check_vertex(q.y);
  int min_time = std::min(q.x.time, q.y.time);
  for (const Vertex& c : q.cond) {
    check_vertex(c);
    min_time = std::min(min_time, c.time);
  }
  // Explicit zone [lo, 0]; band [lo, boundary) holds every vertex with a
  // parent below lo. Nothing at or below the boundary is conditioned on.
  const int boundary = min_time - 1;
  const int lo = boundary - p;
  const int steps = -lo + 1;
  const int total = steps * n;
  auto idx = [&](int var, int time) { return (time - lo) * n + var; };

  std::vector<std::vector<LaggedEdge>> parents(static_cast<std::size_t>(n));
  std::vector<std::vector<LaggedEdge>> children(static_cast<std::size_t>(n));
  for (const auto& e : tmpl_.edges()) {
    parents[static_cast<std::size_t>(e.to)].push_back(e);
    children[static_cast<std::size_t>(e.from)].push_back(e);
  }

  std::vector<char> in_cond(static_cast<std::size_t>(total), 0);
  for (const Vertex& c : q.cond) in_cond[static_cast<std::size_t>(idx(c.var, c.time))] = 1;
  const int target = idx(q.y.var, q.y.time);

  std::vector<char> visited(static_cast<std::size_t>(2 * total), 0);
  std::vector<std::pair<int, int>> stack;
  auto push = [&](int v, int dir) {
    char& bit = visited[static_cast<std::size_t>(2 * v + dir)];
    if (!bit) {
      bit = 1;
      stack.emplace_back(v, dir);
    }
  };
  push(idx(q.x.var, q.x.time), kUp);
  const int width = 2 * p + 1;

  while (!stack.empty()) {
    auto [v, dir] = stack.back();
    stack.pop_back();
    if (v == target) return false;
    const int var = v % n;
    const int time = v / n + lo;
    const bool conditioned = in_cond[static_cast<std::size_t>(v)] != 0;
    const bool go_up = (dir == kUp && !conditioned) || (dir == kDown && conditioned);
    const bool go_down = !conditioned;
    if (go_up) {
      for (const auto& e : parents[static_cast<std::size_t>(var)]) {
        if (time - e.lag >= lo) push(idx(e.from, time - e.lag), kUp);
      }
    }
    if (go_down) {
      for (const auto& e : children[static_cast<std::size_t>(var)]) {
        if (time + e.lag <= 0) push(idx(e.to, time + e.lag), kDown);
      }
    }
    // Treks through the unconditioned deep past: up from v, down into w.
    if (dir == kUp && !conditioned && time < boundary) {
      for (int wt = lo; wt < boundary; ++wt) {
        for (int wv = 0; wv < n; ++wv) {
          if (deep_[static_cast<std::size_t>((var * n + wv) * width + (wt - time) + p)]) {
            push(idx(wv, wt), kDown);
          }
        }
      }
    }
  }
  return true;
}

bool d_separated_tsdag(const TsDagTemplate& tmpl, const SepQuery& q) {
  return InfiniteSeparation(tmpl).separated(q);
}

}  // namespace tsgraph
