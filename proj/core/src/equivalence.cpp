#include "tsgraph/equivalence.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "tsgraph/canonical.hpp"
#include "tsgraph/error.hpp"
#include "tsgraph/marginal.hpp"
#include "tsgraph/separation.hpp"
#include "tsgraph/structure.hpp"

namespace tsgraph {

namespace {

constexpr auto kHead = static_cast<std::uint8_t>(Mark::Head);

bool same_vertex_set(const WindowGraph& a, const WindowGraph& b) {
  return a.n_vars() == b.n_vars() && a.times() == b.times();
}

bool is_collider(const WindowGraph& g, int left, int mid, int right) {
  return g.mark_code(left, mid) == kHead && g.mark_code(right, mid) == kHead;
}

bool is_parent(const WindowGraph& g, int u, int v) { return g.is_parent_idx(u, v); }

/// Calls `visit(path)` for every discriminating path of `g`, given as
/// [x, q1, ..., qk, b, y].
template <typename Visit>
void for_each_discriminating_path(const WindowGraph& g, Visit&& visit) {
  const int n = g.num_vertices();
  std::vector<int> path;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);

  // path holds y, b, qk, ..., q_j (reversed); extend from its last vertex.
  auto extend = [&](auto&& self, int y) -> void {
    const int last = path.back();
    const bool last_is_q = path.size() >= 3;
    for (int r : g.neighbors(last)) {
      if (on_path[static_cast<std::size_t>(r)]) continue;
      // Every q is a collider, so the mark at q towards r must be a head.
      if (last_is_q && g.mark_code(r, last) != kHead) continue;
      if (!g.adjacent_idx(r, y)) {
        if (!last_is_q) continue;
        std::vector<int> forward(path.rbegin(), path.rend());
        forward.insert(forward.begin(), r);
        visit(forward);
        continue;
      }
      // r becomes a q: parent of y and into-r from the previous vertex.
      if (!is_parent(g, r, y) || g.mark_code(last, r) != kHead) continue;
      path.push_back(r);
      on_path[static_cast<std::size_t>(r)] = 1;
      self(self, y);
      on_path[static_cast<std::size_t>(r)] = 0;
      path.pop_back();
    }
  };

  for (int y = 0; y < n; ++y) {
    for (int b : g.neighbors(y)) {
      path = {y, b};
      on_path[static_cast<std::size_t>(y)] = 1;
      on_path[static_cast<std::size_t>(b)] = 1;
      extend(extend, y);
      on_path[static_cast<std::size_t>(y)] = 0;
      on_path[static_cast<std::size_t>(b)] = 0;
    }
  }
}

bool discriminating_in(const WindowGraph& g, const std::vector<int>& p) {
  // p = [x, q1, ..., qk, b, y]
  const int y = p.back();
  if (g.adjacent_idx(p.front(), y)) return false;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    if (!g.adjacent_idx(p[k], p[k + 1])) return false;
  }
  for (std::size_t k = 1; k + 2 < p.size(); ++k) {
    if (!is_collider(g, p[k - 1], p[k], p[k + 1]) || !is_parent(g, p[k], y)) return false;
  }
  return true;
}

std::uint64_t saturating_product(const std::vector<int>& options) {
  std::uint64_t total = 1;
  for (int o : options) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(o)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= static_cast<std::uint64_t>(o);
  }
  return total;
}

struct EdgeType {
  Mark at_a;
  Mark at_b;
};

constexpr EdgeType kForward{Mark::Tail, Mark::Head};
constexpr EdgeType kBackward{Mark::Head, Mark::Tail};
constexpr EdgeType kBidirected{Mark::Head, Mark::Head};

/// Partial assignment is ancestral so far: no directed cycle and no
/// bidirected edge between an ancestor and its descendant.
bool partial_ancestral(const WindowGraph& g) {
  const AncestorMatrix anc(g);
  const int n = g.num_vertices();
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      if (anc.is_ancestor(u, v) && anc.is_ancestor(v, u)) return false;
      if (g.mark_code(u, v) == kHead && g.mark_code(v, u) == kHead &&
          (anc.is_ancestor(u, v) || anc.is_ancestor(v, u))) {
        return false;
      }
    }
  }
  return true;
}

struct UnshieldedTriple {
  int x, z, y;
  bool collider;
  std::size_t last_edge;  // triple is decided once this edge is assigned
};

class ClassEnumerator {
 public:
  ClassEnumerator(const WindowGraph& m, bool time_order, bool markov_filter,
                  std::optional<Knowledge> knowledge)
      : m_(m), markov_filter_(markov_filter), knowledge_(knowledge) {
    edges_ = m.edges();
    for (const Edge& e : edges_) {
      if (e.has_circle()) throw SemanticError("class enumeration needs a graph without circle marks");
      std::vector<EdgeType> opts;
      if (time_order && e.a.time < e.b.time) {
        opts = {kForward, kBidirected};
      } else {
        opts = {kForward, kBackward, kBidirected};
      }
      options_.push_back(std::move(opts));
    }
    if (markov_filter_) collect_triples();
  }

  std::uint64_t estimated_cost() const {
    std::vector<int> sizes;
    for (const auto& o : options_) sizes.push_back(static_cast<int>(o.size()));
    return saturating_product(sizes);
  }

  std::vector<WindowGraph> run() {
    cur_ = WindowGraph(m_.n_vars(), m_.times(), GraphKind::DMAG);
    recurse(0);
    std::sort(found_.begin(), found_.end(), [](const WindowGraph& a, const WindowGraph& b) {
      return a.edges() < b.edges();
    });
    return std::move(found_);
  }

 private:
  void collect_triples() {
    const int n = m_.num_vertices();
    auto edge_pos = [&](int u, int v) {
      const Edge probe{m_.vertex(std::min(u, v)), m_.vertex(std::max(u, v)), Mark::Tail, Mark::Tail};
      auto it = std::lower_bound(edges_.begin(), edges_.end(), probe,
                                 [](const Edge& a, const Edge& b) {
                                   return std::tie(a.a, a.b) < std::tie(b.a, b.b);
                                 });
      return static_cast<std::size_t>(it - edges_.begin());
    };
    for (int z = 0; z < n; ++z) {
      const auto& nb = m_.neighbors(z);
      for (std::size_t p = 0; p < nb.size(); ++p) {
        for (std::size_t q = p + 1; q < nb.size(); ++q) {
          const int x = nb[p];
          const int y = nb[q];
          if (m_.adjacent_idx(x, y)) continue;
          triples_.push_back({x, z, y, is_collider(m_, x, z, y),
                              std::max(edge_pos(x, z), edge_pos(z, y))});
        }
      }
    }
  }

  bool triples_ok(std::size_t k) const {
    for (const auto& t : triples_) {
      if (t.last_edge == k && is_collider(cur_, t.x, t.z, t.y) != t.collider) return false;
    }
    return true;
  }

  bool accept_leaf() const {
    if (!validate_dmag(cur_).is_dmag()) return false;
    if (markov_filter_ && !markov_equivalent(cur_, m_)) return false;
    if (knowledge_ && !satisfies_knowledge(cur_, *knowledge_)) return false;
    return true;
  }

  void recurse(std::size_t k) {
    if (k == edges_.size()) {
      if (accept_leaf()) found_.push_back(cur_);
      return;
    }
    const Edge& e = edges_[k];
    for (const EdgeType& t : options_[k]) {
      cur_.set_edge(e.a, e.b, t.at_a, t.at_b);
      if (triples_ok(k) && partial_ancestral(cur_)) recurse(k + 1);
    }
    cur_.remove_edge(e.a, e.b);
  }

  const WindowGraph& m_;
  bool markov_filter_;
  std::optional<Knowledge> knowledge_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeType>> options_;
  std::vector<UnshieldedTriple> triples_;
  WindowGraph cur_;
  std::vector<WindowGraph> found_;
};

void check_budget(const ClassEnumerator& en, std::size_t num_edges, int max_edges) {
  if (static_cast<long long>(num_edges) > max_edges) {
    throw BudgetExceeded("enumeration over " + std::to_string(num_edges) + " edges exceeds the budget of " +
                             std::to_string(max_edges) + " edges (estimated " +
                             std::to_string(en.estimated_cost()) + " assignments)",
                         en.estimated_cost());
  }
}

bool uses_time_order(Knowledge k) { return k != Knowledge::None; }

/// Vertex coordinates after moving the latest step to 0 and dividing by the
/// spacing, as used by the canonical ts-DAG.
Vertex normalized_vertex(const WindowGraph& g, Vertex v) {
  const auto& ts = g.times();
  const int spacing = ts.size() > 1 ? ts[1] - ts[0] : 1;
  return {v.var, (v.time - ts.back()) / spacing};
}

}  // namespace

std::string to_string(Knowledge k) {
  switch (k) {
    case Knowledge::None: return "none";
    case Knowledge::TimeOrderOrientations: return "b_to";
    case Knowledge::TimeOrderAncestral: return "b_ta";
    case Knowledge::TsDag: return "b_d";
    case Knowledge::TsDagStat: return "b_d_stat";
  }
  return "?";
}

std::optional<Knowledge> knowledge_from_string(const std::string& s) {
  for (Knowledge k : {Knowledge::None, Knowledge::TimeOrderOrientations, Knowledge::TimeOrderAncestral,
                      Knowledge::TsDag, Knowledge::TsDagStat}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

bool satisfies_knowledge(const WindowGraph& dmag, Knowledge k) {
  switch (k) {
    case Knowledge::None:
      return true;
    case Knowledge::TimeOrderOrientations:
      return check_property(dmag, Property::TimeOrdered) &&
             check_property(dmag, Property::RepeatingOrientations);
    case Knowledge::TimeOrderAncestral:
      return check_property(dmag, Property::TimeOrdered) &&
             check_property(dmag, Property::RepeatingAncestral);
    case Knowledge::TsDag:
      return is_ts_dmag(dmag).member;
    case Knowledge::TsDagStat:
      return is_stat_ts_dmag(dmag);
  }
  return false;
}

bool markov_equivalent(const WindowGraph& m1, const WindowGraph& m2) {
  if (!same_vertex_set(m1, m2)) throw SemanticError("Markov equivalence needs equal vertex sets");
  const int n = m1.num_vertices();
  for (int u = 0; u < n; ++u) {
    if (m1.neighbors(u) != m2.neighbors(u)) return false;
  }
  for (int z = 0; z < n; ++z) {
    const auto& nb = m1.neighbors(z);
    for (std::size_t p = 0; p < nb.size(); ++p) {
      for (std::size_t q = p + 1; q < nb.size(); ++q) {
        if (m1.adjacent_idx(nb[p], nb[q])) continue;
        if (is_collider(m1, nb[p], z, nb[q]) != is_collider(m2, nb[p], z, nb[q])) return false;
      }
    }
  }
  bool same = true;
  auto compare = [&](const WindowGraph& g, const WindowGraph& other) {
    for_each_discriminating_path(g, [&](const std::vector<int>& p) {
      if (!same || !discriminating_in(other, p)) return;
      const std::size_t b = p.size() - 2;
      if (is_collider(g, p[b - 1], p[b], p[b + 1]) != is_collider(other, p[b - 1], p[b], p[b + 1])) {
        same = false;
      }
    });
  };
  compare(m1, m2);
  return same;
}

int default_enumeration_budget() {
  if (const char* env = std::getenv("TSGRAPH_BUDGET")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return 12;
}

std::vector<WindowGraph> enumerate_class(const WindowGraph& m, Knowledge k, int max_edges) {
  ClassEnumerator en(m, uses_time_order(k), true, k);
  check_budget(en, m.num_edges(), max_edges);
  return en.run();
}

std::vector<WindowGraph> enumerate_skeleton_dmags(const WindowGraph& g, int max_edges) {
  ClassEnumerator en(g, false, false, std::nullopt);
  check_budget(en, g.num_edges(), max_edges);
  return en.run();
}

WindowGraph merge_marks(const std::vector<WindowGraph>& members) {
  if (members.empty()) throw SemanticError("cannot merge an empty class");
  const WindowGraph& first = members.front();
  WindowGraph out(first.n_vars(), first.times(), GraphKind::DPAG);
  for (const Edge& e : first.edges()) {
    Mark at_a = e.at_a;
    Mark at_b = e.at_b;
    for (const WindowGraph& g : members) {
      auto f = g.edge(e.a, e.b);
      if (!f) throw SemanticError("class members disagree on the skeleton");
      if (f->at_a != at_a) at_a = Mark::Circle;
      if (f->at_b != at_b) at_b = Mark::Circle;
    }
    out.add_edge(e.a, e.b, at_a, at_b);
  }
  return out;
}

DpagReport mi_dpag(const WindowGraph& m, Knowledge k, int max_edges) {
  const auto members = enumerate_class(m, k, max_edges);
  if (members.empty()) {
    throw SemanticError("no DMAG in the equivalence class satisfies " + to_string(k));
  }
  return {merge_marks(members), members.size(), k};
}

DpagReport ts_dpag(const TsDagTemplate& tmpl, const ObservationScheme& scheme, int max_edges) {
  return mi_dpag(ts_dmag(tmpl, scheme), Knowledge::TsDag, max_edges);
}

const char* to_string(Informativeness i) {
  switch (i) {
    case Informativeness::MoreInformative: return "more_informative";
    case Informativeness::LessInformative: return "less_informative";
    case Informativeness::Equal: return "equal";
    case Informativeness::Incomparable: return "incomparable";
  }
  return "?";
}

Informativeness compare_informativeness(const WindowGraph& p1, const WindowGraph& p2) {
  if (!same_vertex_set(p1, p2)) throw SemanticError("DPAG comparison needs equal vertex sets");
  const int n = p1.num_vertices();
  bool circles1_in_2 = true;
  bool circles2_in_1 = true;
  bool fixed_marks_agree = true;
  for (int u = 0; u < n; ++u) {
    if (p1.neighbors(u) != p2.neighbors(u)) throw SemanticError("DPAG comparison needs equal skeletons");
    for (int v : p1.neighbors(u)) {
      const auto c1 = p1.mark_code(v, u);
      const auto c2 = p2.mark_code(v, u);
      const bool o1 = c1 == static_cast<std::uint8_t>(Mark::Circle);
      const bool o2 = c2 == static_cast<std::uint8_t>(Mark::Circle);
      if (o1 && !o2) circles1_in_2 = false;
      if (o2 && !o1) circles2_in_1 = false;
      if (!o1 && !o2 && c1 != c2) fixed_marks_agree = false;
    }
  }
  if (!fixed_marks_agree) return Informativeness::Incomparable;
  if (circles1_in_2 && circles2_in_1) return Informativeness::Equal;
  if (circles1_in_2) return Informativeness::MoreInformative;
  if (circles2_in_1) return Informativeness::LessInformative;
  return Informativeness::Incomparable;
}

StatComparison compare_stat_dpags(const TsDagTemplate& tmpl, const ObservationScheme& scheme,
                                  KnowledgePair pair, int max_edges) {
  const WindowGraph m = ts_dmag(tmpl, scheme);
  const WindowGraph ms = stationarify(m);
  Knowledge plain_k = Knowledge::TsDag;
  Knowledge stat_k = Knowledge::TsDagStat;
  if (pair == KnowledgePair::TimeOrderOrientations) {
    plain_k = stat_k = Knowledge::TimeOrderOrientations;
  } else if (pair == KnowledgePair::TimeOrderAncestral) {
    plain_k = stat_k = Knowledge::TimeOrderAncestral;
  }
  StatComparison out;
  out.plain = mi_dpag(m, plain_k, max_edges).dpag;
  out.stat = mi_dpag(ms, stat_k, max_edges).dpag;
  for (const Edge& e : out.stat.edges()) {
    auto f = out.plain.edge(e.a, e.b);
    if (!f) throw SemanticError("stationarified DPAG has an edge missing from the plain DPAG");
    auto compare = [&](Mark s, Mark p, Vertex at, Vertex other) {
      if (s != Mark::Circle && s != p) out.violations.push_back({at, other});
      if (s == Mark::Circle && p != Mark::Circle) out.strict_marks.push_back({at, other});
    };
    compare(e.at_a, f->at_a, e.a, e.b);
    compare(e.at_b, f->at_b, e.b, e.a);
  }
  return out;
}

std::vector<CircleWitness> circle_witnesses(const TsDagTemplate& tmpl, const ObservationScheme& scheme,
                                            int max_edges) {
  const WindowGraph m = ts_dmag(tmpl, scheme);
  const auto members = enumerate_class(m, Knowledge::TsDag, max_edges);
  if (members.empty()) throw SemanticError("ts-DMAG class is empty");
  const WindowGraph dpag = merge_marks(members);

  std::vector<CircleWitness> out;
  auto witness = [&](Vertex at, Vertex other) {
    const WindowGraph* tail = nullptr;
    const WindowGraph* head = nullptr;
    for (const WindowGraph& g : members) {
      const Mark mk = *g.mark_at(at, other);
      if (mk == Mark::Tail && !tail) tail = &g;
      if (mk == Mark::Head && !head) head = &g;
    }
    if (!tail || !head) throw std::logic_error("circle mark without both realizations");
    CircleWitness w{{at, other}, canonical_ts_dag(*tail), canonical_ts_dag(*head), false};
    const Vertex a = normalized_vertex(m, at);
    const Vertex o = normalized_vertex(m, other);
    w.verified = AncestryTable(w.tail_realizer).is_ancestor(a, o) &&
                 !AncestryTable(w.head_realizer).is_ancestor(a, o);
    out.push_back(std::move(w));
  };
  for (const Edge& e : dpag.edges()) {
    if (e.at_a == Mark::Circle) witness(e.a, e.b);
    if (e.at_b == Mark::Circle) witness(e.b, e.a);
  }
  return out;
}

}  // namespace tsgraph
