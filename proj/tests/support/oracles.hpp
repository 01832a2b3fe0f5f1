#pragma once

// Random instance generators and brute-force reference implementations used
// by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <vector>

#include "tsgraph/graph.hpp"
#include "tsgraph/separation.hpp"
#include "tsgraph/ts_dag.hpp"

namespace tsgraph::testing {

/// Small deterministic RNG wrapper.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  bool coin(double p) { return std::bernoulli_distribution(p)(gen_); }
  std::uint64_t next() { return gen_(); }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

struct Instance {
  std::uint64_t seed = 0;
  TsDagTemplate tmpl;
  ObservationScheme scheme;
};

struct CorpusSpec {
  int max_vars = 4;
  int max_lag = 2;
  int max_tau = 3;
  int max_latent = 2;
  double min_density = 0.15;
  double max_density = 0.5;
  /// Keep at most this many observed window vertices (0 = no limit).
  int max_observed_vertices = 0;
};

/// Deterministic corpus of random templates with observation schemes.
/// At least one variable is always observed.
std::vector<Instance> make_corpus(std::size_t count, std::uint64_t seed, const CorpusSpec& spec = {});

/// One random instance.
Instance random_instance(Rng& rng, const CorpusSpec& spec);

/// Random query over variables of `tmpl` at offsets in [-max_depth, 0]
/// with up to three conditioning vertices. Endpoints differ.
SepQuery random_query(Rng& rng, const TsDagTemplate& tmpl, int max_depth);

/// Depth at which truncating the infinite ts-DAG answers a query exactly.
int certified_depth(const TsDagTemplate& tmpl, const SepQuery& q);

/// d-separation by enumerating simple paths: a collider is open iff it or
/// one of its descendants is conditioned on.
bool d_separated_paths(const WindowGraph& dag, const SepQuery& q);

/// m-separation by enumerating simple paths: a collider is open iff it is an
/// ancestor of the conditioning set.
bool m_separated_paths(const WindowGraph& g, const SepQuery& q);

/// Marginal of the template built from exhaustive search over every subset
/// of observed window vertices, against a certified truncation.
WindowGraph ts_dmag_by_subsets(const TsDagTemplate& tmpl, const ObservationScheme& scheme);

/// Whether two graphs on the same vertex set have identical m-separation
/// relations over all pairs and conditioning subsets.
bool same_m_separations(const WindowGraph& a, const WindowGraph& b);

/// Random finite DAG on `n_vars` x `times` vertices (edges respect a random
/// total order).
WindowGraph random_dag(Rng& rng, int n_vars, const std::vector<int>& times, double density);

/// Vertices of `g` as a list in index order.
std::vector<Vertex> vertices_of(const WindowGraph& g);

}  // namespace tsgraph::testing
