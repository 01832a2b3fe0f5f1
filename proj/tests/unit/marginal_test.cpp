#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tsgraph/error.hpp"
#include "tsgraph/marginal.hpp"
#include "tsgraph/structure.hpp"

namespace tsgraph {
namespace {

using testing::fixture_a;
using testing::fixture_b;
using testing::fixture_b_scheme;

WindowGraph fixture_a_marginal() {
  WindowGraph g = WindowGraph::regular(2, 2);
  g.add_directed({0, -1}, {0, 0});
  g.add_directed({0, -2}, {0, -1});
  g.add_directed({0, -1}, {1, 0});
  g.add_directed({0, -2}, {1, -1});
  g.add_bidirected({0, -2}, {1, -2});
  return g;
}

TEST(TsDmag, EdgelessTemplate) {
  const WindowGraph m = ts_dmag(TsDagTemplate(3, {}), {{0, 2}, 2, 1});
  EXPECT_EQ(m.num_edges(), 0u);
  EXPECT_EQ(m.n_vars(), 2);
}

TEST(TsDmag, FixtureA) {
  const WindowGraph m = ts_dmag(fixture_a(), ObservationScheme::all_observed(2, 2));
  EXPECT_EQ(m, fixture_a_marginal());
  EXPECT_EQ(m, testing::ts_dmag_by_subsets(fixture_a(), ObservationScheme::all_observed(2, 2)));
}

TEST(TsDmag, FixtureB) {
  const WindowGraph m = ts_dmag(fixture_b(), fixture_b_scheme(1));
  WindowGraph expected = WindowGraph::regular(2, 1);
  expected.add_bidirected({0, -1}, {1, -1});
  expected.add_bidirected({0, 0}, {1, 0});
  EXPECT_EQ(m, expected);
}

TEST(TsDmag, SubsampledTimes) {
  const WindowGraph m = ts_dmag(fixture_a(), {{0, 1}, 4, 2});
  EXPECT_EQ(m.times(), (std::vector<int>{-4, -2, 0}));
  EXPECT_TRUE(m.adjacent({0, -2}, {0, 0}));
  EXPECT_TRUE(m.adjacent({0, -2}, {1, 0}));
}

TEST(TsDmag, RejectsEmptyObservation) {
  EXPECT_THROW(ts_dmag(fixture_a(), {{}, 1, 1}), SemanticError);
}

TEST(TsDmag, CanonicalSetMatchesSubsetSearch) {
  testing::CorpusSpec spec;
  spec.max_observed_vertices = 7;
  for (const auto& in : testing::make_corpus(80, 43, spec)) {
    EXPECT_EQ(ts_dmag(in.tmpl, in.scheme), testing::ts_dmag_by_subsets(in.tmpl, in.scheme)) << in.seed;
  }
}

TEST(TsDmag, NecessaryProperties) {
  testing::CorpusSpec spec;
  spec.max_observed_vertices = 8;
  for (const auto& in : testing::make_corpus(120, 47, spec)) {
    const WindowGraph m = ts_dmag(in.tmpl, in.scheme);
    EXPECT_TRUE(validate_dmag(m).is_dmag());
    EXPECT_TRUE(check_property(m, Property::TimeOrdered));
    EXPECT_TRUE(check_property(m, Property::RepeatingAncestral));
    EXPECT_TRUE(check_property(m, Property::PastRepeatingAdjacencies));
    EXPECT_TRUE(check_property(m, Property::RepeatingSeparatingSets));
  }
}

TEST(TsDmagWindow, MatchesInducedWindow) {
  for (const auto& in : testing::make_corpus(40, 53)) {
    const WindowGraph m = ts_dmag(in.tmpl, in.scheme);
    for (int t1 = -in.scheme.tau_max; t1 <= 0; ++t1) {
      EXPECT_EQ(ts_dmag_window(in.tmpl, in.scheme, t1, 0), induced_window(m, t1, 0));
    }
  }
}

TEST(Stationarify, FixtureADropsTheBidirectedEdge) {
  const WindowGraph m = fixture_a_marginal();
  WindowGraph expected = m;
  expected.remove_edge({0, -2}, {1, -2});
  EXPECT_EQ(stationarify(m), expected);
}

TEST(Stationarify, DropsEdgesWithDifferingTypes) {
  WindowGraph g = WindowGraph::regular(1, 2);
  g.add_directed({0, -1}, {0, 0});
  g.add_bidirected({0, -2}, {0, -1});
  EXPECT_EQ(stationarify(g).num_edges(), 0u);
}

TEST(Stationarify, IdempotentAndRepeating) {
  for (const auto& in : testing::make_corpus(80, 59)) {
    const WindowGraph m = ts_dmag(in.tmpl, in.scheme);
    const WindowGraph s = stationarify(m);
    EXPECT_EQ(stationarify(s), s);
    EXPECT_TRUE(check_property(s, Property::RepeatingEdges));
    EXPECT_TRUE(is_subgraph(s, m));
    EXPECT_TRUE(validate_dmag(s).is_dmag());
    // Same ancestral relations as the un-stationarified graph.
    const AncestorMatrix a(m);
    const AncestorMatrix b(s);
    for (int u = 0; u < m.num_vertices(); ++u) {
      for (int v = 0; v < m.num_vertices(); ++v) EXPECT_EQ(a.is_ancestor(u, v), b.is_ancestor(u, v));
    }
  }
}

TEST(MarginalizeDag, DisconnectedCopiesEmbedAStaticDmag) {
  // A static DAG X -> Y <- L -> Z with L latent, one copy per time step.
  const TsDagTemplate t(4, {{0, 1, 0}, {3, 1, 0}, {3, 2, 0}});
  const WindowGraph m = ts_dmag(t, {{0, 1, 2}, 0, 1});
  WindowGraph expected = WindowGraph::regular(3, 0);
  expected.add_directed({0, 0}, {1, 0});
  expected.add_bidirected({1, 0}, {2, 0});
  EXPECT_EQ(m, expected);
  EXPECT_EQ(marginalize_dag(unroll(t, 0), 3), expected);
}

TEST(SamplingSchemes, EdgelessTemplates) {
  const TsDagTemplate r = subsample_to_regular(TsDagTemplate(2, {}), 2);
  EXPECT_EQ(r.n_vars(), 4);
  EXPECT_TRUE(r.edges().empty());
  EXPECT_TRUE(regular_to_subsample(TsDagTemplate(2, {}), 3).edges().empty());
  EXPECT_THROW(subsample_to_regular(fixture_a(), 1), SemanticError);
}

TEST(SamplingSchemes, FixtureASubsampledMatchesRegularConstruction) {
  const WindowGraph sub = compress_times(ts_dmag(fixture_a(), {{0, 1}, 4, 2}), 2);
  const WindowGraph reg = ts_dmag(subsample_to_regular(fixture_a(), 2), {{0, 1}, 2, 1});
  EXPECT_EQ(sub, reg);
}

TEST(SamplingSchemes, ChainInterleavesOneLatentCopy) {
  const TsDagTemplate chain(1, {{0, 0, 1}});
  const TsDagTemplate r = subsample_to_regular(chain, 2);
  EXPECT_EQ(r, TsDagTemplate(2, {{0, 1, 1}, {1, 0, 0}}));
  const WindowGraph reg = ts_dmag(r, {{0}, 3, 1});
  EXPECT_EQ(reg, ts_dmag(chain, {{0}, 3, 1}));
}

TEST(SamplingSchemes, StretchedTemplates) {
  for (int n : {2, 3}) {
    const WindowGraph reg = ts_dmag(fixture_a(), ObservationScheme::all_observed(2, 2));
    const WindowGraph sub = ts_dmag(regular_to_subsample(fixture_a(), n), {{0, 1}, 2 * n, n});
    EXPECT_EQ(compress_times(sub, n), reg);
  }
}

TEST(NoUnobservables, FixtureAAndEdgeless) {
  EXPECT_EQ(no_unobservable_window(fixture_a(), 2), unroll(fixture_a(), 2));
  EXPECT_EQ(no_unobservable_window(TsDagTemplate(2, {}), 0).num_edges(), 0u);
  EXPECT_THROW(no_unobservable_window(TsDagTemplate(1, {{0, 0, 2}}), 1), SemanticError);
}

TEST(NoUnobservables, RandomTemplates) {
  testing::Rng rng(61);
  for (int k = 0; k < 200; ++k) {
    const TsDagTemplate t = random_ts_dag(rng.uniform(1, 3), rng.uniform(0, 2), rng.real(0.1, 0.5), rng.next());
    EXPECT_NO_THROW(no_unobservable_window(t, t.order() + rng.uniform(0, 1)));
  }
}

}  // namespace
}  // namespace tsgraph
