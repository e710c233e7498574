#include <gtest/gtest.h>

#include <random>
#include <set>

#include "graphsplice/canonical.hpp"
#include "graphsplice/oracles.hpp"
#include "graphsplice/splicing.hpp"
#include "oracle.hpp"

namespace gs = graphsplice;
using oracle::graph;

namespace {

const gs::SplicingRule kRule{{1, 2}, {2, 3}};

gs::PlfGraph double_edge() { return graph(2, {{1, 2}, {1, 2}}); }

}  // namespace

TEST(Applicable, Basic) {
  EXPECT_TRUE(gs::applicable(gs::cycle(3), gs::cycle(4), kRule));
  EXPECT_FALSE(gs::applicable(gs::path(2), gs::path(2), {{1, 2}, {1, 1}}));
  EXPECT_FALSE(gs::applicable(gs::complete(5), gs::path(2), {{2, 3}, {1, 2}}));
}

TEST(Applicable, PowerZeroReflexiveWithNonReflexiveIsRejected) {
  // Both cuts sever nothing, but only one splits a vertex.
  EXPECT_FALSE(gs::applicable(gs::PlfGraph(2, {}), gs::path(3), {{1, 2}, {2, 2}}));
}

TEST(Applicable, OutOfRangeRuleThrows) {
  EXPECT_THROW(gs::applicable(gs::path(2), gs::cycle(4), kRule.reversed()), gs::invalid_rule);
  EXPECT_THROW(gs::applicable(gs::cycle(4), gs::path(2), kRule), gs::invalid_rule);
}

TEST(Join, PrefixOfTriangleWithSuffixOfSquare) {
  const auto prefix = gs::cut(gs::cycle(3), {1, 2}).prefix;
  const auto suffix = gs::cut(gs::cycle(4), {2, 3}).suffix;
  EXPECT_EQ(gs::join(prefix, suffix, {0, 1}), gs::cycle(3));
  EXPECT_EQ(gs::join(prefix, suffix, {1, 0}), gs::cycle(3));
}

TEST(Join, FivecycleFromTriangleAndSquare) {
  const auto prefix = gs::cut(gs::cycle(3), {2, 3}).prefix;  // (1,3], (2,3]
  const auto suffix = gs::cut(gs::cycle(4), {1, 2}).suffix;  // [1,2), [1,4)
  // (2,3] <-> [1,2) and (1,3] <-> [1,4)
  EXPECT_EQ(gs::join(prefix, suffix, {1, 0}), gs::cycle(5));
  EXPECT_TRUE(gs::is_isomorphic(gs::join(prefix, suffix, {0, 1}), gs::cycle(5)));
}

TEST(Join, TwoTrianglesMakeADoubleEdge) {
  const auto prefix = gs::cut(gs::cycle(3), {1, 2}).prefix;
  const auto suffix = gs::cut(gs::cycle(3), {2, 3}).suffix;
  EXPECT_EQ(gs::join(prefix, suffix, {0, 1}), double_edge());
  EXPECT_EQ(gs::join(prefix, suffix, {1, 0}), double_edge());
}

TEST(Join, RejectsMismatchedFragments) {
  const auto c3 = gs::cut(gs::cycle(3), {1, 2});
  const auto p2 = gs::cut(gs::path(2), {1, 2});
  EXPECT_THROW(gs::join(c3.prefix, p2.suffix, {0, 1}), gs::not_applicable);
  const auto reflexive = gs::cut(gs::path(3), {2, 2});
  const auto plain = gs::cut(gs::PlfGraph(2, {}), {1, 2});
  EXPECT_THROW(gs::join(reflexive.prefix, plain.suffix, {}), gs::not_applicable);
  EXPECT_THROW(gs::join(c3.prefix, c3.suffix, {0, 0}), gs::not_applicable);
  EXPECT_THROW(gs::join(c3.suffix, c3.prefix, {0, 1}), gs::not_applicable);
}

TEST(Products, TriangleThenSquare) {
  const auto first = gs::products_first(gs::cycle(3), gs::cycle(4), kRule);
  ASSERT_EQ(first.size(), 2u);
  for (const auto& p : first) {
    EXPECT_TRUE(gs::is_isomorphic(p.graph, gs::cycle(3)));
    EXPECT_EQ(p.direction, gs::Direction::first);
  }
  EXPECT_EQ(first[0].bijection, (gs::Recombination{0, 1}));
  EXPECT_EQ(first[1].bijection, (gs::Recombination{1, 0}));

  const auto second = gs::products_second(gs::cycle(3), gs::cycle(4), kRule);
  ASSERT_EQ(second.size(), 2u);
  for (const auto& p : second) {
    EXPECT_TRUE(gs::is_isomorphic(p.graph, gs::cycle(4)));
    EXPECT_EQ(p.direction, gs::Direction::second);
  }
}

TEST(Products, ReflexivePointMerge) {
  const auto first = gs::products_first(gs::path(2), gs::path(2), {{2, 2}, {1, 1}});
  ASSERT_EQ(first.size(), 1u);
  EXPECT_EQ(first[0].graph, gs::path(3));
  EXPECT_TRUE(first[0].bijection.empty());
}

TEST(Products, PowerZeroNonReflexiveIsDisjointUnion) {
  // Neither cut severs an edge: the fragments sit side by side.
  const auto products = gs::sigma_pair(graph(3, {{1, 2}}), graph(3, {{2, 3}}), {{2, 3}, {1, 2}});
  ASSERT_EQ(products.size(), 2u);
  EXPECT_EQ(products[0].graph, graph(4, {{1, 2}, {3, 4}}));
}

TEST(Products, NotApplicableThrows) {
  EXPECT_THROW(gs::products_first(gs::complete(5), gs::path(2), {{2, 3}, {1, 2}}), gs::not_applicable);
  EXPECT_THROW(gs::sigma_pair(gs::path(2), gs::path(2), {{1, 2}, {1, 1}}), gs::not_applicable);
}

TEST(SigmaPair, Counts) {
  EXPECT_EQ(gs::sigma_pair(gs::cycle(3), gs::cycle(4), kRule).size(), 4u);
  EXPECT_EQ(gs::sigma_pair(gs::cycle(3), gs::cycle(3), kRule).size(), 4u);
  EXPECT_EQ(gs::sigma_pair(gs::path(3), gs::path(3), {{2, 2}, {2, 2}}).size(), 2u);
  EXPECT_EQ(gs::sigma_pair(gs::complete(5), gs::complete(5), {{2, 3}, {3, 4}}).size(), 2u * 720u);
}

TEST(SigmaPair, NotCommutative) {
  std::set<gs::CanonicalForm> gh, hg;
  for (const auto& p : gs::sigma_pair(gs::cycle(3), gs::cycle(4), kRule)) gh.insert(gs::canonical_form(p.graph));
  for (const auto& p : gs::sigma_pair(gs::cycle(4), gs::cycle(3), kRule)) hg.insert(gs::canonical_form(p.graph));
  EXPECT_NE(gh, hg);
}

// Random multigraph triples: product counts, the reversal identity, the order
// bound and edge conservation.
TEST(SigmaPair, PropertiesOnRandomMultigraphs) {
  std::mt19937 rng(99);
  std::size_t checked = 0;
  for (int trial = 0; trial < 4000 && checked < 400; ++trial) {
    const auto g = oracle::random_graph(1 + rng() % 5, rng, 2, 0.4);
    const auto h = oracle::random_graph(1 + rng() % 5, rng, 2, 0.4);
    const auto rg = gs::all_rules(g.order());
    const auto rh = gs::all_rules(h.order());
    const gs::SplicingRule s{rg[rng() % rg.size()], rh[rng() % rh.size()]};
    if (!gs::applicable(g, h, s) || gs::power(g, s.c1) > 4) continue;
    ++checked;
    const auto m = gs::power(g, s.c1);
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= m; ++k) fact *= k;
    const auto all = gs::sigma_pair(g, h, s);
    EXPECT_EQ(all.size(), 2 * fact);

    const auto first = gs::products_first(g, h, s);
    const auto mirrored = gs::products_second(h, g, s.reversed());
    ASSERT_EQ(first.size(), mirrored.size());
    for (std::size_t k = 0; k < first.size(); ++k) EXPECT_EQ(first[k].graph, mirrored[k].graph);

    const auto g_cut = gs::cut(g, s.c1);
    const auto h_cut = gs::cut(h, s.c2);
    for (const auto& p : all) {
      EXPECT_LE(p.graph.order(), g.order() + h.order() - 1);
      // Intact edges of both fragments plus one joined edge per hanging pair.
      const auto& prefix = p.direction == gs::Direction::first ? g_cut.prefix : h_cut.prefix;
      const auto& suffix = p.direction == gs::Direction::first ? h_cut.suffix : g_cut.suffix;
      EXPECT_EQ(p.graph.size(), prefix.intact.size() + suffix.intact.size() + m);
    }
  }
  EXPECT_GE(checked, 400u);
}
