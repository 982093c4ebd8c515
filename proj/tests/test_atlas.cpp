// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "orcalc/atlas.hpp"
#include "orcalc/catalog.hpp"

using namespace orcalc;
using catalog::dumbbell;
using catalog::theta;

namespace {

const Atlas& atlas2() {
  static const Atlas a = enumerate_stable_graphs(2);
  return a;
}

int find_member(const Atlas& a, const Graph& g) {
  const int i = a.index_of(g);
  EXPECT_GE(i, 0) << to_string(g);
  return i;
}

std::vector<int> rank_histogram(const FinitePoset& p) {
  std::vector<int> h;
  for (int i = 0; i < p.size(); ++i) {
    const auto r = static_cast<std::size_t>(p.rank(i));
    if (h.size() <= r) h.resize(r + 1);
    ++h[r];
  }
  return h;
}

// Atlas assembled from the slow generator: labelled representatives, no
// canonical forms.
Atlas slow_atlas(int g) {
  Atlas a;
  a.genus = g;
  for (const Graph& r : enumerate_stable_graphs_slow(g)) a.graphs.push_back({r, automorphisms(r)});
  return a;
}

}  // namespace

TEST(Isomorphism, AutomorphismCounts) {
  EXPECT_EQ(automorphisms(theta()).size(), 12u);
  EXPECT_EQ(automorphisms(catalog::point(2)).size(), 1u);
  EXPECT_EQ(automorphisms(dumbbell()).size(), 8u);  // swap x two loop flips
  EXPECT_EQ(automorphisms(Graph({0}, {{0, 0}, {0, 0}})).size(), 8u);
}

TEST(Isomorphism, GroupClosure) {
  for (const AtlasGraph& ag : atlas2().graphs) {
    const std::set<GraphIso> group(ag.automorphisms.begin(), ag.automorphisms.end());
    EXPECT_EQ(group.size(), ag.automorphisms.size());
    for (const GraphIso& a : ag.automorphisms) {
      EXPECT_TRUE(is_isomorphism(ag.graph, ag.graph, a));
      EXPECT_TRUE(group.count(inverse(a)));
      for (const GraphIso& b : ag.automorphisms) EXPECT_TRUE(group.count(compose(a, b)));
    }
  }
}

TEST(Isomorphism, FindIsoAndCanonicalForm) {
  const Graph relabeled({0, 0}, {{1, 1}, {1, 0}, {0, 0}});
  auto iso = find_iso(dumbbell(), relabeled);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(is_isomorphism(dumbbell(), relabeled, *iso));
  EXPECT_EQ(canonical_form(dumbbell()), canonical_form(relabeled));
  EXPECT_FALSE(find_iso(dumbbell(), theta()).has_value());
  EXPECT_NE(canonical_code(dumbbell()), canonical_code(theta()));
  // Half-edge action of the vertex swap of theta.
  const GraphIso swap{{1, 0}, {0, 1, 2}, {true, true, true}};
  EXPECT_TRUE(is_isomorphism(theta(), theta(), swap));
  EXPECT_EQ(swap.map_half_edge(0), 1);
  EXPECT_FALSE(is_isomorphism(theta(), theta(), GraphIso{{1, 0}, {0, 1, 2}, {false, true, true}}));
}

TEST(Atlas, GenusTwoMembers) {
  const Atlas& a = atlas2();
  ASSERT_EQ(a.size(), 7);
  const std::vector<Graph> expected{catalog::point(2),
                                    Graph({1}, {{0, 0}}),
                                    Graph({1, 1}, {{0, 1}}),
                                    Graph({0}, {{0, 0}, {0, 0}}),
                                    Graph({0, 1}, {{0, 0}, {0, 1}}),
                                    theta(),
                                    dumbbell()};
  std::set<int> seen;
  for (const Graph& g : expected) seen.insert(find_member(a, g));
  EXPECT_EQ(seen.size(), 7u);
  std::set<int> ranks;
  for (int i = 0; i < a.size(); ++i) {
    EXPECT_LE(a.graph(i).edge_count(), 3);
    EXPECT_TRUE(is_stable(a.graph(i)));
    EXPECT_EQ(genus(a.graph(i)), 2);
    ranks.insert(a.rank(i));
  }
  EXPECT_EQ(ranks, (std::set<int>{0, 1, 2, 3}));
  EXPECT_THROW(enumerate_stable_graphs(1), std::domain_error);
}

TEST(Atlas, SlowGeneratorAgrees) {
  for (int g : {2, 3}) {
    const Atlas fast = enumerate_stable_graphs(g);
    const auto slow = enumerate_stable_graphs_slow(g);
    ASSERT_EQ(static_cast<int>(slow.size()), fast.size());
    std::set<int> hit;
    for (const Graph& s : slow) hit.insert(fast.index_of(s));
    EXPECT_EQ(static_cast<int>(hit.size()), fast.size());
    EXPECT_FALSE(hit.count(-1));
  }
  EXPECT_EQ(enumerate_stable_graphs(3).size(), 42);
}

TEST(Atlas, SingleEdgeContractionsStayInAtlas) {
  const Atlas& a = atlas2();
  for (const SingleContraction& c : a.single_edge) {
    EXPECT_EQ(c.map.source(), a.graph(c.source));
    EXPECT_EQ(c.map.target(), a.graph(c.target));
    EXPECT_EQ(c.map.contracted(), EdgeSet(a.graph(c.source).edge_count(), {c.edge}));
  }
  EXPECT_EQ(a.single_edge.size(), 12u);
}

TEST(Atlas, ContractionsBetween) {
  const Atlas& a = atlas2();
  const int th = find_member(a, theta());
  const int pt = find_member(a, catalog::point(2));
  const auto total = contractions_between(a, th, pt);
  ASSERT_EQ(total.size(), 1u);
  EXPECT_EQ(total[0].contracted(), theta().all_edges());
  const auto self = contractions_between(a, th, th);
  ASSERT_EQ(self.size(), 1u);
  EXPECT_TRUE(self[0].is_identity());
  // Dumbbell onto a weight-1 vertex with a loop: contract one loop and the
  // bridge, then either orientation of the remaining loop.
  const int db = find_member(a, dumbbell());
  const int w1loop = find_member(a, Graph({1}, {{0, 0}}));
  const auto d = contractions_between(a, db, w1loop);
  EXPECT_EQ(d.size(), 4u);
  for (const Contraction& c : d) EXPECT_TRUE(c.contracted().contains(1));
  EXPECT_TRUE(contractions_between(a, pt, th).empty());
}

TEST(GenusPosets, Sg) {
  const Atlas& a = atlas2();
  const FinitePoset s = build_Sg(a);
  EXPECT_TRUE(is_graded(s));
  const int pt = find_member(a, catalog::point(2));
  EXPECT_EQ(s.maximal_elements(), std::vector<int>{pt});
  EXPECT_EQ(s.rank(pt), 3);
  std::vector<int> mins = s.minimal_elements();
  std::sort(mins.begin(), mins.end());
  std::vector<int> want{find_member(a, theta()), find_member(a, dumbbell())};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(mins, want);
  const int th = find_member(a, theta());
  const int two_loops = find_member(a, Graph({0}, {{0, 0}, {0, 0}}));
  for (auto [x, y] : s.covers()) {
    if (x == th) {
      EXPECT_EQ(y, two_loops);
    }
  }
  // Every cover contracts exactly one edge.
  for (auto [x, y] : s.covers()) EXPECT_EQ(a.graph(x).edge_count(), a.graph(y).edge_count() + 1);
}

TEST(GenusPosets, AgAndOPg) {
  const Atlas& a = atlas2();
  const ContractionTable table(a);
  const FinitePoset s = build_Sg(a);
  for (int b : {0, 1}) {
    const GenusA ga = build_Ag(table, b);
    std::size_t expected = 0;
    for (int i = 0; i < a.size(); ++i) expected += build_A(a.graph(i), b).sets.size();
    EXPECT_EQ(static_cast<std::size_t>(ga.poset.size()), expected);
    EXPECT_TRUE(is_graded(ga.poset));
    EXPECT_TRUE(is_quotient_map(ga.to_S, ga.poset, s));
    ASSERT_EQ(ga.poset.maximal_elements().size(), 1u);
    EXPECT_EQ(ga.poset.rank(ga.poset.maximal_elements()[0]), 5);

    const GenusOP op = build_OPg(table, b, ga);
    EXPECT_TRUE(is_graded(op.poset));
    EXPECT_TRUE(is_quotient_map(op.to_S, op.poset, s));
    EXPECT_TRUE(is_quotient_map(op.to_A, op.poset, ga.poset));
    const auto top = op.poset.maximal_elements();
    ASSERT_EQ(top.size(), 1u);
    for (int x = 0; x < op.poset.size(); ++x) EXPECT_TRUE(op.poset.leq(x, top[0]));
    if (b == 0) {
      EXPECT_EQ(op.fibers[static_cast<std::size_t>(find_member(a, theta()))].poset.size(), 6);
    }
    // Each fiber sits inside ŌP^b_g as a subposet.
    for (int i = 0; i < a.size(); ++i) {
      const auto& f = op.fibers[static_cast<std::size_t>(i)];
      for (int x = 0; x < f.poset.size(); ++x) {
        for (int y = 0; y < f.poset.size(); ++y) {
          EXPECT_EQ(f.poset.leq(x, y), op.poset.leq(op.element(i, x), op.element(i, y)));
        }
      }
    }
  }
}

TEST(GenusPosets, ConjugacyQuotient) {
  const Atlas& a = atlas2();
  const ContractionTable table(a);
  const FinitePoset s = build_Sg(a);
  const std::vector<std::vector<int>> frozen{{2, 3, 4, 3, 2, 1}, {2, 3, 5, 3, 2, 1}};
  for (int b : {0, 1}) {
    const GenusA ga = build_Ag(table, b);
    const GenusOP op = build_OPg(table, b, ga);
    const GenusConj cq = conjugacy_quotient(op, a);
    EXPECT_TRUE(is_graded(cq.poset));
    EXPECT_TRUE(is_quotient_map(cq.projection, op.poset, cq.poset));
    EXPECT_TRUE(is_quotient_map(cq.to_S, cq.poset, s));
    EXPECT_EQ(rank_histogram(cq.poset), frozen[static_cast<std::size_t>(b)]);

    // Burnside: orbit count = average number of fixed classes.
    for (int i = 0; i < a.size(); ++i) {
      const AtlasGraph& ag = a.graphs[static_cast<std::size_t>(i)];
      const auto& fiber = op.fibers[static_cast<std::size_t>(i)];
      long fixed = 0;
      for (const GraphIso& g : ag.automorphisms) {
        const auto m = class_map(as_contraction(ag.graph, ag.graph, g), fiber, fiber);
        for (std::size_t x = 0; x < m.size(); ++x) fixed += m[x] == static_cast<int>(x);
      }
      const auto orbits = aut_orbits(ag, fiber);
      const int count = orbits.empty() ? 0 : *std::max_element(orbits.begin(), orbits.end()) + 1;
      EXPECT_EQ(fixed, static_cast<long>(count) * static_cast<long>(ag.automorphisms.size()));
    }

    // The same numbers from labelled, non-canonical representatives.
    const Atlas slow = slow_atlas(2);
    const ContractionTable slow_table(slow);
    const GenusA sa = build_Ag(slow_table, b);
    const GenusOP sop = build_OPg(slow_table, b, sa);
    const GenusConj scq = conjugacy_quotient(sop, slow);
    EXPECT_EQ(rank_histogram(scq.poset), frozen[static_cast<std::size_t>(b)]);
    EXPECT_EQ(rank_histogram(sop.poset), rank_histogram(op.poset));
  }
}

TEST(GenusPosets, ThetaTopClassesAreConjugate) {
  const Atlas& a = atlas2();
  const ContractionTable table(a);
  const GenusOP op = build_OPg(table, 0, build_Ag(table, 0));
  const GenusConj cq = conjugacy_quotient(op, a);
  const int th = find_member(a, theta());
  std::set<int> top;
  const auto& fiber = op.fibers[static_cast<std::size_t>(th)];
  for (std::size_t c = 0; c < fiber.classes.size(); ++c) {
    if (fiber.classes[c].removed.empty()) top.insert(cq.projection[static_cast<std::size_t>(op.element(th, static_cast<int>(c)))]);
  }
  EXPECT_EQ(top.size(), 1u);
}
