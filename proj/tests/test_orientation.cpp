// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "orcalc/catalog.hpp"
#include "orcalc/hakimi.hpp"
#include "orcalc/orientation.hpp"
#include "orcalc/orientation_ops.hpp"

using namespace orcalc;
using catalog::dumbbell;
using catalog::theta;
using S = EdgeState;

namespace {

Divisor D(std::vector<int> v) { return Divisor(std::move(v)); }

std::vector<Graph> small_graphs() {
  return {theta(), dumbbell(), catalog::point(2), catalog::figure4(),
          Graph({1, 0}, {{0, 1}, {1, 1}}), Graph({0}, {{0, 0}, {0, 0}}),
          Graph({0, 0, 0}, {{0, 1}, {1, 2}, {2, 0}, {0, 1}}), catalog::bowtie_closed(),
          Graph({0, 1, 0}, {{0, 1}, {1, 2}, {0, 0}, {2, 2}})};
}

}  // namespace

TEST(Orientation, Validation) {
  EXPECT_THROW(Orientation(EdgeSet(2), {S::Forward}, 0), std::invalid_argument);
  EXPECT_THROW(Orientation(EdgeSet(2), {S::Forward, S::Absent}, 0), std::invalid_argument);
  EXPECT_THROW(Orientation(EdgeSet(2), {S::Forward, S::Bioriented}, 0), std::invalid_argument);
  EXPECT_THROW(Orientation(EdgeSet(2), {S::Bioriented, S::Bioriented}, 2), std::invalid_argument);
  EXPECT_NO_THROW(Orientation::empty(3, 1));
}

TEST(Orientation, TargetsAndDivisors) {
  const Graph g = catalog::figure4();
  const Orientation o = catalog::figure4_orientation();
  EXPECT_EQ(target_vector(g, o), D({1, 2, 2}));
  EXPECT_EQ(divisor_of(g, o), D({1, 2, 2}));
  EXPECT_EQ(target_vector(g, Orientation::empty(6, 0)), D({0, 0, 0}));
  Graph loop({0}, {{0, 0}});
  EXPECT_EQ(target_vector(loop, Orientation(EdgeSet(1), {S::Bioriented}, 1)), D({2}));
  EXPECT_EQ(divisor_of(catalog::point(2), Orientation::empty(0, 1)), D({2}));
  const Orientation t12(EdgeSet(3), {S::Forward, S::Backward, S::Forward}, 0);
  EXPECT_EQ(target_vector(theta(), t12), D({1, 2}));
  EXPECT_EQ(divisor_of(theta(), t12), D({0, 1}));
}

TEST(Orientation, TargetsMatchHalfEdgeOracle) {
  for (const Graph& g : small_graphs()) {
    for_each_subset(g.all_edges(), [&](const EdgeSet& s) {
      for (int b : {0, 1}) {
        for (const Orientation& o : enumerate_orientations(g, s, b)) {
          const Divisor t = target_vector(g, o);
          EXPECT_EQ(t.values(), oracle::targets(g, o));
          if (!o.is_empty()) {
            EXPECT_EQ(t.degree(), g.edge_count() - s.count() + b);
          }
        }
      }
    });
  }
}

TEST(Orientation, TInto) {
  const Orientation t12(EdgeSet(3), {S::Forward, S::Backward, S::Forward}, 0);
  EXPECT_EQ(t_into(theta(), t12, VertexSet(2, {0})), 1);
  EXPECT_EQ(t_into(theta(), t12, theta().all_vertices()), 0);
  Graph bar({0, 0}, {{0, 1}});
  const Orientation bi(EdgeSet(1), {S::Bioriented}, 1);
  EXPECT_EQ(t_into(bar, bi, VertexSet(2, {0})), 1);
  EXPECT_EQ(t_into(bar, bi, VertexSet(2, {1})), 1);
}

TEST(Orientation, TIntoIdentity) {
  for (const Graph& g : small_graphs()) {
    for_each_subset(g.all_edges(), [&](const EdgeSet& s) {
      for (int b : {0, 1}) {
        for (const Orientation& o : enumerate_orientations(g, s, b)) {
          const Divisor t = target_vector(g, o);
          for_each_subset(g.all_vertices(), [&](const VertexSet& z) {
            if (z.empty()) return;
            EXPECT_EQ(t_into(g, o, z),
                      t.degree_on(z) - edges_inside(g, z, s).count() - bioriented_inside(g, o, z));
          });
        }
      }
    });
  }
}

TEST(Orientation, TotallyCyclicExamples) {
  EXPECT_TRUE(is_totally_cyclic(theta(), Orientation(EdgeSet(3), {S::Forward, S::Backward, S::Forward}, 0)));
  EXPECT_FALSE(is_totally_cyclic(theta(), Orientation(EdgeSet(3), {S::Forward, S::Forward, S::Forward}, 0)));
  EXPECT_TRUE(is_totally_cyclic(theta(), Orientation::empty(3, 0)));
  EXPECT_THROW(is_totally_cyclic(theta(), Orientation(EdgeSet(3), {S::Forward, S::Bioriented, S::Forward}, 1)),
               std::domain_error);
}

TEST(Orientation, CyclicModesAgree) {
  for (const Graph& g : small_graphs()) {
    for_each_subset(g.all_edges(), [&](const EdgeSet& s) {
      for (const Orientation& o : enumerate_orientations(g, s, 0)) {
        const bool expected = !oracle::has_directed_cut(g, o);
        for (CyclicMode m : kAllCyclicModes) {
          EXPECT_EQ(is_totally_cyclic(g, o, m), expected) << mode_name(m) << " " << o.to_string();
        }
      }
    });
  }
}

TEST(Orientation, PairwiseCycleReadingFailsAtCutVertices) {
  // Two directed cycles sharing vertex v: totally cyclic, but u and w never
  // lie on a common simple cycle.
  const Graph g = catalog::bowtie_closed();
  const Orientation o(EdgeSet(5, {4}), {S::Forward, S::Backward, S::Forward, S::Backward, S::Absent}, 0);
  EXPECT_TRUE(is_totally_cyclic(g, o));
  EXPECT_FALSE(pairwise_cycle_condition(g, o));
  EXPECT_TRUE(pairwise_cycle_condition(theta(), Orientation(EdgeSet(3), {S::Forward, S::Backward, S::Forward}, 0)));
}

TEST(Orientation, RootedExamples) {
  const Graph g = dumbbell();
  int rooted_with_bridge = 0;
  for (S a : {S::Forward, S::Backward}) {
    for (S c : {S::Forward, S::Backward}) {
      rooted_with_bridge += is_rooted(g, Orientation(EdgeSet(3), {a, S::Bioriented, c}, 1));
    }
  }
  EXPECT_EQ(rooted_with_bridge, 4);
  EXPECT_FALSE(is_rooted(g, Orientation(EdgeSet(3), {S::Bioriented, S::Backward, S::Forward}, 1)));
  EXPECT_TRUE(is_rooted(catalog::point(2), Orientation::empty(0, 1)));
  EXPECT_FALSE(is_rooted(theta(), Orientation::empty(3, 1)));
}

TEST(Orientation, RootedModesAgree) {
  for (const Graph& g : small_graphs()) {
    for_each_subset(g.all_edges(), [&](const EdgeSet& s) {
      if (!is_connected(g, s)) return;
      for (const Orientation& o : enumerate_orientations(g, s, 1)) {
        const bool expected = is_rooted(g, o, RootedMode::Definition);
        for (RootedMode m : kAllRootedModes) {
          EXPECT_EQ(is_rooted(g, o, m), expected) << mode_name(m) << " " << o.to_string();
        }
      }
    });
  }
}

TEST(Orientation, Counts) {
  EXPECT_EQ(enumerate_orientations(theta(), theta().no_edges(), 0).size(), 8u);
  EXPECT_EQ(enumerate_orientations(theta(), theta().no_edges(), 1).size(), 12u);
  EXPECT_EQ(enumerate_admissible(theta(), theta().no_edges(), 0).size(), 6u);
  EXPECT_EQ(enumerate_admissible(theta(), theta().no_edges(), 1).size(), 12u);
  EXPECT_EQ(enumerate_admissible(dumbbell(), dumbbell().no_edges(), 1).size(), 8u);
  EXPECT_TRUE(enumerate_admissible(dumbbell(), dumbbell().no_edges(), 0).empty());
  const auto all = enumerate_orientations(catalog::figure4(), EdgeSet(6), 1);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::set<Orientation>(all.begin(), all.end()).size(), all.size());
}

TEST(Orientation, Classes) {
  auto c0 = admissible_classes(theta(), EdgeSet(3), 0);
  ASSERT_EQ(c0.size(), 2u);
  EXPECT_EQ(c0[0].members.size(), 3u);
  EXPECT_EQ(c0[1].members.size(), 3u);
  EXPECT_EQ(target_vector(theta(), c0[0].representative()), D({1, 2}));
  auto c1 = admissible_classes(dumbbell(), EdgeSet(3), 1);
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_EQ(c1[0].members.size(), 8u);
  EXPECT_EQ(c1[0].divisor, D({1, 1}));
  Graph dbl({0, 0}, {{0, 1}, {0, 1}});
  auto c2 = admissible_classes(dbl, EdgeSet(2), 0);
  ASSERT_EQ(c2.size(), 1u);
  EXPECT_EQ(c2[0].members.size(), 2u);
}

TEST(Orientation, NonemptinessCriteria) {
  for (const Graph& g : small_graphs()) {
    for_each_subset(g.all_edges(), [&](const EdgeSet& s) {
      EXPECT_EQ(enumerate_admissible(g, s, 0).empty(), !bridges(g, s).empty());
      EXPECT_EQ(enumerate_admissible(g, s, 1).empty(), !is_connected(g, s));
    });
  }
}

TEST(Orientation, ClassesAreStableDivisors) {
  for (const Graph& g : small_graphs()) {
    for_each_subset(g.all_edges(), [&](const EdgeSet& s) {
      for (int b : {0, 1}) {
        std::vector<Divisor> from_classes;
        for (const auto& c : admissible_classes(g, s, b)) from_classes.push_back(c.divisor);
        EXPECT_EQ(from_classes, sigma(g, s, b));
        // A class is either entirely admissible or not at all, and stable
        // divisors only come from admissible orientations.
        const auto all = enumerate_orientations(g, s, b);
        if (b == 1 && !is_connected(g, s)) continue;
        for (const auto& c : equivalence_classes(g, all)) {
          int adm = 0;
          for (const Orientation& o : c.members) adm += is_admissible(g, o);
          EXPECT_TRUE(adm == 0 || adm == static_cast<int>(c.members.size()));
          if (is_stable_divisor(g, s, c.divisor, b)) {
            EXPECT_GT(adm, 0);
          }
        }
      }
    });
  }
}

TEST(Orientation, DegreeOnConnectedSubsets) {
  for (const Graph& g : small_graphs()) {
    for_each_subset(g.all_edges(), [&](const EdgeSet& s) {
      for (int b : {0, 1}) {
        for (const Orientation& o : enumerate_admissible(g, s, b)) {
          const Divisor d = divisor_of(g, o);
          for_each_subset(g.all_vertices(), [&](const VertexSet& z) {
            if (z.empty() || component_count(g, s, z) != 1) return;
            const int bz = o.is_empty() ? (z == g.all_vertices() ? o.b() : 0) : bioriented_inside(g, o, z);
            EXPECT_EQ(d.degree_on(z), subset_genus(g, z, s) - 1 + bz + t_into(g, o, z));
          });
        }
      }
    });
  }
}

TEST(OrientationOps, ReversePath) {
  const Graph g = dumbbell();
  const Orientation o(EdgeSet(3), {S::Bioriented, S::Forward, S::Forward}, 1);
  const Orientation r = reverse_directed_path(g, o, {0, 1});
  EXPECT_EQ(r.state(1), S::Bioriented);
  EXPECT_EQ(divisor_of(g, r), divisor_of(g, o));
  EXPECT_EQ(reverse_directed_path(g, o, {0}), o);
  const Orientation t(EdgeSet(3), {S::Bioriented, S::Backward, S::Forward}, 1);
  const Orientation rt = reverse_directed_path(theta(), t, {0, 1});
  EXPECT_EQ(rt.bioriented_edge(), 1);
  EXPECT_EQ(divisor_of(theta(), rt), divisor_of(theta(), t));
  EXPECT_THROW(reverse_directed_path(theta(), t, {0, 1, 1}), std::domain_error);
  EXPECT_THROW(reverse_directed_path(theta(), t, {1, 0}), std::domain_error);
}

TEST(OrientationOps, MoveBiorientation) {
  for (const Graph& g : small_graphs()) {
    for_each_subset(g.all_edges(), [&](const EdgeSet& s) {
      if (!is_connected(g, s)) return;
      for (const Orientation& o : enumerate_admissible(g, s, 1)) {
        if (o.is_empty()) continue;
        for (int e : s.complement().to_vector()) {
          const Orientation m = move_biorientation(g, o, e);
          EXPECT_EQ(m.bioriented_edge(), e);
          EXPECT_TRUE(is_rooted(g, m));
          EXPECT_EQ(divisor_of(g, m), divisor_of(g, o));
        }
      }
    });
  }
  const Orientation o(EdgeSet(3), {S::Forward, S::Bioriented, S::Forward}, 1);
  EXPECT_EQ(move_biorientation(dumbbell(), o, 1), o);
  EXPECT_EQ(move_biorientation(dumbbell(), o, 0).bioriented_edge(), 0);
}

TEST(OrientationOps, StrongAndRootedOrient) {
  EXPECT_TRUE(is_totally_cyclic(theta(), strong_orient(theta())));
  Graph cycle({0, 0, 0}, {{0, 1}, {1, 2}, {2, 0}});
  const Orientation c = strong_orient(cycle);
  EXPECT_TRUE(c == Orientation(EdgeSet(3), {S::Forward, S::Forward, S::Forward}, 0) ||
              c == Orientation(EdgeSet(3), {S::Backward, S::Backward, S::Backward}, 0));
  EXPECT_TRUE(strong_orient(Graph({0, 0}, {})).is_empty());
  EXPECT_THROW(strong_orient(dumbbell()), std::domain_error);
  EXPECT_TRUE(is_rooted(dumbbell(), rooted_orient(dumbbell())));
  EXPECT_TRUE(is_rooted(theta(), rooted_orient(theta())));
  EXPECT_TRUE(rooted_orient(catalog::point(2)).is_empty());
  for (const Graph& g : small_graphs()) {
    for_each_subset(g.all_edges(), [&](const EdgeSet& s) {
      if (bridges(g, s).empty()) {
        const Orientation o = strong_orient(g, s);
        EXPECT_TRUE(is_totally_cyclic(g, o));
        for (int e = 0; e < g.edge_count(); ++e) {
          if (!s.contains(e) && g.edge(e).is_loop()) {
            EXPECT_EQ(o.state(e), S::Forward);
          }
        }
      }
      if (is_connected(g, s)) {
        EXPECT_TRUE(is_rooted(g, rooted_orient(g, s)));
      }
    });
  }
}

TEST(OrientationOps, RestrictAndInduce) {
  const Orientation o(EdgeSet(3), {S::Forward, S::Backward, S::Forward}, 0);
  EXPECT_EQ(restrict_orientation(o, EdgeSet(3)), o);
  const Orientation r = restrict_orientation(o, EdgeSet(3, {0}));
  EXPECT_EQ(restrict_orientation(r, EdgeSet(3, {0, 2})), restrict_orientation(o, EdgeSet(3, {0, 2})));
  EXPECT_THROW(restrict_orientation(r, EdgeSet(3, {1})), std::domain_error);
  // Figure-4 orientation is the restriction of any extension of it to G.
  const Orientation f = catalog::figure4_orientation();
  const Orientation full = f.with_state(catalog::kFigure4Edge, S::Forward);
  EXPECT_EQ(target_vector(catalog::figure4(), restrict_orientation(full, EdgeSet(6, {2}))), D({1, 2, 2}));

  const EdgeSet s(3, {0, 1});
  const Orientation on_q(EdgeSet(2), {S::Backward, S::Backward}, 0);
  const Orientation ind = induced_on_spanned(theta(), s, on_q);
  EXPECT_EQ(ind.state(0), S::Forward);
  EXPECT_EQ(ind.state(1), S::Forward);
  EXPECT_EQ(ind.removed(), EdgeSet(3, {2}));
  Graph path({0, 0, 0}, {{0, 1}, {1, 2}, {2, 0}});
  const Orientation on_path(EdgeSet(2), {S::Backward, S::Forward}, 0);
  const Orientation copied = induced_on_spanned(path, EdgeSet(3, {0, 1}), on_path);
  EXPECT_EQ(copied.state(0), S::Backward);
  EXPECT_EQ(copied.state(1), S::Forward);
}

TEST(OrientationOps, ExtendOrientation) {
  const Orientation os(EdgeSet(3, {0}), {S::Absent, S::Forward, S::Backward}, 0);
  const Orientation ot = extend_orientation(theta(), os, EdgeSet(3));
  EXPECT_TRUE(is_totally_cyclic(theta(), ot));
  EXPECT_EQ(restrict_orientation(ot, EdgeSet(3, {0})), os);
  EXPECT_EQ(extend_orientation(theta(), os, os.removed()), os);
  for (const Graph& g : small_graphs()) {
    for (int b : {0, 1}) {
      auto in_a = [&](const EdgeSet& x) { return b == 0 ? bridges(g, x).empty() : is_connected(g, x); };
      for_each_subset(g.all_edges(), [&](const EdgeSet& s) {
        if (!in_a(s)) return;
        for (const Orientation& o : enumerate_admissible(g, s, b)) {
          for_each_subset(s, [&](const EdgeSet& t) {
            if (!in_a(t)) return;
            const Orientation x = extend_orientation(g, o, t);
            EXPECT_EQ(x.removed(), t);
            EXPECT_TRUE(is_admissible(g, x));
            EXPECT_EQ(restrict_orientation(x, s), o);
          });
        }
      });
    }
  }
}

TEST(OrientationOps, BiorientingAnEdgeGivesRooted) {
  for (const Graph& g : small_graphs()) {
    if (!is_connected(g)) continue;
    for (const Orientation& o : enumerate_admissible(g, g.no_edges(), 0)) {
      for (int e = 0; e < g.edge_count(); ++e) EXPECT_TRUE(is_rooted(g, biorient_edge(g, o, e)));
    }
  }
}
