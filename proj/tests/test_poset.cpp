// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>

#include "orcalc/catalog.hpp"
#include "orcalc/orientation_posets.hpp"
#include "orcalc/poset.hpp"

using namespace orcalc;
using catalog::dumbbell;
using catalog::theta;

namespace {

FinitePoset chain(int n) {
  std::vector<std::string> keys;
  std::vector<int> rank;
  for (int i = 0; i < n; ++i) {
    keys.push_back(std::to_string(i));
    rank.push_back(i);
  }
  return FinitePoset::build(keys, [](int i, int j) { return i <= j; }, rank);
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Reference cover relation straight from the definition.
std::vector<std::pair<int, int>> slow_covers(const FinitePoset& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j) {
      if (!p.less(i, j)) continue;
      bool between = false;
      for (int k = 0; k < p.size(); ++k) between = between || (p.less(i, k) && p.less(k, j));
      if (!between) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace

TEST(Poset, ChainAndAntichain) {
  auto c = chain(4);
  EXPECT_EQ(c.covers(), (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_TRUE(is_graded(c));
  EXPECT_EQ(c.minimal_elements(), std::vector<int>{0});
  auto a = FinitePoset::build({"x", "y", "z"}, [](int i, int j) { return i == j; }, std::vector<int>{0, 0, 0});
  EXPECT_TRUE(a.covers().empty());
  EXPECT_TRUE(is_graded(a));
  EXPECT_EQ(a.maximal_elements().size(), 3u);
}

TEST(Poset, AxiomViolationsAreRejected) {
  EXPECT_THROW(FinitePoset::build({"a", "b"}, [](int, int) { return true; }), PosetError);
  EXPECT_THROW(FinitePoset::build({"a", "b"}, [](int i, int j) { return i < j; }), PosetError);
  // 0 <= 1 <= 2 without 0 <= 2.
  EXPECT_THROW(FinitePoset::build({"a", "b", "c"},
                                  [](int i, int j) { return i == j || (i == 0 && j == 1) || (i == 1 && j == 2); }),
               PosetError);
  EXPECT_THROW(FinitePoset::build({"a", "a"}, [](int i, int j) { return i == j; }), PosetError);
}

TEST(Poset, GradingFailsWithSkippedRank) {
  auto c = chain(3);
  EXPECT_FALSE(is_graded(c, {0, 1, 3}));
  EXPECT_FALSE(is_graded(c, {0, 0, 1}));
}

TEST(Poset, QuotientHypothesisViolation) {
  // a < b, c < d with classes {a}, {b, c}, {d}: a <= b ~ c, yet nothing in {a}
  // is below c and nothing in {d} is above b.
  auto p = FinitePoset::build({"a", "b", "c", "d"}, [](int i, int j) {
    return i == j || (i == 0 && j == 1) || (i == 2 && j == 3);
  });
  EXPECT_TRUE(lifting_violation(p, {0, 1, 1, 2}).has_value());
  EXPECT_THROW(quotient_by_equivalence(p, {0, 1, 1, 2}), PosetError);
  // Identifying b with d instead is fine.
  auto q = quotient_by_equivalence(p, {0, 1, 2, 1});
  EXPECT_EQ(q.poset.size(), 3);
  EXPECT_TRUE(is_quotient_map(q.projection, p, q.poset));
}

TEST(Poset, QuotientMapChecks) {
  auto c = chain(3);
  auto two = chain(2);
  EXPECT_TRUE(is_quotient_map({0, 0, 1}, c, two));
  EXPECT_FALSE(is_quotient_map({0, 0, 0}, c, two));  // not surjective
  EXPECT_FALSE(is_quotient_map({1, 0, 1}, c, two));  // not monotone
  auto anti = FinitePoset::build({"x", "y"}, [](int i, int j) { return i == j; });
  // Surjective and monotone, but 0 <= 1 in the target has no preimage pair.
  EXPECT_FALSE(is_quotient_map({0, 1}, anti, two));
}

TEST(OrientationPosets, AOfTheta) {
  auto a0 = build_A(theta(), 0);
  EXPECT_EQ(a0.sets.size(), 5u);
  EXPECT_EQ(sorted(*a0.poset.ranks()), (std::vector<int>{0, 1, 1, 1, 2}));
  EXPECT_TRUE(is_graded(a0.poset));
  EXPECT_EQ(a0.poset.maximal_elements().size(), 1u);
  auto a1 = build_A(theta(), 1);
  EXPECT_EQ(a1.sets.size(), 7u);
  EXPECT_TRUE(is_graded(a1.poset));
  EXPECT_EQ(sorted(*a1.poset.ranks()), (std::vector<int>{0, 0, 0, 1, 1, 1, 2}));
}

TEST(OrientationPosets, AOfDumbbell) {
  auto a0 = build_A(dumbbell(), 0);
  EXPECT_EQ(a0.sets.size(), 4u);
  for (const EdgeSet& s : a0.sets) EXPECT_TRUE(s.contains(1));
  EXPECT_EQ(build_A(Graph({0, 0}, {}), 1).sets.size(), 0u);
}

TEST(OrientationPosets, OPOfTheta) {
  auto op = build_OP(theta(), 0);
  EXPECT_EQ(op.poset.size(), 13);
  EXPECT_TRUE(is_graded(op.poset));
  EXPECT_TRUE(is_quotient_map(op.to_A, op.poset, op.A.poset));
  auto bar = build_OPbar(theta(), 0);
  EXPECT_EQ(bar.poset.size(), 6);
  EXPECT_TRUE(is_graded(bar.poset));
  EXPECT_TRUE(is_quotient_map(bar.projection, bar.op.poset, bar.poset));
  EXPECT_TRUE(is_quotient_map(bar.to_A, bar.poset, bar.op.A.poset));
  EXPECT_FALSE(universal_comparison_violation(bar).has_value());
  EXPECT_GE(bar.find(theta().no_edges(), Divisor({0, 1})), 0);
}

TEST(OrientationPosets, CoversMatchDefinition) {
  for (int b : {0, 1}) {
    for (const Graph& g : {theta(), dumbbell(), catalog::figure4()}) {
      auto bar = build_OPbar(g, b);
      EXPECT_EQ(bar.poset.covers(), slow_covers(bar.poset));
      EXPECT_EQ(bar.op.poset.covers(), slow_covers(bar.op.poset));
    }
  }
}

TEST(OrientationPosets, ForgetfulMapsAreQuotients) {
  for (int b : {0, 1}) {
    for (const Graph& g : {theta(), dumbbell(), catalog::figure4(), catalog::bowtie_closed(), catalog::point(3)}) {
      auto bar = build_OPbar(g, b);
      EXPECT_TRUE(is_graded(bar.poset));
      EXPECT_TRUE(is_graded(bar.op.A.poset));
      EXPECT_TRUE(is_quotient_map(bar.op.to_A, bar.op.poset, bar.op.A.poset));
      EXPECT_TRUE(is_quotient_map(bar.to_A, bar.poset, bar.op.A.poset));
      EXPECT_FALSE(universal_comparison_violation(bar).has_value());
      for (std::size_t c = 0; c < bar.classes.size(); ++c) {
        const auto& cl = bar.classes[c];
        for (int m : cl.members) EXPECT_EQ(divisor_of(g, bar.op.elements[static_cast<std::size_t>(m)]), cl.divisor);
        EXPECT_EQ(bar.poset.rank(static_cast<int>(c)), spanning_genus(g, cl.removed));
      }
    }
  }
}

TEST(OrientationPosets, SingleVertex) {
  auto bar = build_OPbar(catalog::point(2), 1);
  EXPECT_EQ(bar.poset.size(), 1);
  auto bar0 = build_OPbar(catalog::point(2), 0);
  EXPECT_EQ(bar0.poset.size(), 1);
}

TEST(OrientationPosets, ClassesMatchStableDivisors) {
  for (int b : {0, 1}) {
    for (const Graph& g : {theta(), dumbbell(), catalog::figure4()}) {
      auto bar = build_OPbar(g, b);
      std::size_t expected = 0;
      for (const EdgeSet& s : bar.op.A.sets) expected += sigma(g, s, b).size();
      EXPECT_EQ(bar.classes.size(), expected);
    }
  }
}
