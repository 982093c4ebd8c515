// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>

#include "orcalc/orcalc.hpp"

using namespace orcalc;

namespace {

SuiteContext& genus2() {
  static SuiteContext ctx(SuiteOptions{});
  return ctx;
}

std::string dump(const Report& r) {
  std::string out;
  for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) {
    out += r.failures[i].statement + " | " + r.failures[i].instance + " | " + r.failures[i].witness + "\n";
  }
  return out;
}

bool has_finding(const Report& r, const std::string& needle) {
  return std::any_of(r.findings.begin(), r.findings.end(), [&](const Finding& f) {
    return (f.statement + " " + f.instance + " " + f.detail).find(needle) != std::string::npos;
  });
}

}  // namespace

class EverySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(EverySuite, PassesAtGenusTwo) {
  const SuiteReport r = run_suite(GetParam(), genus2());
  EXPECT_TRUE(r.ok()) << dump(r.report);
  EXPECT_GT(r.report.instances, 0);
  EXPECT_FALSE(r.sampled());
  EXPECT_EQ(r.report.passes() + static_cast<long>(r.report.failures.size()), r.report.instances);
}

INSTANTIATE_TEST_SUITE_P(Suites, EverySuite,
                         ::testing::Values("lm0", "lmO1", "lmfree", "F1-LmO", "degor", "quoto-poo", "rkBP", "ftriv",
                                           "fupr", "fprop", "fthm", "fdiag-bricor", "rkSg", "Bgq", "propOg", "cOP",
                                           "exclm", "remark-0e1", "noinjdeg"),
                         [](const auto& info) {
                           std::string s = info.param;
                           std::replace(s.begin(), s.end(), '-', '_');
                           return s;
                         });

TEST(Suites, RemarkReportsTheThetaCollision) {
  const SuiteReport r = run_suite("remark-0e1", genus2());
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(has_finding(r.report, "w[0,0] e[0-1,0-1,0-1]"));
  EXPECT_TRUE(has_finding(r.report, "18 pairs vs 12 rooted 1-orientations"));
  EXPECT_TRUE(has_finding(r.report, "both give"));
}

TEST(Suites, EqualDivisorsOnDifferentSubgraphs) {
  const SuiteReport r = run_suite("noinjdeg", genus2());
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(has_finding(r.report, "d=[0,0] on S=[0] and S=[1]"));
}

TEST(Suites, PairwiseCycleReadingIsAFindingNotAFailure) {
  const SuiteReport r = run_suite("lm0", genus2());
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(has_finding(r.report, "pairwise cycle reading"));
}

TEST(Suites, DivisorOrderIsWeakerThanClassOrder) {
  const SuiteReport r = run_suite("quoto-poo", genus2());
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(has_finding(r.report, "{\"removed\":[0],\"divisor\":[1,3,1]} and {\"removed\":[],\"divisor\":[1,3,2]}"));
}

TEST(Suites, AllMergesEverySuite) {
  SuiteOptions opt;
  opt.bs = {0};
  const SuiteReport r = run_suite("all", opt);
  EXPECT_TRUE(r.ok()) << dump(r.report);
  EXPECT_EQ(r.parts.size(), suite_ids().size() - 1);
  long sum = 0;
  for (const SuiteReport& p : r.parts) sum += p.report.instances;
  EXPECT_EQ(sum, r.report.instances);
}

TEST(Suites, UsageErrors) {
  EXPECT_THROW(run_suite("nope", SuiteOptions{}), UsageError);
  SuiteOptions low;
  low.genus = 1;
  EXPECT_THROW(run_suite("degor", low), UsageError);
  EXPECT_THROW(parse_b("2"), UsageError);
  EXPECT_EQ(parse_b("both"), (std::vector<int>{0, 1}));
}

TEST(Suites, ThreadCountDoesNotChangeTheReport) {
  SuiteOptions one;
  SuiteOptions four;
  four.threads = 4;
  const Json a = to_json(run_suite("fprop", one), false);
  const Json b = to_json(run_suite("fprop", four), false);
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Suites, SmallBudgetSamplesReproducibly) {
  SuiteOptions opt;
  opt.genus = 3;
  opt.bs = {1};
  opt.budget_secs = 0.01;
  const SuiteReport a = run_suite("lmO1", opt);
  const SuiteReport b = run_suite("lmO1", opt);
  EXPECT_TRUE(a.sampled());
  EXPECT_GT(a.items_checked, 0);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(to_json(a, false).dump(), to_json(b, false).dump());
}

TEST(Suites, GenusThreeCharacterizations) {
  SuiteOptions opt;
  opt.genus = 3;
  SuiteContext ctx(opt);
  for (const char* id : {"lm0", "lmO1", "F1-LmO", "degor", "rkSg"}) {
    const SuiteReport r = run_suite(id, ctx);
    EXPECT_TRUE(r.ok()) << id << "\n" << dump(r.report);
    EXPECT_FALSE(r.sampled()) << id;
  }
}

TEST(JsonIo, GraphRoundTrip) {
  for (const AtlasGraph& ag : genus2().atlas().graphs) {
    EXPECT_EQ(graph_from_json(to_json(ag.graph)), ag.graph);
    EXPECT_EQ(graph_from_string(to_string(ag.graph)), ag.graph);
  }
  EXPECT_THROW(graph_from_string("w[0] e[0-"), std::invalid_argument);
}

TEST(JsonIo, ReportSchema) {
  const Json j = to_json(run_suite("degor", genus2()));
  for (const char* k : {"suite", "instances", "failures", "elapsed_ms", "findings"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["suite"], "degor");
  EXPECT_TRUE(j["failures"].is_array());
}

TEST(JsonIo, ContractionSchema) {
  const Json j = to_json(contract(catalog::dumbbell(), EdgeSet(3, {1})));
  for (const char* k : {"source", "contracted", "vertex_map", "edge_map"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["contracted"], Json::array({1}));
}

TEST(JsonIo, DotOfThetaClasses) {
  const std::string dot = to_dot(build_OPbar(catalog::theta(), 0).poset, "theta");
  std::size_t nodes = 0;
  for (std::size_t p = dot.find("[label="); p != std::string::npos; p = dot.find("[label=", p + 1)) ++nodes;
  EXPECT_EQ(nodes, 6u);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
}

TEST(Stratification, ThetaDimensions) {
  const Atlas& atlas = genus2().atlas();
  const Json rep = stratification_report(atlas, genus2().table(), 0);
  const int theta = atlas.index_of(catalog::theta());
  std::vector<int> dims;
  for (const auto& s : rep["curve_level"][static_cast<std::size_t>(theta)]["strata"]) dims.push_back(s["curve_dim"]);
  std::sort(dims.rbegin(), dims.rend());
  EXPECT_EQ(dims, (std::vector<int>{2, 2, 1, 1, 1, 0}));
  EXPECT_EQ(rep["curve_level"][static_cast<std::size_t>(theta)]["top_dimensional"], 2);
}

TEST(Stratification, DumbbellB1CountsClasses) {
  const Atlas& atlas = genus2().atlas();
  const Json rep = stratification_report(atlas, genus2().table(), 1);
  const Graph db = catalog::dumbbell();
  std::size_t expected = 0;
  for_each_subset(db.all_edges(), [&](const EdgeSet& s) {
    if (is_connected(db, s)) expected += admissible_classes(db, s, 1).size();
  });
  const int i = atlas.index_of(db);
  EXPECT_EQ(rep["curve_level"][static_cast<std::size_t>(i)]["strata"].size(), expected);
}

TEST(Stratification, DimensionsFollowTheFormulas) {
  const Atlas& atlas = genus2().atlas();
  for (int b : {0, 1}) {
    const Json rep = stratification_report(atlas, genus2().table(), b);
    for (const auto& gj : rep["curve_level"]) {
      const Graph g = graph_from_json(gj["graph"]);
      for (const auto& s : gj["strata"]) {
        EdgeSet removed = g.no_edges();
        for (int e : s["removed"]) removed.insert(e);
        EXPECT_EQ(s["curve_dim"], spanning_genus(g, removed));
        EXPECT_EQ(s["universal_dim"], 3 * 2 - 3 - g.edge_count() + spanning_genus(g, removed));
      }
    }
    EXPECT_EQ(rep["universal_level"]["top_dim"], 5);
    EXPECT_EQ(rep["universal_level"]["top_strata"].size(), 1u);
  }
}
