// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON and DOT output. Everything is emitted with insertion-ordered keys
// and canonically ordered arrays so that repeated runs are byte-identical.

#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "orcalc/atlas.hpp"
#include "orcalc/contraction.hpp"
#include "orcalc/graph.hpp"
#include "orcalc/poset.hpp"
#include "orcalc/suites.hpp"

namespace orcalc {

using Json = nlohmann::ordered_json;

inline Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.tail, e.head});
  return Json{{"weights", g.weights()}, {"edges", edges}, {"genus", genus(g)}};
}

inline Graph graph_from_json(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return Graph(j.at("weights").get<std::vector<int>>(), std::move(edges));
}

/// Parses the compact form written by to_string(Graph), e.g.
/// "w[0,0] e[0-1,0-1,0-1]".
inline Graph graph_from_string(const std::string& s) {
  static const std::regex whole(R"(\s*w\[([0-9,\s]*)\]\s*e\[([0-9,\-\s]*)\]\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, whole)) throw std::invalid_argument("graph_from_string: expected w[..] e[..]: " + s);
  std::vector<int> w;
  {
    std::stringstream in(m[1].str());
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.find_first_not_of(" ") != std::string::npos) w.push_back(std::stoi(item));
    }
  }
  std::vector<Edge> edges;
  {
    static const std::regex pair(R"(\s*([0-9]+)\s*-\s*([0-9]+)\s*)");
    std::stringstream in(m[2].str());
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.find_first_not_of(" ") == std::string::npos) continue;
      std::smatch pm;
      if (!std::regex_match(item, pm, pair)) throw std::invalid_argument("graph_from_string: bad edge " + item);
      edges.push_back({std::stoi(pm[1].str()), std::stoi(pm[2].str())});
    }
  }
  return Graph(std::move(w), std::move(edges));
}

inline Json to_json(const Contraction& c) {
  Json emap = Json::array();
  for (const EdgeImage& im : c.edge_map()) {
    if (im.contracted) {
      emap.push_back({{"contracted_to", im.index}});
    } else {
      emap.push_back({{"edge", im.index}, {"flipped", im.flipped}});
    }
  }
  return Json{{"source", to_json(c.source())},
              {"target", to_json(c.target())},
              {"contracted", c.contracted().to_vector()},
              {"vertex_map", c.vertex_map()},
              {"edge_map", emap}};
}

inline Json to_json(const Report& r) {
  Json failures = Json::array();
  for (const Failure& f : r.failures) {
    failures.push_back({{"statement", f.statement}, {"instance", f.instance}, {"pass", false}, {"witness", f.witness}});
  }
  Json findings = Json::array();
  for (const Finding& f : r.findings) {
    findings.push_back({{"statement", f.statement}, {"instance", f.instance}, {"detail", f.detail}});
  }
  return Json{{"instances", r.instances}, {"passes", r.passes()}, {"failures", failures}, {"findings", findings}};
}

/// Report schema: suite, instances, failures, elapsed_ms, findings, plus
/// pass count, parameters and coverage.
inline Json to_json(const SuiteReport& s, bool with_timing = true) {
  const Json r = to_json(s.report);
  Json out{{"suite", s.suite},
           {"genus", s.genus},
           {"b", s.bs},
           {"instances", r["instances"]},
           {"passes", r["passes"]},
           {"failures", r["failures"]},
           {"findings", r["findings"]},
           {"coverage", {{"items", s.items_total}, {"checked", s.items_checked}, {"sampled", s.sampled()}}}};
  if (with_timing) out["elapsed_ms"] = static_cast<long long>(s.elapsed_ms);
  if (!s.parts.empty()) {
    Json parts = Json::array();
    for (const SuiteReport& p : s.parts) {
      Json pj = to_json(p, with_timing);
      pj.erase("failures");
      pj.erase("findings");
      pj["failure_count"] = p.report.failures.size();
      pj["finding_count"] = p.report.findings.size();
      parts.push_back(std::move(pj));
    }
    out["suites"] = std::move(parts);
  }
  return out;
}

inline Json to_json(const FinitePoset& p) {
  Json elements = Json::array();
  for (int i = 0; i < p.size(); ++i) {
    Json e{{"key", p.key(i)}};
    if (p.has_rank()) e["rank"] = p.rank(i);
    elements.push_back(std::move(e));
  }
  Json covers = Json::array();
  for (auto [i, j] : p.covers()) covers.push_back({i, j});
  return Json{{"size", p.size()}, {"elements", elements}, {"covers", covers}};
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

/// Hasse diagram, bottom to top, nodes grouped by rank.
inline std::string to_dot(const FinitePoset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(name) << "\" {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  for (int i = 0; i < p.size(); ++i) {
    out << "  n" << i << " [label=\"" << dot_escape(p.key(i));
    if (p.has_rank()) out << "\\nrank " << p.rank(i);
    out << "\"];\n";
  }
  if (p.has_rank()) {
    std::map<int, std::vector<int>> by_rank;
    for (int i = 0; i < p.size(); ++i) by_rank[p.rank(i)].push_back(i);
    for (const auto& [r, nodes] : by_rank) {
      out << "  { rank=same;";
      for (int i : nodes) out << " n" << i << ";";
      out << " }\n";
    }
  }
  for (auto [i, j] : p.covers()) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

/// Strata of the compactified Jacobians over a curve with dual graph G and
/// over the universal family, as poset data only: one stratum per class
/// (curve level) or per conjugacy class (universal level).
inline Json stratification_report(const Atlas& atlas, const ContractionTable& table, int b) {
  const int g = atlas.genus;
  const GenusA ga = build_Ag(table, b);
  const GenusOP op = build_OPg(table, b, ga);
  const GenusConj conj = conjugacy_quotient(op, atlas);
  Json graphs = Json::array();
  for (int i = 0; i < atlas.size(); ++i) {
    const Graph& gr = atlas.graph(i);
    const OPBarPoset& f = op.fibers[static_cast<std::size_t>(i)];
    Json strata = Json::array();
    int top = 0;
    for (int c = 0; c < f.poset.size(); ++c) {
      const ClassElement& cl = f.classes[static_cast<std::size_t>(c)];
      const int curve_dim = spanning_genus(gr, cl.removed);
      const int universal_dim = 3 * g - 3 - gr.edge_count() + curve_dim;
      top += curve_dim == g;
      strata.push_back({{"removed", cl.removed.to_vector()},
                        {"divisor", cl.divisor.values()},
                        {"curve_dim", curve_dim},
                        {"universal_dim", universal_dim},
                        {"conjugacy_class", conj.projection[static_cast<std::size_t>(op.element(i, c))]}});
    }
    Json covers = Json::array();
    for (auto [x, y] : f.poset.covers()) covers.push_back({x, y});
    graphs.push_back({{"index", i},
                      {"graph", to_json(gr)},
                      {"aut_order", atlas.graphs[static_cast<std::size_t>(i)].automorphisms.size()},
                      {"strata", strata},
                      {"top_dimensional", top},
                      {"closure", covers}});
  }
  Json classes = Json::array();
  const int top_rank = 4 * g - 3;
  Json top = Json::array();
  for (int k = 0; k < conj.poset.size(); ++k) {
    classes.push_back({{"key", conj.poset.key(k)}, {"graph", conj.to_S[static_cast<std::size_t>(k)]}, {"dim", conj.poset.rank(k)}});
    if (conj.poset.rank(k) == top_rank) top.push_back(conj.poset.key(k));
  }
  Json covers = Json::array();
  for (auto [x, y] : conj.poset.covers()) covers.push_back({x, y});
  return Json{{"genus", g},
              {"b", b},
              {"curve_level", graphs},
              {"universal_level", {{"strata", classes}, {"top_dim", top_rank}, {"top_strata", top}, {"closure", covers}}}};
}

/// Atlas bundle: members, automorphism orders, single-edge contractions and
/// the genus-level posets for one b.
inline Json atlas_bundle(const Atlas& atlas, const ContractionTable& table, int b) {
  Json graphs = Json::array();
  for (int i = 0; i < atlas.size(); ++i) {
    graphs.push_back({{"index", i},
                      {"graph", to_json(atlas.graph(i))},
                      {"rank", atlas.rank(i)},
                      {"aut_order", atlas.graphs[static_cast<std::size_t>(i)].automorphisms.size()}});
  }
  Json single = Json::array();
  for (const SingleContraction& c : atlas.single_edge) {
    single.push_back({{"source", c.source}, {"edge", c.edge}, {"target", c.target}, {"map", to_json(c.map)}});
  }
  const GenusA ga = build_Ag(table, b);
  const GenusOP op = build_OPg(table, b, ga);
  const GenusConj conj = conjugacy_quotient(op, atlas);
  return Json{{"genus", atlas.genus},
              {"b", b},
              {"graphs", graphs},
              {"single_edge_contractions", single},
              {"posets",
               {{"S_g", to_json(build_Sg(atlas))},
                {"A_g", to_json(ga.poset)},
                {"OP_g", to_json(op.poset)},
                {"conjugacy", to_json(conj.poset)}}},
              {"stratification", stratification_report(atlas, table, b)}};
}

}  // namespace orcalc
