// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Stable graphs of a fixed genus up to isomorphism and the genus-level posets
// S_g, A^b_g, ŌP^b_g and its conjugacy quotient [OP^b_g].

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orcalc/contraction.hpp"
#include "orcalc/functors.hpp"
#include "orcalc/isomorphism.hpp"
#include "orcalc/orientation_posets.hpp"
#include "orcalc/poset.hpp"

namespace orcalc {

struct AtlasGraph {
  Graph graph;
  std::vector<GraphIso> automorphisms;
};

struct SingleContraction {
  int source;
  int edge;
  int target;
  Contraction map;  ///< contract(source, {edge}) followed by an iso onto the atlas member
};

struct Atlas {
  int genus = 0;
  std::vector<AtlasGraph> graphs;
  std::vector<SingleContraction> single_edge;

  int size() const { return static_cast<int>(graphs.size()); }
  const Graph& graph(int i) const { return graphs.at(static_cast<std::size_t>(i)).graph; }
  int rank(int i) const { return 3 * genus - 3 - graph(i).edge_count(); }

  int index_of(const Graph& g) const {
    const Graph c = canonical_form(g);
    for (int i = 0; i < size(); ++i) {
      if (graph(i) == c) return i;
    }
    return -1;
  }
};

namespace detail {

/// Every multiset of m pairs (a <= b) over n vertices, as edge lists.
inline void for_each_edge_multiset(int n, int m, const std::function<void(const std::vector<Edge>&)>& fn) {
  std::vector<Edge> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) pairs.push_back({a, b});
  }
  std::vector<Edge> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == m) {
      fn(cur);
      return;
    }
    for (std::size_t i = from; i < pairs.size(); ++i) {
      cur.push_back(pairs[i]);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
}

/// Weight vectors of length n with entries summing to at most `budget`;
/// nondecreasing only when `sorted_only`.
inline void for_each_weight_vector(int n, int budget, bool sorted_only,
                                   const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> w;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(w.size()) == n) {
      fn(w);
      return;
    }
    const int lo = (sorted_only && !w.empty()) ? w.back() : 0;
    for (int x = lo; x <= left; ++x) {
      w.push_back(x);
      rec(left - x);
      w.pop_back();
    }
  };
  rec(budget);
}

inline bool is_stable_graph(const Graph& g, int genus_value) {
  return is_connected(g) && genus(g) == genus_value && is_stable(g);
}

/// Every connected stable labelled candidate of genus g: vertex counts
/// 1..2g-2, weights, and edge multisets of the size the genus formula forces.
inline void for_each_stable_candidate(int g, bool sorted_weights, const std::function<void(const Graph&)>& fn) {
  for (int n = 1; n <= 2 * g - 2; ++n) {
    for_each_weight_vector(n, g, sorted_weights, [&](const std::vector<int>& w) {
      int total = 0;
      for (int x : w) total += x;
      const int m = g - total + n - 1;
      if (m < n - 1 || m > 3 * g - 3) return;
      for_each_edge_multiset(n, m, [&](const std::vector<Edge>& edges) {
        Graph cand(w, edges);
        if (is_stable_graph(cand, g)) fn(cand);
      });
    });
  }
}

}  // namespace detail

/// Members are canonical forms ordered by rank 3g-3-|E|, then by canonical code.
inline Atlas enumerate_stable_graphs(int g) {
  if (g < 2) throw std::domain_error("enumerate_stable_graphs: genus must be at least 2");
  std::set<std::vector<int>> codes;
  detail::for_each_stable_candidate(g, true, [&](const Graph& cand) { codes.insert(canonical_code(cand)); });
  std::vector<Graph> members;
  for (const auto& c : codes) members.push_back(graph_from_code(c));
  std::stable_sort(members.begin(), members.end(), [](const Graph& a, const Graph& b) {
    return a.edge_count() > b.edge_count();
  });
  Atlas atlas;
  atlas.genus = g;
  for (Graph& m : members) {
    auto aut = automorphisms(m);
    atlas.graphs.push_back({std::move(m), std::move(aut)});
  }
  for (int i = 0; i < atlas.size(); ++i) {
    const Graph& src = atlas.graph(i);
    for (int e = 0; e < src.edge_count(); ++e) {
      const Contraction c = contract(src, EdgeSet(src.edge_count(), {e}));
      const int j = atlas.index_of(c.target());
      if (j < 0) throw std::logic_error("enumerate_stable_graphs: contraction leaves the atlas");
      const auto iso = find_iso(c.target(), atlas.graph(j));
      atlas.single_edge.push_back({i, e, j, compose(c, as_contraction(c.target(), atlas.graph(j), *iso))});
    }
  }
  return atlas;
}

/// Independent check of the enumeration: all labelled candidates (any weight
/// order), grouped by pairwise isomorphism tests instead of canonical forms.
inline std::vector<Graph> enumerate_stable_graphs_slow(int g) {
  if (g < 2) throw std::domain_error("enumerate_stable_graphs_slow: genus must be at least 2");
  std::vector<Graph> reps;
  detail::for_each_stable_candidate(g, false, [&](const Graph& cand) {
    for (const Graph& r : reps) {
      if (find_iso(cand, r)) return;
    }
    reps.push_back(cand);
  });
  return reps;
}

/// All contractions G_i -> G_j: every S0 whose contraction is isomorphic to
/// G_j, composed with every such isomorphism. For i == j only the identity.
inline std::vector<Contraction> contractions_between(const Atlas& atlas, int i, int j) {
  const Graph& g = atlas.graph(i);
  const Graph& h = atlas.graph(j);
  if (i == j) return {identity_contraction(g)};
  std::vector<Contraction> out;
  const int k = g.edge_count() - h.edge_count();
  if (k <= 0) return out;
  for_each_subset(g.all_edges(), [&](const EdgeSet& s0) {
    if (s0.count() != k) return;
    const Contraction c = contract(g, s0);
    for (const GraphIso& a : isomorphisms(c.target(), h)) out.push_back(compose(c, as_contraction(c.target(), h, a)));
  });
  return out;
}

/// Lazily computed contractions_between for every pair.
class ContractionTable {
 public:
  explicit ContractionTable(const Atlas& atlas) : atlas_(&atlas) {}

  const std::vector<Contraction>& between(int i, int j) const {
    auto it = cache_.find({i, j});
    if (it == cache_.end()) it = cache_.emplace(std::make_pair(i, j), contractions_between(*atlas_, i, j)).first;
    return it->second;
  }

  const Atlas& atlas() const { return *atlas_; }

 private:
  const Atlas* atlas_;
  mutable std::map<std::pair<int, int>, std::vector<Contraction>> cache_;
};

/// S_g: G <= H iff H is a contraction of G; rank 3g-3-|E(G)|.
inline FinitePoset build_Sg(const Atlas& atlas) {
  const int n = atlas.size();
  std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    const Graph& g = atlas.graph(i);
    for_each_subset(g.all_edges(), [&](const EdgeSet& s0) {
      const int j = atlas.index_of(contract(g, s0).target());
      if (j < 0) throw std::logic_error("build_Sg: contraction leaves the atlas");
      reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    });
  }
  std::vector<std::string> keys;
  std::vector<int> rank;
  for (int i = 0; i < n; ++i) {
    keys.push_back("G" + std::to_string(i));
    rank.push_back(atlas.rank(i));
  }
  return FinitePoset::build(std::move(keys), [&](int i, int j) { return bool(reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]); },
                            std::move(rank));
}

/// A^b_g: pairs (G, S) with (G, S) <= (H, T) iff some contraction G -> H
/// has γ^*T ⊆ S. Rank 3g-3-|E(G)|+g(G-S).
struct GenusA {
  std::vector<APoset> fibers;            ///< A^b_G per atlas member
  std::vector<std::pair<int, int>> elements;  ///< (graph, index in fiber)
  std::vector<int> to_S;
  FinitePoset poset;
};

inline GenusA build_Ag(const ContractionTable& table, int b) {
  const Atlas& atlas = table.atlas();
  GenusA out;
  std::vector<std::string> keys;
  std::vector<int> rank;
  std::vector<int> offset;
  for (int i = 0; i < atlas.size(); ++i) {
    offset.push_back(static_cast<int>(out.elements.size()));
    out.fibers.push_back(build_A(atlas.graph(i), b));
    const APoset& a = out.fibers.back();
    for (std::size_t k = 0; k < a.sets.size(); ++k) {
      out.elements.emplace_back(i, static_cast<int>(k));
      out.to_S.push_back(i);
      keys.push_back("G" + std::to_string(i) + ":" + ints_json(a.sets[k].to_vector()));
      rank.push_back(atlas.rank(i) + spanning_genus(atlas.graph(i), a.sets[k]));
    }
  }
  const int n = static_cast<int>(out.elements.size());
  std::vector<std::vector<bool>> rel(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int gi = 0; gi < atlas.size(); ++gi) {
    for (int hi = 0; hi < atlas.size(); ++hi) {
      const APoset& ag = out.fibers[static_cast<std::size_t>(gi)];
      const APoset& ah = out.fibers[static_cast<std::size_t>(hi)];
      for (const Contraction& c : table.between(gi, hi)) {
        for (std::size_t t = 0; t < ah.sets.size(); ++t) {
          const EdgeSet pulled = pull_edges(c, ah.sets[t], b);
          for (std::size_t s = 0; s < ag.sets.size(); ++s) {
            if (pulled.subset_of(ag.sets[s])) {
              rel[static_cast<std::size_t>(offset[static_cast<std::size_t>(gi)]) + s]
                 [static_cast<std::size_t>(offset[static_cast<std::size_t>(hi)]) + t] = true;
            }
          }
        }
      }
    }
  }
  out.poset = FinitePoset::build(
      std::move(keys), [&](int i, int j) { return bool(rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]); },
      std::move(rank));
  return out;
}

/// ŌP^b_g: pairs (G, Ō_S) with (G, Ō_S) <= (H, Ō_T) iff some contraction
/// γ: G -> H has γ̄_*Ō_S <= Ō_T in ŌP^b_H.
struct GenusOP {
  std::vector<OPBarPoset> fibers;
  std::vector<std::pair<int, int>> elements;  ///< (graph, class index in fiber)
  std::vector<int> offset;                    ///< first element of each graph
  std::vector<int> to_S;
  std::vector<int> to_A;  ///< index into GenusA::elements
  FinitePoset poset;

  int element(int graph, int cls) const { return offset[static_cast<std::size_t>(graph)] + cls; }
};

inline GenusOP build_OPg(const ContractionTable& table, int b, const GenusA& ga) {
  const Atlas& atlas = table.atlas();
  GenusOP out;
  std::vector<std::string> keys;
  std::vector<int> rank;
  std::map<std::pair<int, int>, int> a_index;
  for (std::size_t k = 0; k < ga.elements.size(); ++k) a_index.emplace(ga.elements[k], static_cast<int>(k));
  for (int i = 0; i < atlas.size(); ++i) {
    out.offset.push_back(static_cast<int>(out.elements.size()));
    out.fibers.push_back(build_OPbar(atlas.graph(i), b));
    const OPBarPoset& f = out.fibers.back();
    for (std::size_t c = 0; c < f.classes.size(); ++c) {
      out.elements.emplace_back(i, static_cast<int>(c));
      out.to_S.push_back(i);
      out.to_A.push_back(a_index.at({i, f.to_A[c]}));
      keys.push_back("G" + std::to_string(i) + ":" + f.poset.key(static_cast<int>(c)));
      rank.push_back(atlas.rank(i) + spanning_genus(atlas.graph(i), f.classes[c].removed));
    }
  }
  const int n = static_cast<int>(out.elements.size());
  detail::BitRows rel(n);
  for (int gi = 0; gi < atlas.size(); ++gi) {
    for (int hi = 0; hi < atlas.size(); ++hi) {
      const OPBarPoset& fg = out.fibers[static_cast<std::size_t>(gi)];
      const OPBarPoset& fh = out.fibers[static_cast<std::size_t>(hi)];
      for (const Contraction& c : table.between(gi, hi)) {
        const std::vector<int> cmap = class_map(c, fg, fh);
        for (std::size_t x = 0; x < cmap.size(); ++x) {
          for (int y = 0; y < fh.poset.size(); ++y) {
            if (fh.poset.leq(cmap[x], y)) rel.set(out.element(gi, static_cast<int>(x)), out.element(hi, y));
          }
        }
      }
    }
  }
  out.poset = FinitePoset::build(std::move(keys), [&](int i, int j) { return rel.get(i, j); }, std::move(rank));
  return out;
}

/// [OP^b_g]: ŌP^b_g modulo the action of Aut(G) on each fiber.
struct GenusConj {
  std::vector<int> projection;  ///< ŌP^b_g element -> conjugacy class
  std::vector<int> to_S;
  FinitePoset poset;
};

/// Orbit labels of Aut(G) acting on the classes of ŌP^b_G.
inline std::vector<int> aut_orbits(const AtlasGraph& ag, const OPBarPoset& fiber) {
  const int n = fiber.poset.size();
  detail::UnionFind uf(n);
  for (const GraphIso& a : ag.automorphisms) {
    const std::vector<int> m = class_map(as_contraction(ag.graph, ag.graph, a), fiber, fiber);
    for (int x = 0; x < n; ++x) uf.unite(x, m[static_cast<std::size_t>(x)]);
  }
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::map<int, int> root_label;
  for (int x = 0; x < n; ++x) {
    auto [it, fresh] = root_label.emplace(uf.find(x), static_cast<int>(root_label.size()));
    label[static_cast<std::size_t>(x)] = it->second;
  }
  return label;
}

inline GenusConj conjugacy_quotient(const GenusOP& op, const Atlas& atlas) {
  GenusConj out;
  out.projection.assign(op.elements.size(), -1);
  std::vector<std::string> keys;
  std::vector<int> rank;
  int next = 0;
  for (int i = 0; i < atlas.size(); ++i) {
    const std::vector<int> orbit = aut_orbits(atlas.graphs[static_cast<std::size_t>(i)], op.fibers[static_cast<std::size_t>(i)]);
    const int base = next;
    for (std::size_t c = 0; c < orbit.size(); ++c) {
      const int label = base + orbit[c];
      out.projection[static_cast<std::size_t>(op.element(i, static_cast<int>(c)))] = label;
      if (label == next) {
        keys.push_back("[" + op.poset.key(op.element(i, static_cast<int>(c))) + "]");
        rank.push_back(op.poset.rank(op.element(i, static_cast<int>(c))));
        out.to_S.push_back(i);
        ++next;
      }
    }
  }
  PosetQuotient q = quotient_by_equivalence(op.poset, out.projection, std::move(keys), std::move(rank));
  out.poset = std::move(q.poset);
  return out;
}

}  // namespace orcalc
