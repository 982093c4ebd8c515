// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Vertex-weighted multigraphs with loops and parallel edges.
//
// Edge i owns half-edges 2i (tail side) and 2i+1 (head side); a loop has
// tail == head. Graphs are immutable values. Most structural queries also
// come in a "spanning subgraph" form taking the set of removed edges, so
// that G - S can be inspected without renumbering its edges.

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orcalc/index_set.hpp"

namespace orcalc {

struct Edge {
  int tail = 0;
  int head = 0;

  bool is_loop() const { return tail == head; }
  /// The other end of the edge, seen from `v`.
  int opposite(int v) const { return v == tail ? head : tail; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph(std::vector<int> weights, std::vector<Edge> edges)
      : weights_(std::move(weights)), edges_(std::move(edges)) {
    if (weights_.empty()) {
      throw std::invalid_argument("Graph: at least one vertex is required");
    }
    if (weights_.size() > static_cast<std::size_t>(VertexSet::kMaxSize) ||
        edges_.size() > static_cast<std::size_t>(EdgeSet::kMaxSize)) {
      throw std::length_error("Graph: more than 64 vertices or edges");
    }
    for (int w : weights_) {
      if (w < 0) throw std::invalid_argument("Graph: negative vertex weight");
    }
    const int n = vertex_count();
    for (const Edge& e : edges_) {
      if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
        throw std::invalid_argument("Graph: edge endpoint out of range");
      }
    }
  }

  int vertex_count() const { return static_cast<int>(weights_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int half_edge_count() const { return 2 * edge_count(); }

  int weight(int v) const { return weights_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& weights() const { return weights_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// End vertex of half-edge h (2i is the tail side of edge i, 2i+1 the head side).
  int half_edge_vertex(int h) const {
    const Edge& e = edge(h / 2);
    return (h % 2 == 0) ? e.tail : e.head;
  }

  /// Number of half-edges at v; a loop contributes 2.
  int degree(int v) const { return degree(v, EdgeSet(edge_count())); }
  int degree(int v, const EdgeSet& removed) const {
    int d = 0;
    for (int i = 0; i < edge_count(); ++i) {
      if (removed.contains(i)) continue;
      d += (edges_[static_cast<std::size_t>(i)].tail == v) +
           (edges_[static_cast<std::size_t>(i)].head == v);
    }
    return d;
  }

  int total_weight() const { return std::accumulate(weights_.begin(), weights_.end(), 0); }

  EdgeSet no_edges() const { return EdgeSet(edge_count()); }
  EdgeSet all_edges() const { return EdgeSet::full(edge_count()); }
  VertexSet no_vertices() const { return VertexSet(vertex_count()); }
  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<int> weights_;
  std::vector<Edge> edges_;
};

/// A graph built from another one, with index maps back to the original.
struct Subgraph {
  Graph graph;
  std::vector<int> vertex_map;  ///< new vertex -> original vertex
  std::vector<int> edge_map;    ///< new edge -> original edge
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

/// Component label per vertex of G - removed, restricted to `within`
/// (vertices outside `within` get label -1). Labels are dense and numbered
/// in order of the smallest vertex of each component.
inline std::vector<int> component_labels(const Graph& g, const EdgeSet& removed,
                                         const VertexSet& within) {
  const int n = g.vertex_count();
  detail::UnionFind uf(n);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (removed.contains(i)) continue;
    const Edge& e = g.edge(i);
    if (within.contains(e.tail) && within.contains(e.head)) uf.unite(e.tail, e.head);
  }
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> root_label(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (!within.contains(v)) continue;
    int r = uf.find(v);
    auto& rl = root_label[static_cast<std::size_t>(r)];
    if (rl < 0) rl = next++;
    label[static_cast<std::size_t>(v)] = rl;
  }
  return label;
}

inline std::vector<VertexSet> connected_components(const Graph& g, const EdgeSet& removed) {
  auto label = component_labels(g, removed, g.all_vertices());
  int parts = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<VertexSet> out(static_cast<std::size_t>(parts), g.no_vertices());
  for (int v = 0; v < g.vertex_count(); ++v) out[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])].insert(v);
  return out;
}
inline std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.no_edges());
}

/// c(G[Z]) inside G - removed.
inline int component_count(const Graph& g, const EdgeSet& removed, const VertexSet& within) {
  auto label = component_labels(g, removed, within);
  return within.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}
inline int component_count(const Graph& g, const EdgeSet& removed) {
  return component_count(g, removed, g.all_vertices());
}
inline int component_count(const Graph& g) { return component_count(g, g.no_edges()); }

inline bool is_connected(const Graph& g, const EdgeSet& removed) {
  return component_count(g, removed) == 1;
}
inline bool is_connected(const Graph& g) { return is_connected(g, g.no_edges()); }

/// Edges of G - removed having both ends in Z (the edge set of G[Z]).
inline EdgeSet edges_inside(const Graph& g, const VertexSet& z, const EdgeSet& removed) {
  EdgeSet out(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    if (removed.contains(i)) continue;
    const Edge& e = g.edge(i);
    if (z.contains(e.tail) && z.contains(e.head)) out.insert(i);
  }
  return out;
}

/// g(G) = sum of weights - |V| + |E| + c(G).
inline int genus(const Graph& g) {
  return g.total_weight() - g.vertex_count() + g.edge_count() + component_count(g);
}

/// g(G - removed).
inline int spanning_genus(const Graph& g, const EdgeSet& removed) {
  return g.total_weight() - g.vertex_count() + (g.edge_count() - removed.count()) +
         component_count(g, removed);
}

/// g(Z) = genus of the induced subgraph G[Z] inside G - removed; 0 for empty Z.
inline int subset_genus(const Graph& g, const VertexSet& z, const EdgeSet& removed) {
  if (z.empty()) return 0;
  int w = 0;
  for (int v : z.to_vector()) w += g.weight(v);
  return w - z.count() + edges_inside(g, z, removed).count() + component_count(g, removed, z);
}
inline int subset_genus(const Graph& g, const VertexSet& z) {
  return subset_genus(g, z, g.no_edges());
}

/// G[Z]. Vertices keep their relative order.
inline Subgraph induced_subgraph(const Graph& g, const VertexSet& z) {
  if (z.empty()) throw std::domain_error("induced_subgraph: empty vertex set");
  std::vector<int> new_index(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> weights;
  std::vector<int> vmap;
  for (int v : z.to_vector()) {
    new_index[static_cast<std::size_t>(v)] = static_cast<int>(vmap.size());
    vmap.push_back(v);
    weights.push_back(g.weight(v));
  }
  std::vector<Edge> edges;
  std::vector<int> emap;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (z.contains(e.tail) && z.contains(e.head)) {
      edges.push_back({new_index[static_cast<std::size_t>(e.tail)], new_index[static_cast<std::size_t>(e.head)]});
      emap.push_back(i);
    }
  }
  return {Graph(std::move(weights), std::move(edges)), std::move(vmap), std::move(emap)};
}

/// G - S. Same vertices and weights; surviving edges keep their relative order.
inline Subgraph delete_edges(const Graph& g, const EdgeSet& s) {
  std::vector<Edge> edges;
  std::vector<int> emap;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (s.contains(i)) continue;
    edges.push_back(g.edge(i));
    emap.push_back(i);
  }
  std::vector<int> vmap(static_cast<std::size_t>(g.vertex_count()));
  std::iota(vmap.begin(), vmap.end(), 0);
  return {Graph(g.weights(), std::move(edges)), std::move(vmap), std::move(emap)};
}

/// <S>: edge set S and the vertices adjacent to it. The empty graph (S empty)
/// is reported as nullopt since graphs always carry at least one vertex.
inline std::optional<Subgraph> spanned_subgraph(const Graph& g, const EdgeSet& s) {
  if (s.empty()) return std::nullopt;
  VertexSet touched = g.no_vertices();
  for (int i : s.to_vector()) {
    touched.insert(g.edge(i).tail);
    touched.insert(g.edge(i).head);
  }
  Subgraph ind = induced_subgraph(g, touched);
  std::vector<Edge> edges;
  std::vector<int> emap;
  for (std::size_t k = 0; k < ind.edge_map.size(); ++k) {
    if (s.contains(ind.edge_map[k])) {
      edges.push_back(ind.graph.edge(static_cast<int>(k)));
      emap.push_back(ind.edge_map[k]);
    }
  }
  return Subgraph{Graph(ind.graph.weights(), std::move(edges)), std::move(ind.vertex_map),
                  std::move(emap)};
}

/// E(Z, Z^c) inside G - removed. Loops never lie in a cut.
inline EdgeSet cut_between(const Graph& g, const VertexSet& z, const EdgeSet& removed) {
  if (z.empty() || z == g.all_vertices()) {
    throw std::domain_error("cut_between: Z must be a nonempty proper vertex subset");
  }
  EdgeSet out(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    if (removed.contains(i)) continue;
    const Edge& e = g.edge(i);
    if (z.contains(e.tail) != z.contains(e.head)) out.insert(i);
  }
  return out;
}
inline EdgeSet cut_between(const Graph& g, const VertexSet& z) {
  return cut_between(g, z, g.no_edges());
}

/// Bridges of G - removed: edges whose deletion increases the component count.
inline EdgeSet bridges(const Graph& g, const EdgeSet& removed) {
  EdgeSet out(g.edge_count());
  const int base = component_count(g, removed);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (removed.contains(i) || g.edge(i).is_loop()) continue;
    EdgeSet r = removed;
    r.insert(i);
    if (component_count(g, r) > base) out.insert(i);
  }
  return out;
}
inline EdgeSet bridges(const Graph& g) { return bridges(g, g.no_edges()); }

namespace detail {
inline bool min_degree_ok(const Graph& g, int min_degree) {
  if (!is_connected(g) || genus(g) < 2) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.weight(v) == 0 && g.degree(v) < min_degree) return false;
  }
  return true;
}
}  // namespace detail

inline bool is_semistable(const Graph& g) { return detail::min_degree_ok(g, 2); }
inline bool is_stable(const Graph& g) { return detail::min_degree_ok(g, 3); }

/// Compact text form, e.g. "w[0,0] e[0-1,0-1,0-1]"; used in report keys.
inline std::string to_string(const Graph& g) {
  std::string out = "w[";
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v) out += ",";
    out += std::to_string(g.weight(v));
  }
  out += "] e[";
  for (int e = 0; e < g.edge_count(); ++e) {
    if (e) out += ",";
    out += std::to_string(g.edge(e).tail) + "-" + std::to_string(g.edge(e).head);
  }
  return out + "]";
}

}  // namespace orcalc
