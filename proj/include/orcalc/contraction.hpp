// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Weighted edge contractions G -> G/S0 and the subdivided graphs Ĝ_S.
//
// A Contraction records the vertex map and, for every source edge, either
// the target edge it becomes or the target vertex it collapses into. Surviving
// edges carry a flip flag telling whether the tail half-edge of the source edge
// lands on the head half-edge of its image; plain contractions never flip,
// but composing with an isomorphism can.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orcalc/graph.hpp"

namespace orcalc {

struct EdgeImage {
  bool contracted = false;  ///< true: `index` is a target vertex
  int index = 0;            ///< target edge (surviving) or target vertex (contracted)
  bool flipped = false;     ///< surviving edges only
  friend bool operator==(const EdgeImage&, const EdgeImage&) = default;
};

class Contraction {
 public:
  Contraction(Graph source, Graph target, EdgeSet contracted, std::vector<int> vertex_map,
              std::vector<EdgeImage> edge_map)
      : source_(std::move(source)),
        target_(std::move(target)),
        contracted_(contracted),
        vertex_map_(std::move(vertex_map)),
        edge_map_(std::move(edge_map)) {
    validate();
  }

  const Graph& source() const { return source_; }
  const Graph& target() const { return target_; }
  const EdgeSet& contracted() const { return contracted_; }
  const std::vector<int>& vertex_map() const { return vertex_map_; }
  const std::vector<EdgeImage>& edge_map() const { return edge_map_; }

  int map_vertex(int v) const { return vertex_map_.at(static_cast<std::size_t>(v)); }
  const EdgeImage& map_edge(int e) const { return edge_map_.at(static_cast<std::size_t>(e)); }

  bool is_identity() const {
    if (!contracted_.empty() || source_ != target_) return false;
    for (int v = 0; v < source_.vertex_count(); ++v) {
      if (map_vertex(v) != v) return false;
    }
    for (int e = 0; e < source_.edge_count(); ++e) {
      if (map_edge(e).index != e || map_edge(e).flipped) return false;
    }
    return true;
  }

  /// Source edge mapped onto target edge f.
  int preimage_edge(int f) const {
    for (int e = 0; e < source_.edge_count(); ++e) {
      const EdgeImage& im = map_edge(e);
      if (!im.contracted && im.index == f) return e;
    }
    throw std::out_of_range("Contraction: target edge has no preimage");
  }

  friend bool operator==(const Contraction&, const Contraction&) = default;

 private:
  void validate() const {
    const int n = source_.vertex_count();
    const int m = source_.edge_count();
    auto fail = [](const std::string& why) { throw std::invalid_argument("Contraction: " + why); };
    if (static_cast<int>(vertex_map_.size()) != n || static_cast<int>(edge_map_.size()) != m ||
        contracted_.size() != m) {
      fail("map sizes do not match the source graph");
    }
    std::vector<int> vertex_hits(static_cast<std::size_t>(target_.vertex_count()), 0);
    for (int v : vertex_map_) {
      if (v < 0 || v >= target_.vertex_count()) fail("vertex image out of range");
      ++vertex_hits[static_cast<std::size_t>(v)];
    }
    for (int h : vertex_hits) {
      if (h == 0) fail("vertex map is not surjective");
    }
    std::vector<int> edge_hits(static_cast<std::size_t>(target_.edge_count()), 0);
    for (int e = 0; e < m; ++e) {
      const EdgeImage& im = edge_map_[static_cast<std::size_t>(e)];
      const Edge& se = source_.edge(e);
      const int a = vertex_map_[static_cast<std::size_t>(se.tail)];
      const int b = vertex_map_[static_cast<std::size_t>(se.head)];
      if (im.contracted != contracted_.contains(e)) fail("edge map disagrees with contracted set");
      if (im.contracted) {
        if (im.index != a || im.index != b) fail("contracted edge ends do not meet its vertex");
        continue;
      }
      if (im.index < 0 || im.index >= target_.edge_count()) fail("edge image out of range");
      ++edge_hits[static_cast<std::size_t>(im.index)];
      const Edge& te = target_.edge(im.index);
      const bool ok = im.flipped ? (te.tail == b && te.head == a) : (te.tail == a && te.head == b);
      if (!ok) fail("edge endpoints do not commute with the vertex map");
    }
    for (int h : edge_hits) {
      if (h != 1) fail("surviving edges are not a bijection onto target edges");
    }
    // Target weight = genus of the collapsed piece: preimage vertices plus
    // exactly the contracted edges that land on the vertex.
    for (int v = 0; v < target_.vertex_count(); ++v) {
      int wsum = 0;
      int verts = 0;
      int edges = 0;
      for (int z = 0; z < n; ++z) {
        if (vertex_map_[static_cast<std::size_t>(z)] == v) {
          wsum += source_.weight(z);
          ++verts;
        }
      }
      for (int e = 0; e < m; ++e) {
        const EdgeImage& im = edge_map_[static_cast<std::size_t>(e)];
        if (im.contracted && im.index == v) ++edges;
      }
      // The preimage piece is connected, so its genus is wsum - verts + edges + 1.
      if (target_.weight(v) != wsum - verts + edges + 1) fail("target weight violates the genus rule");
    }
  }

  Graph source_;
  Graph target_;
  EdgeSet contracted_;
  std::vector<int> vertex_map_;
  std::vector<EdgeImage> edge_map_;
};

/// G/S0. New vertices are numbered by first appearance in the source vertex
/// order; surviving edges keep their relative order and orientation.
inline Contraction contract(const Graph& g, const EdgeSet& s0) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  detail::UnionFind uf(n);
  for (int e : s0.to_vector()) uf.unite(g.edge(e).tail, g.edge(e).head);

  std::vector<int> root_to_new(static_cast<std::size_t>(n), -1);
  std::vector<int> vmap(static_cast<std::size_t>(n));
  int next = 0;
  for (int v = 0; v < n; ++v) {
    int r = uf.find(v);
    auto& slot = root_to_new[static_cast<std::size_t>(r)];
    if (slot < 0) slot = next++;
    vmap[static_cast<std::size_t>(v)] = slot;
  }

  std::vector<int> wsum(static_cast<std::size_t>(next), 0);
  std::vector<int> verts(static_cast<std::size_t>(next), 0);
  std::vector<int> cedges(static_cast<std::size_t>(next), 0);
  for (int v = 0; v < n; ++v) {
    wsum[static_cast<std::size_t>(vmap[static_cast<std::size_t>(v)])] += g.weight(v);
    ++verts[static_cast<std::size_t>(vmap[static_cast<std::size_t>(v)])];
  }
  std::vector<EdgeImage> emap(static_cast<std::size_t>(m));
  std::vector<Edge> edges;
  for (int e = 0; e < m; ++e) {
    const Edge& se = g.edge(e);
    const int a = vmap[static_cast<std::size_t>(se.tail)];
    const int b = vmap[static_cast<std::size_t>(se.head)];
    if (s0.contains(e)) {
      emap[static_cast<std::size_t>(e)] = {true, a, false};
      ++cedges[static_cast<std::size_t>(a)];
    } else {
      emap[static_cast<std::size_t>(e)] = {false, static_cast<int>(edges.size()), false};
      edges.push_back({a, b});
    }
  }
  std::vector<int> weights(static_cast<std::size_t>(next));
  for (int v = 0; v < next; ++v) {
    const auto k = static_cast<std::size_t>(v);
    weights[k] = wsum[k] - verts[k] + cedges[k] + 1;
  }
  return Contraction(g, Graph(std::move(weights), std::move(edges)), s0, std::move(vmap),
                     std::move(emap));
}

inline Contraction identity_contraction(const Graph& g) { return contract(g, g.no_edges()); }

/// G(S) = G/(E \ S). Its edges are the members of S in increasing order.
inline Contraction quotient_to(const Graph& g, const EdgeSet& s) {
  return contract(g, g.all_edges() - s);
}

/// delta ∘ gamma for gamma: G -> H and delta: H -> J.
inline Contraction compose(const Contraction& gamma, const Contraction& delta) {
  if (gamma.target() != delta.source()) {
    throw std::domain_error("compose: contractions are not composable");
  }
  const Graph& g = gamma.source();
  std::vector<int> vmap(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    vmap[static_cast<std::size_t>(v)] = delta.map_vertex(gamma.map_vertex(v));
  }
  EdgeSet contracted(g.edge_count());
  std::vector<EdgeImage> emap(static_cast<std::size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    const EdgeImage& a = gamma.map_edge(e);
    EdgeImage out;
    if (a.contracted) {
      out = {true, delta.map_vertex(a.index), false};
    } else {
      const EdgeImage& b = delta.map_edge(a.index);
      out = b.contracted ? EdgeImage{true, b.index, false}
                         : EdgeImage{false, b.index, a.flipped != b.flipped};
    }
    if (out.contracted) contracted.insert(e);
    emap[static_cast<std::size_t>(e)] = out;
  }
  return Contraction(g, delta.target(), contracted, std::move(vmap), std::move(emap));
}

/// Ĝ_S: every e in S is replaced by an exceptional weight-0 vertex v_e and
/// two edges h_e = (tail, v_e), j_e = (v_e, head). Exceptional vertices are
/// appended after the original ones in increasing edge order; h_e and j_e
/// take the place of e in the edge order.
struct Subdivision {
  Graph graph;
  EdgeSet subdivided;
  std::vector<int> edge_image;   ///< e not in S: index of e in Ĝ_S, else -1
  std::vector<int> exceptional;  ///< e in S: v_e, else -1
  std::vector<int> h_edge;       ///< e in S: h_e, else -1
  std::vector<int> j_edge;       ///< e in S: j_e, else -1

  /// Ŝ = {h_e, j_e : e in S}.
  EdgeSet hat_edges() const {
    EdgeSet out = graph.no_edges();
    for (int e : subdivided.to_vector()) {
      out.insert(h_edge[static_cast<std::size_t>(e)]);
      out.insert(j_edge[static_cast<std::size_t>(e)]);
    }
    return out;
  }
};

inline Subdivision subdivide(const Graph& g, const EdgeSet& s) {
  const auto m = static_cast<std::size_t>(g.edge_count());
  std::vector<int> weights = g.weights();
  std::vector<int> exceptional(m, -1);
  for (int e : s.to_vector()) {
    exceptional[static_cast<std::size_t>(e)] = static_cast<int>(weights.size());
    weights.push_back(0);
  }
  std::vector<Edge> edges;
  std::vector<int> image(m, -1);
  std::vector<int> h(m, -1);
  std::vector<int> j(m, -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto k = static_cast<std::size_t>(e);
    const Edge& se = g.edge(e);
    if (!s.contains(e)) {
      image[k] = static_cast<int>(edges.size());
      edges.push_back(se);
      continue;
    }
    h[k] = static_cast<int>(edges.size());
    edges.push_back({se.tail, exceptional[k]});
    j[k] = static_cast<int>(edges.size());
    edges.push_back({exceptional[k], se.head});
  }
  return {Graph(std::move(weights), std::move(edges)), s, std::move(image), std::move(exceptional),
          std::move(h), std::move(j)};
}

}  // namespace orcalc
