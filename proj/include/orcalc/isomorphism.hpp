// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Brute-force isomorphisms of small weighted multigraphs. An isomorphism is
// a vertex bijection plus an edge bijection with a flip flag per edge; the
// flag says that the tail half-edge goes to the head half-edge of the image.
// Loops can be flipped freely, so they contribute to Aut(G).

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "orcalc/contraction.hpp"
#include "orcalc/graph.hpp"

namespace orcalc {

struct GraphIso {
  std::vector<int> vertex;
  std::vector<int> edge;
  std::vector<bool> flip;

  /// Image of half-edge h (2e is the tail side of e).
  int map_half_edge(int h) const {
    const auto e = static_cast<std::size_t>(h / 2);
    return 2 * edge[e] + ((h % 2 == 1) != flip[e] ? 1 : 0);
  }

  friend bool operator==(const GraphIso&, const GraphIso&) = default;
  friend auto operator<=>(const GraphIso&, const GraphIso&) = default;
};

/// `b ∘ a`.
inline GraphIso compose(const GraphIso& a, const GraphIso& b) {
  GraphIso out;
  for (int v : a.vertex) out.vertex.push_back(b.vertex[static_cast<std::size_t>(v)]);
  for (std::size_t e = 0; e < a.edge.size(); ++e) {
    const auto f = static_cast<std::size_t>(a.edge[e]);
    out.edge.push_back(b.edge[f]);
    out.flip.push_back(a.flip[e] != b.flip[f]);
  }
  return out;
}

inline GraphIso inverse(const GraphIso& a) {
  GraphIso out{std::vector<int>(a.vertex.size()), std::vector<int>(a.edge.size()), std::vector<bool>(a.edge.size())};
  for (std::size_t v = 0; v < a.vertex.size(); ++v) out.vertex[static_cast<std::size_t>(a.vertex[v])] = static_cast<int>(v);
  for (std::size_t e = 0; e < a.edge.size(); ++e) {
    out.edge[static_cast<std::size_t>(a.edge[e])] = static_cast<int>(e);
    out.flip[static_cast<std::size_t>(a.edge[e])] = a.flip[e];
  }
  return out;
}

inline bool is_isomorphism(const Graph& g, const Graph& h, const GraphIso& a) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  if (static_cast<int>(a.vertex.size()) != g.vertex_count() || static_cast<int>(a.edge.size()) != g.edge_count()) {
    return false;
  }
  std::vector<bool> hit_v(static_cast<std::size_t>(h.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int w = a.vertex[static_cast<std::size_t>(v)];
    if (w < 0 || w >= h.vertex_count() || hit_v[static_cast<std::size_t>(w)] || g.weight(v) != h.weight(w)) return false;
    hit_v[static_cast<std::size_t>(w)] = true;
  }
  std::vector<bool> hit_e(static_cast<std::size_t>(h.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    const int f = a.edge[static_cast<std::size_t>(e)];
    if (f < 0 || f >= h.edge_count() || hit_e[static_cast<std::size_t>(f)]) return false;
    hit_e[static_cast<std::size_t>(f)] = true;
    for (int side = 0; side < 2; ++side) {
      if (a.vertex[static_cast<std::size_t>(g.half_edge_vertex(2 * e + side))] !=
          h.half_edge_vertex(a.map_half_edge(2 * e + side))) {
        return false;
      }
    }
  }
  return true;
}

/// The isomorphism as a contraction with nothing contracted.
inline Contraction as_contraction(const Graph& g, const Graph& h, const GraphIso& a) {
  std::vector<EdgeImage> emap;
  for (std::size_t e = 0; e < a.edge.size(); ++e) emap.push_back({false, a.edge[e], a.flip[e]});
  return Contraction(g, h, g.no_edges(), a.vertex, std::move(emap));
}

namespace detail {

inline std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

/// Calls fn on every isomorphism g -> h until it returns false.
inline void for_each_isomorphism(const Graph& g, const Graph& h, const std::function<bool(const GraphIso&)>& fn) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n != h.vertex_count() || m != h.edge_count()) return;
  {
    std::vector<int> wg = g.weights();
    std::vector<int> wh = h.weights();
    std::sort(wg.begin(), wg.end());
    std::sort(wh.begin(), wh.end());
    if (wg != wh || sorted_degrees(g) != sorted_degrees(h)) return;
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  GraphIso cur{{}, std::vector<int>(static_cast<std::size_t>(m)), std::vector<bool>(static_cast<std::size_t>(m))};
  std::vector<bool> used(static_cast<std::size_t>(m));
  bool stop = false;
  std::function<void(int)> match = [&](int e) {
    if (stop) return;
    if (e == m) {
      stop = !fn(cur);
      return;
    }
    const Edge& se = g.edge(e);
    const int a = perm[static_cast<std::size_t>(se.tail)];
    const int b = perm[static_cast<std::size_t>(se.head)];
    for (int f = 0; f < m && !stop; ++f) {
      if (used[static_cast<std::size_t>(f)]) continue;
      const Edge& te = h.edge(f);
      for (int flip = 0; flip < 2 && !stop; ++flip) {
        if (flip == 0 ? (te.tail != a || te.head != b) : (te.tail != b || te.head != a)) continue;
        used[static_cast<std::size_t>(f)] = true;
        cur.edge[static_cast<std::size_t>(e)] = f;
        cur.flip[static_cast<std::size_t>(e)] = flip == 1;
        match(e + 1);
        used[static_cast<std::size_t>(f)] = false;
      }
    }
  };
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      const int w = perm[static_cast<std::size_t>(v)];
      ok = g.weight(v) == h.weight(w) && g.degree(v) == h.degree(w);
    }
    if (!ok) continue;
    cur.vertex = perm;
    match(0);
  } while (!stop && std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace detail

inline std::vector<GraphIso> isomorphisms(const Graph& g, const Graph& h) {
  std::vector<GraphIso> out;
  detail::for_each_isomorphism(g, h, [&](const GraphIso& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

inline std::vector<GraphIso> automorphisms(const Graph& g) { return isomorphisms(g, g); }

inline std::optional<GraphIso> find_iso(const Graph& g, const Graph& h) {
  std::optional<GraphIso> out;
  detail::for_each_isomorphism(g, h, [&](const GraphIso& a) {
    out = a;
    return false;
  });
  return out;
}

/// Minimum over vertex relabelings of (weights, sorted edges with tail <= head).
/// Only relabelings that sort the weights can reach the minimum.
inline std::vector<int> canonical_code(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  std::vector<int> sorted_w = g.weights();
  std::sort(sorted_w.begin(), sorted_w.end());
  do {
    bool sorted = true;
    for (int v = 0; v < n && sorted; ++v) {
      sorted = g.weight(v) == sorted_w[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
    }
    if (!sorted) continue;
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) {
      const int a = perm[static_cast<std::size_t>(e.tail)];
      const int b = perm[static_cast<std::size_t>(e.head)];
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    std::vector<int> code{n};
    code.insert(code.end(), sorted_w.begin(), sorted_w.end());
    code.push_back(g.edge_count());
    for (auto [a, b] : edges) {
      code.push_back(a);
      code.push_back(b);
    }
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Graph graph_from_code(const std::vector<int>& code) {
  const auto n = static_cast<std::size_t>(code.at(0));
  std::vector<int> w(code.begin() + 1, code.begin() + 1 + static_cast<std::ptrdiff_t>(n));
  const auto m = static_cast<std::size_t>(code.at(n + 1));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) edges.push_back({code.at(n + 2 + 2 * i), code.at(n + 3 + 2 * i)});
  return Graph(std::move(w), std::move(edges));
}

inline Graph canonical_form(const Graph& g) { return graph_from_code(canonical_code(g)); }

}  // namespace orcalc
