// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Slow reference computations for tests. These deliberately avoid the
// library's component, genus and stability helpers.

#include <cstdint>
#include <vector>

#include "orcalc/graph.hpp"
#include "orcalc/orientation.hpp"

namespace oracle {

using namespace orcalc;

// Components of G[Z] - removed by label propagation to a fixed point.
inline int components(const Graph& g, const EdgeSet& removed, std::uint64_t z) {
  const int n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) label[static_cast<std::size_t>(v)] = v;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (removed.contains(e)) continue;
      const int a = g.edge(e).tail;
      const int b = g.edge(e).head;
      if (!((z >> a) & 1U) || !((z >> b) & 1U)) continue;
      auto& la = label[static_cast<std::size_t>(a)];
      auto& lb = label[static_cast<std::size_t>(b)];
      if (la != lb) {
        la = lb = std::min(la, lb);
        changed = true;
      }
    }
  }
  int c = 0;
  for (int v = 0; v < n; ++v) c += ((z >> v) & 1U) && label[static_cast<std::size_t>(v)] == v;
  return c;
}

inline int genus_of(const Graph& g, const EdgeSet& removed, std::uint64_t z) {
  if (z == 0) return 0;
  int w = 0;
  int verts = 0;
  int edges = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((z >> v) & 1U) {
      w += g.weight(v);
      ++verts;
    }
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!removed.contains(e) && ((z >> g.edge(e).tail) & 1U) && ((z >> g.edge(e).head) & 1U)) ++edges;
  }
  return w - verts + edges + components(g, removed, z);
}

inline std::uint64_t all_mask(const Graph& g) { return (std::uint64_t{1} << g.vertex_count()) - 1; }

inline int sum_on(const std::vector<int>& d, std::uint64_t z) {
  int s = 0;
  for (std::size_t v = 0; v < d.size(); ++v) s += ((z >> v) & 1U) ? d[v] : 0;
  return s;
}

// Stability straight from the definition, for connected or disconnected carriers.
inline bool stable(const Graph& g, const EdgeSet& removed, const std::vector<int>& d, int b) {
  const std::uint64_t all = all_mask(g);
  if (b == 1) {
    if (components(g, removed, all) != 1) return false;
    if (sum_on(d, all) != genus_of(g, removed, all)) return false;
    for (std::uint64_t z = 1; z <= all; ++z) {
      if (sum_on(d, z) <= genus_of(g, removed, z) - 1) return false;
    }
    return true;
  }
  // Components as vertex masks.
  std::vector<std::uint64_t> comps;
  std::uint64_t left = all;
  while (left) {
    std::uint64_t comp = left & (~left + 1);
    bool grew = true;
    while (grew) {
      grew = false;
      for (int e = 0; e < g.edge_count(); ++e) {
        if (removed.contains(e)) continue;
        const std::uint64_t ends = (std::uint64_t{1} << g.edge(e).tail) | (std::uint64_t{1} << g.edge(e).head);
        if ((comp & ends) && (ends & ~comp)) {
          comp |= ends;
          grew = true;
        }
      }
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  for (std::uint64_t c : comps) {
    if (sum_on(d, c) != genus_of(g, removed, c) - 1) return false;
    for (std::uint64_t z = c; z; z = (z - 1) & c) {
      if (z != c && sum_on(d, z) <= genus_of(g, removed, z) - 1) return false;
    }
  }
  return true;
}

// Target counts from half-edges: half-edge 2e+1 (head side) is a target of
// a Forward edge, 2e of a Backward edge, both of a bioriented one.
inline std::vector<int> targets(const Graph& g, const Orientation& o) {
  std::vector<int> t(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int h = 0; h < g.half_edge_count(); ++h) {
    const EdgeState s = o.state(h / 2);
    const bool is_target = s == EdgeState::Bioriented || (s == EdgeState::Forward && h % 2 == 1) ||
                           (s == EdgeState::Backward && h % 2 == 0);
    if (is_target) ++t[static_cast<std::size_t>(g.half_edge_vertex(h))];
  }
  return t;
}

// Directed-cut test over every vertex subset.
inline bool has_directed_cut(const Graph& g, const Orientation& o) {
  const std::uint64_t all = all_mask(g);
  for (std::uint64_t z = 1; z < all; ++z) {
    int into = 0;
    int out = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
      const EdgeState s = o.state(e);
      if (s == EdgeState::Absent) continue;
      const bool zt = (z >> g.edge(e).tail) & 1U;
      const bool zh = (z >> g.edge(e).head) & 1U;
      if (zt == zh) continue;
      const bool head_target = s == EdgeState::Forward;
      const bool target_in_z = head_target ? zh : zt;
      (target_in_z ? into : out)++;
    }
    if (into + out > 0 && (into == 0 || out == 0)) return true;
  }
  return false;
}

}  // namespace oracle
