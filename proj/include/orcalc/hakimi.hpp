// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Orientability of divisors: which d of degree g - 1 are divisors of
// 0-orientations, and the 1-orientation attached to a stable degree-g divisor.

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "orcalc/divisor.hpp"
#include "orcalc/graph.hpp"
#include "orcalc/orientation.hpp"

namespace orcalc {

/// |d_Z| >= g(Z) - 1 over nonempty Z of G - removed. With connected_only the
/// family is restricted to Z inducing a connected subgraph; that is the form
/// equivalent to orientability. The unrestricted family can fail for
/// orientable d (two far-apart sources, each at -1).
inline bool hakimi_inequality(const Graph& g, const EdgeSet& removed, const Divisor& d,
                              bool connected_only = true) {
  d.check_carrier(g.vertex_count());
  bool ok = true;
  for_each_subset(g.all_vertices(), [&](const VertexSet& z) {
    if (!ok || z.empty()) return;
    if (connected_only && component_count(g, removed, z) != 1) return;
    if (d.degree_on(z) < subset_genus(g, z, removed) - 1) ok = false;
  });
  return ok;
}

/// First 0-orientation of G - removed (lexicographic edge order) whose
/// divisor is d, found by backtracking on target counts.
inline std::optional<Orientation> hakimi_search(const Graph& g, const EdgeSet& removed, const Divisor& d) {
  d.check_carrier(g.vertex_count());
  const int n = g.vertex_count();
  std::vector<int> need(static_cast<std::size_t>(n));
  std::vector<int> open_ends(static_cast<std::size_t>(n), 0);  // undecided edges that could target v
  const std::vector<int> act = removed.complement().to_vector();
  for (int v = 0; v < n; ++v) need[static_cast<std::size_t>(v)] = d[v] - g.weight(v) + 1;
  for (int e : act) {
    ++open_ends[static_cast<std::size_t>(g.edge(e).tail)];
    if (!g.edge(e).is_loop()) ++open_ends[static_cast<std::size_t>(g.edge(e).head)];
  }
  int total = 0;
  for (int v = 0; v < n; ++v) {
    const int k = need[static_cast<std::size_t>(v)];
    if (k < 0 || k > open_ends[static_cast<std::size_t>(v)]) return std::nullopt;
    total += k;
  }
  if (total != static_cast<int>(act.size())) return std::nullopt;

  std::vector<EdgeState> st(static_cast<std::size_t>(g.edge_count()), EdgeState::Absent);
  auto feasible = [&](int v) {
    const auto k = static_cast<std::size_t>(v);
    return need[k] >= 0 && need[k] <= open_ends[k];
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == act.size()) return true;
    const int e = act[i];
    const Edge& ed = g.edge(e);
    --open_ends[static_cast<std::size_t>(ed.tail)];
    if (!ed.is_loop()) --open_ends[static_cast<std::size_t>(ed.head)];
    const EdgeState choices[2] = {EdgeState::Forward, EdgeState::Backward};
    const int tries = ed.is_loop() ? 1 : 2;
    for (int c = 0; c < tries; ++c) {
      const int tgt = c == 0 ? ed.head : ed.tail;
      --need[static_cast<std::size_t>(tgt)];
      st[static_cast<std::size_t>(e)] = choices[c];
      if (feasible(ed.tail) && feasible(ed.head) && rec(i + 1)) return true;
      ++need[static_cast<std::size_t>(tgt)];
    }
    ++open_ends[static_cast<std::size_t>(ed.tail)];
    if (!ed.is_loop()) ++open_ends[static_cast<std::size_t>(ed.head)];
    st[static_cast<std::size_t>(e)] = EdgeState::Absent;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  if (act.empty()) return Orientation::empty(g.edge_count(), 0);
  return Orientation(removed, std::move(st), 0);
}

/// A 0-orientation of the connected G - removed with divisor d, or nullopt
/// when the inequality family fails. The search must agree with the family.
inline std::optional<Orientation> hakimi_witness(const Graph& g, const EdgeSet& removed, const Divisor& d) {
  d.check_carrier(g.vertex_count());
  if (!is_connected(g, removed)) throw std::domain_error("hakimi_witness: carrier is not connected");
  if (d.degree() != spanning_genus(g, removed) - 1) {
    throw std::domain_error("hakimi_witness: degree must be g - 1");
  }
  if (!hakimi_inequality(g, removed, d)) return std::nullopt;
  auto o = hakimi_search(g, removed, d);
  if (!o) throw std::logic_error("hakimi_witness: inequalities hold but no orientation was found");
  return o;
}
inline std::optional<Orientation> hakimi_witness(const Graph& g, const Divisor& d) {
  return hakimi_witness(g, g.no_edges(), d);
}

/// The 1-orientation of a stable degree-g divisor: orient d - v at v = 0,
/// then biorient the first edge leaving v.
inline Orientation stable_to_orientation(const Graph& g, const EdgeSet& removed, const Divisor& d) {
  if (!is_stable_divisor(g, removed, d, 1)) throw std::domain_error("stable_to_orientation: d is not stable");
  if (removed.count() == g.edge_count()) return Orientation::empty(g.edge_count(), 1);
  const int v = 0;
  const auto base = hakimi_witness(g, removed, d - Divisor::unit(g.vertex_count(), v));
  if (!base) throw std::logic_error("stable_to_orientation: d - v is not orientable");
  for (int e = 0; e < g.edge_count(); ++e) {
    if (base->state(e) != EdgeState::Absent && source_of(g, *base, e) == v) {
      return base->with_state(e, EdgeState::Bioriented);
    }
  }
  throw std::logic_error("stable_to_orientation: no edge leaves v");
}
inline Orientation stable_to_orientation(const Graph& g, const Divisor& d) {
  return stable_to_orientation(g, g.no_edges(), d);
}

}  // namespace orcalc
