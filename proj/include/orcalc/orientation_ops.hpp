// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Constructions on orientations: path reversal, moving the bioriented edge,
// strong and rooted orientations, restriction and extension.

#include <deque>
#include <functional>
#include <stdexcept>
#include <vector>

#include "orcalc/contraction.hpp"
#include "orcalc/graph.hpp"
#include "orcalc/orientation.hpp"

namespace orcalc {

/// Orientation of e pointing into vertex v (Forward for loops).
inline EdgeState state_into(const Graph& g, int e, int v) {
  if (g.edge(e).is_loop()) return EdgeState::Forward;
  return g.edge(e).head == v ? EdgeState::Forward : EdgeState::Backward;
}

/// Reverses the O-directed path [e, f1, ..., fn] leaving the bioriented edge e:
/// f1..f(n-1) are reversed, fn becomes bioriented and e is oriented into its
/// end away from the path. The divisor is unchanged.
inline Orientation reverse_directed_path(const Graph& g, const Orientation& o,
                                         const std::vector<int>& path) {
  check_carrier(g, o);
  if (o.b() != 1 || o.is_empty()) throw std::domain_error("reverse_directed_path: expects a 1-orientation");
  if (path.empty() || path.front() != o.bioriented_edge()) {
    throw std::domain_error("reverse_directed_path: path must start at the bioriented edge");
  }
  if (path.size() == 1) return o;
  const int e = path.front();
  EdgeSet seen = g.no_edges();
  seen.insert(e);
  int at = -1;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const int f = path[i];
    if (f < 0 || f >= g.edge_count() || seen.contains(f)) {
      throw std::domain_error("reverse_directed_path: path edges must be distinct carrier edges");
    }
    seen.insert(f);
    const EdgeState s = o.state(f);
    if (s != EdgeState::Forward && s != EdgeState::Backward) {
      throw std::domain_error("reverse_directed_path: path edge is not oriented");
    }
    const int src = source_of(g, o, f);
    if (i == 1) {
      if (src != g.edge(e).tail && src != g.edge(e).head) {
        throw std::domain_error("reverse_directed_path: path does not leave the bioriented edge");
      }
    } else if (src != at) {
      throw std::domain_error("reverse_directed_path: path is not directed");
    }
    at = target_of(g, o, f);
  }
  std::vector<EdgeState> st = o.states();
  const int attach = source_of(g, o, path[1]);
  st[static_cast<std::size_t>(e)] = state_into(g, e, g.edge(e).opposite(attach));
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    auto& s = st[static_cast<std::size_t>(path[i])];
    s = reversed(s);
  }
  st[static_cast<std::size_t>(path.back())] = EdgeState::Bioriented;
  return Orientation(o.removed(), std::move(st), 1);
}

/// Rooted O' equivalent to the rooted O with bioriented edge e2: a shortest
/// directed path from the bioriented edge to the source of e2 is extended
/// by e2 and reversed.
inline Orientation move_biorientation(const Graph& g, const Orientation& o, int e2) {
  check_carrier(g, o);
  const int e0 = o.bioriented_edge();
  if (o.b() != 1 || e0 < 0) throw std::domain_error("move_biorientation: expects a 1-orientation");
  if (o.state(e2) == EdgeState::Absent) throw std::domain_error("move_biorientation: edge not in carrier");
  if (e2 == e0) return o;
  const int goal = source_of(g, o, e2);
  const int n = g.vertex_count();
  std::vector<int> via(static_cast<std::size_t>(n), -2);  // -1 marks a start vertex
  std::deque<int> queue;
  for (int v : {g.edge(e0).tail, g.edge(e0).head}) {
    if (via[static_cast<std::size_t>(v)] == -2) {
      via[static_cast<std::size_t>(v)] = -1;
      queue.push_back(v);
    }
  }
  while (!queue.empty() && via[static_cast<std::size_t>(goal)] == -2) {
    const int u = queue.front();
    queue.pop_front();
    for (int f = 0; f < g.edge_count(); ++f) {
      const EdgeState s = o.state(f);
      if (f == e0 || (s != EdgeState::Forward && s != EdgeState::Backward)) continue;
      if (source_of(g, o, f) != u) continue;
      const int w = target_of(g, o, f);
      if (via[static_cast<std::size_t>(w)] != -2) continue;
      via[static_cast<std::size_t>(w)] = f;
      queue.push_back(w);
    }
  }
  if (via[static_cast<std::size_t>(goal)] == -2) {
    throw std::domain_error("move_biorientation: no directed path; orientation is not rooted");
  }
  std::vector<int> rev;
  for (int v = goal; via[static_cast<std::size_t>(v)] >= 0; v = source_of(g, o, via[static_cast<std::size_t>(v)])) {
    rev.push_back(via[static_cast<std::size_t>(v)]);
  }
  std::vector<int> path{e0};
  path.insert(path.end(), rev.rbegin(), rev.rend());
  path.push_back(e2);
  return reverse_directed_path(g, o, path);
}

/// O_e: the 0-orientation O with edge e bioriented.
inline Orientation biorient_edge(const Graph& g, const Orientation& o, int e) {
  check_carrier(g, o);
  if (o.b() != 0 || o.state(e) == EdgeState::Absent) {
    throw std::domain_error("biorient_edge: expects a 0-orientation and a carrier edge");
  }
  return o.with_state(e, EdgeState::Bioriented);
}

/// Totally cyclic 0-orientation of the bridgeless G - removed: depth-first
/// search per component, tree edges downwards, back edges upwards, loops Forward.
inline Orientation strong_orient(const Graph& g, const EdgeSet& removed) {
  if (!bridges(g, removed).empty()) throw std::domain_error("strong_orient: carrier has bridges");
  const int n = g.vertex_count();
  std::vector<EdgeState> st(static_cast<std::size_t>(g.edge_count()), EdgeState::Absent);
  std::vector<bool> done(static_cast<std::size_t>(g.edge_count()), false);
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (removed.contains(e)) done[static_cast<std::size_t>(e)] = true;
    else if (g.edge(e).is_loop()) {
      st[static_cast<std::size_t>(e)] = EdgeState::Forward;
      done[static_cast<std::size_t>(e)] = true;
    }
  }
  std::function<void(int)> dfs = [&](int u) {
    visited[static_cast<std::size_t>(u)] = true;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (done[static_cast<std::size_t>(e)]) continue;
      const Edge& ed = g.edge(e);
      if (ed.tail != u && ed.head != u) continue;
      const int w = ed.opposite(u);
      done[static_cast<std::size_t>(e)] = true;
      st[static_cast<std::size_t>(e)] = state_into(g, e, w);
      if (!visited[static_cast<std::size_t>(w)]) dfs(w);
    }
  };
  for (int v = 0; v < n; ++v) {
    if (!visited[static_cast<std::size_t>(v)]) dfs(v);
  }
  return Orientation(removed, std::move(st), 0);
}
inline Orientation strong_orient(const Graph& g) { return strong_orient(g, g.no_edges()); }

/// Rooted 1-orientation of the connected G - removed: strong-orient the
/// bridgeless pieces, biorient the first edge of the first piece that has
/// edges (or the first bridge of a tree), then orient the bridges away from
/// the part built so far.
inline Orientation rooted_orient(const Graph& g, const EdgeSet& removed) {
  if (!is_connected(g, removed)) throw std::domain_error("rooted_orient: carrier is not connected");
  if (removed.count() == g.edge_count()) return Orientation::empty(g.edge_count(), 1);
  const EdgeSet br = bridges(g, removed);
  const Orientation pieces = strong_orient(g, removed | br);
  std::vector<EdgeState> st = pieces.states();
  const auto label = component_labels(g, removed | br, g.all_vertices());

  int seed = -1;
  for (int lab = 0; seed < 0 && lab < g.vertex_count(); ++lab) {
    for (int e = 0; e < g.edge_count(); ++e) {
      if (pieces.state(e) != EdgeState::Absent && label[static_cast<std::size_t>(g.edge(e).tail)] == lab) {
        seed = e;
        break;
      }
    }
  }
  EdgeSet pending = br;
  VertexSet grown = g.no_vertices();
  auto absorb_piece = [&](int v) {
    const int lab = label[static_cast<std::size_t>(v)];
    for (int z = 0; z < g.vertex_count(); ++z) {
      if (label[static_cast<std::size_t>(z)] == lab) grown.insert(z);
    }
  };
  if (seed < 0) {
    seed = br.first();
    pending.erase(seed);
    absorb_piece(g.edge(seed).head);
  }
  st[static_cast<std::size_t>(seed)] = EdgeState::Bioriented;
  absorb_piece(g.edge(seed).tail);
  while (!pending.empty()) {
    bool progressed = false;
    for (int e : pending.to_vector()) {
      const Edge& ed = g.edge(e);
      const bool in_t = grown.contains(ed.tail);
      const bool in_h = grown.contains(ed.head);
      if (in_t == in_h) continue;
      const int outer = in_t ? ed.head : ed.tail;
      st[static_cast<std::size_t>(e)] = state_into(g, e, outer);
      pending.erase(e);
      absorb_piece(outer);
      progressed = true;
    }
    if (!progressed) throw std::logic_error("rooted_orient: bridge layering stalled");
  }
  return Orientation(removed, std::move(st), 1);
}
inline Orientation rooted_orient(const Graph& g) { return rooted_orient(g, g.no_edges()); }

/// (O_T)|G-S for T ⊆ S.
inline Orientation restrict_orientation(const Orientation& o, const EdgeSet& s) {
  if (!o.removed().subset_of(s)) throw std::domain_error("restrict_orientation: requires T ⊆ S");
  std::vector<EdgeState> st = o.states();
  int bi = 0;
  for (int e = 0; e < o.edge_count(); ++e) {
    if (s.contains(e)) st[static_cast<std::size_t>(e)] = EdgeState::Absent;
    bi += st[static_cast<std::size_t>(e)] == EdgeState::Bioriented;
  }
  const bool edgeless = s.count() == s.size();
  return Orientation(s, std::move(st), edgeless ? o.b() : bi);
}

/// The orientation of ⟨S⟩ induced by an orientation of G(S) = quotient_to(g, S):
/// non-loop edges copy their state, edges that became loops are Forward.
/// The result lives on G with removed set E \ S.
inline Orientation induced_on_spanned(const Graph& g, const EdgeSet& s, const Orientation& on_quotient) {
  const Contraction q = quotient_to(g, s);
  check_carrier(q.target(), on_quotient);
  if (!on_quotient.removed().empty()) {
    throw std::domain_error("induced_on_spanned: expects an orientation of all of G(S)");
  }
  std::vector<EdgeState> st(static_cast<std::size_t>(g.edge_count()), EdgeState::Absent);
  for (int e : s.to_vector()) {
    const int f = q.map_edge(e).index;
    EdgeState x = on_quotient.state(f);
    if (x != EdgeState::Bioriented && q.target().edge(f).is_loop()) x = EdgeState::Forward;
    st[static_cast<std::size_t>(e)] = x;
  }
  const bool edgeless = s.empty();
  int bi = 0;
  for (EdgeState x : st) bi += x == EdgeState::Bioriented;
  return Orientation(s.complement(), std::move(st), edgeless ? on_quotient.b() : bi);
}

/// An admissible O_T on G - T restricting to the admissible O_S, for T ⊆ S
/// both in A^b_G: strong-orient the quotient of G - T by the edges of G - S,
/// induce it on ⟨S \ T⟩ and glue with O_S.
inline Orientation extend_orientation(const Graph& g, const Orientation& o_s, const EdgeSet& t) {
  check_carrier(g, o_s);
  const EdgeSet& s = o_s.removed();
  if (!t.subset_of(s)) throw std::domain_error("extend_orientation: requires T ⊆ S");
  if (t == s) return o_s;
  const Subgraph sub = delete_edges(g, t);
  // S \ T in the edge numbering of G - T.
  EdgeSet new_edges = sub.graph.no_edges();
  for (int i = 0; i < sub.graph.edge_count(); ++i) {
    if (s.contains(sub.edge_map[static_cast<std::size_t>(i)])) new_edges.insert(i);
  }
  const Contraction q = quotient_to(sub.graph, new_edges);
  const Orientation strong = strong_orient(q.target());
  const Orientation induced = induced_on_spanned(sub.graph, new_edges, strong);
  std::vector<EdgeState> st = o_s.states();
  for (int i = 0; i < sub.graph.edge_count(); ++i) {
    if (new_edges.contains(i)) {
      st[static_cast<std::size_t>(sub.edge_map[static_cast<std::size_t>(i)])] = induced.state(i);
    }
  }
  int bi = 0;
  for (EdgeState x : st) bi += x == EdgeState::Bioriented;
  if (o_s.b() == 1 && bi == 0) {
    // O_S was the empty rooted orientation of a single vertex; every new
    // edge is a loop there and any of them may carry the biorientation.
    st[static_cast<std::size_t>((s - t).first())] = EdgeState::Bioriented;
    bi = 1;
  }
  return Orientation(t, std::move(st), bi);
}

}  // namespace orcalc
