// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Generalized b-orientations (b = 0, 1) on spanning subgraphs G - S, their
// target vectors and divisors, and the totally cyclic / rooted predicates.
//
// An Orientation stores one state per edge of the ambient graph G; edges of S
// are Absent. The edgeless carrier has a single orientation, the empty one,
// which keeps the b it was meant for.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orcalc/divisor.hpp"
#include "orcalc/graph.hpp"

namespace orcalc {

enum class EdgeState : std::uint8_t { Forward, Backward, Bioriented, Absent };

inline char state_char(EdgeState s) {
  switch (s) {
    case EdgeState::Forward: return '+';
    case EdgeState::Backward: return '-';
    case EdgeState::Bioriented: return '*';
    case EdgeState::Absent: return '.';
  }
  return '?';
}

inline EdgeState reversed(EdgeState s) {
  if (s == EdgeState::Forward) return EdgeState::Backward;
  if (s == EdgeState::Backward) return EdgeState::Forward;
  return s;
}

class Orientation {
 public:
  Orientation() = default;
  Orientation(EdgeSet removed, std::vector<EdgeState> states, int b)
      : removed_(removed), states_(std::move(states)), b_(b) {
    validate();
  }

  /// The empty orientation of G - E, flagged with b.
  static Orientation empty(int edge_count, int b) {
    return Orientation(EdgeSet::full(edge_count),
                       std::vector<EdgeState>(static_cast<std::size_t>(edge_count), EdgeState::Absent), b);
  }

  const EdgeSet& removed() const { return removed_; }
  const std::vector<EdgeState>& states() const { return states_; }
  EdgeState state(int e) const { return states_.at(static_cast<std::size_t>(e)); }
  int b() const { return b_; }
  int edge_count() const { return static_cast<int>(states_.size()); }
  EdgeSet active() const { return removed_.complement(); }
  bool is_empty() const { return removed_.count() == removed_.size(); }

  /// The bioriented edge, or -1.
  int bioriented_edge() const {
    for (int e = 0; e < edge_count(); ++e) {
      if (state(e) == EdgeState::Bioriented) return e;
    }
    return -1;
  }

  /// Same orientation with the state of e replaced (b recomputed).
  Orientation with_state(int e, EdgeState s) const {
    std::vector<EdgeState> st = states_;
    st.at(static_cast<std::size_t>(e)) = s;
    EdgeSet rem = removed_;
    if (s == EdgeState::Absent) {
      rem.insert(e);
    } else {
      rem.erase(e);
    }
    const auto bi = static_cast<int>(std::count(st.begin(), st.end(), EdgeState::Bioriented));
    const bool edgeless = rem.count() == rem.size();
    return Orientation(rem, std::move(st), edgeless ? b_ : bi);
  }

  std::string to_string() const {
    std::string out;
    for (EdgeState s : states_) out.push_back(state_char(s));
    return out;
  }

  friend bool operator==(const Orientation&, const Orientation&) = default;
  /// Lexicographic on the state sequence (Forward < Backward < Bioriented < Absent).
  friend auto operator<=>(const Orientation& a, const Orientation& x) {
    if (auto c = a.states_.size() <=> x.states_.size(); c != 0) return c;
    if (auto c = a.states_ <=> x.states_; c != 0) return c;
    return a.b_ <=> x.b_;
  }

 private:
  void validate() const {
    if (static_cast<int>(states_.size()) != removed_.size()) {
      throw std::invalid_argument("Orientation: state count does not match the edge count");
    }
    if (b_ != 0 && b_ != 1) throw std::invalid_argument("Orientation: only b = 0, 1 are supported");
    int bi = 0;
    for (int e = 0; e < edge_count(); ++e) {
      const bool absent = state(e) == EdgeState::Absent;
      if (absent != removed_.contains(e)) {
        throw std::invalid_argument("Orientation: removed edges must be exactly the Absent ones");
      }
      bi += state(e) == EdgeState::Bioriented;
    }
    if (!is_empty() && bi != b_) {
      throw std::invalid_argument("Orientation: b must equal the number of bioriented edges");
    }
  }

  EdgeSet removed_;
  std::vector<EdgeState> states_;
  int b_ = 0;
};

/// Source and target of an active, non-bioriented edge.
inline int source_of(const Graph& g, const Orientation& o, int e) {
  return o.state(e) == EdgeState::Backward ? g.edge(e).head : g.edge(e).tail;
}
inline int target_of(const Graph& g, const Orientation& o, int e) {
  return o.state(e) == EdgeState::Backward ? g.edge(e).tail : g.edge(e).head;
}

inline void check_carrier(const Graph& g, const Orientation& o) {
  if (o.edge_count() != g.edge_count()) {
    throw std::domain_error("Orientation: carrier graph mismatch");
  }
}

/// t^O: half-edges targeting each vertex. A bioriented edge targets both ends.
inline Divisor target_vector(const Graph& g, const Orientation& o) {
  check_carrier(g, o);
  Divisor t = Divisor::zero(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    switch (o.state(e)) {
      case EdgeState::Forward: ++t[g.edge(e).head]; break;
      case EdgeState::Backward: ++t[g.edge(e).tail]; break;
      case EdgeState::Bioriented:
        ++t[g.edge(e).head];
        ++t[g.edge(e).tail];
        break;
      case EdgeState::Absent: break;
    }
  }
  return t;
}

/// d^O = w - 1 + t^O, or w - 1 + b on an edgeless carrier.
inline Divisor divisor_of(const Graph& g, const Orientation& o) {
  Divisor d = target_vector(g, o);
  const int extra = o.is_empty() ? o.b() : 0;
  for (int v = 0; v < g.vertex_count(); ++v) d[v] += g.weight(v) - 1 + extra;
  return d;
}

/// t^O(Z): edges of the carrier not inside G[Z] having a target in Z.
inline int t_into(const Graph& g, const Orientation& o, const VertexSet& z) {
  check_carrier(g, o);
  int count = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    const EdgeState s = o.state(e);
    if (s == EdgeState::Absent) continue;
    const Edge& ed = g.edge(e);
    if (z.contains(ed.tail) && z.contains(ed.head)) continue;
    const bool hit = s == EdgeState::Bioriented ? (z.contains(ed.tail) || z.contains(ed.head))
                                                : z.contains(target_of(g, o, e));
    count += hit;
  }
  return count;
}

/// b(Z): bioriented edges inside G[Z].
inline int bioriented_inside(const Graph& g, const Orientation& o, const VertexSet& z) {
  int count = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (o.state(e) != EdgeState::Bioriented) continue;
    if (z.contains(g.edge(e).tail) && z.contains(g.edge(e).head)) ++count;
  }
  return count;
}

enum class CyclicMode {
  NoDirectedCut,        // no directed cut
  PositiveInflow,       // t(Z) > 0 for all nonempty proper Z
  ConnectedInflow,      // same, G[Z] connected only
  DivisorBound,         // |d_Z| > g(Z) - 1 for connected proper Z
  CycleCover,           // every edge lies on a directed cycle
};
inline constexpr CyclicMode kAllCyclicModes[] = {CyclicMode::NoDirectedCut, CyclicMode::PositiveInflow,
                                                 CyclicMode::ConnectedInflow, CyclicMode::DivisorBound,
                                                 CyclicMode::CycleCover};

enum class RootedMode {
  Definition,        // every proper Z containing the bioriented edge emits a targeted edge
  PositiveInflow,    // t(Z) > 0 for nonempty Z not containing the bioriented edge
  ConnectedInflow,   // same, G[Z] connected only
  DivisorBound,      // |d_Z| > g(Z) - 1 for connected proper Z
  Reachability,      // directed path from the bioriented edge to every vertex
};
inline constexpr RootedMode kAllRootedModes[] = {RootedMode::Definition, RootedMode::PositiveInflow,
                                                 RootedMode::ConnectedInflow, RootedMode::DivisorBound,
                                                 RootedMode::Reachability};

inline const char* mode_name(CyclicMode m) {
  switch (m) {
    case CyclicMode::NoDirectedCut: return "no-directed-cut";
    case CyclicMode::PositiveInflow: return "positive-inflow";
    case CyclicMode::ConnectedInflow: return "connected-inflow";
    case CyclicMode::DivisorBound: return "divisor-bound";
    case CyclicMode::CycleCover: return "cycle-cover";
  }
  return "?";
}
inline const char* mode_name(RootedMode m) {
  switch (m) {
    case RootedMode::Definition: return "definition";
    case RootedMode::PositiveInflow: return "positive-inflow";
    case RootedMode::ConnectedInflow: return "connected-inflow";
    case RootedMode::DivisorBound: return "divisor-bound";
    case RootedMode::Reachability: return "reachability";
  }
  return "?";
}

namespace detail {

inline bool induces_connected(const Graph& g, const EdgeSet& removed, const VertexSet& z) {
  return component_count(g, removed, z) == 1;
}

// Vertices reachable from `from` along directed edges of O; a bioriented
// edge may be traversed both ways.
inline VertexSet reachable(const Graph& g, const Orientation& o, VertexSet from) {
  VertexSet seen = from;
  std::deque<int> queue;
  for (int v : from.to_vector()) queue.push_back(v);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int e = 0; e < g.edge_count(); ++e) {
      const EdgeState s = o.state(e);
      if (s == EdgeState::Absent) continue;
      const Edge& ed = g.edge(e);
      int next = -1;
      if (s == EdgeState::Bioriented) {
        if (ed.tail == u) next = ed.head;
        else if (ed.head == u) next = ed.tail;
      } else if (source_of(g, o, e) == u) {
        next = target_of(g, o, e);
      }
      if (next >= 0 && !seen.contains(next)) {
        seen.insert(next);
        queue.push_back(next);
      }
    }
  }
  return seen;
}

// Calls fn(Z) for every nonempty proper subset Z of `within`.
template <class Fn>
void for_each_proper_subset(const VertexSet& within, Fn&& fn) {
  for_each_subset(within, [&](const VertexSet& z) {
    if (!z.empty() && z != within) fn(z);
  });
}

}  // namespace detail

/// Totally cyclic test for a 0-orientation, by any of the equivalent criteria.
/// Disconnected carriers are tested per component; edgeless carriers are TC.
inline bool is_totally_cyclic(const Graph& g, const Orientation& o,
                              CyclicMode mode = CyclicMode::NoDirectedCut) {
  check_carrier(g, o);
  if (o.is_empty()) return true;
  if (o.b() != 0) throw std::domain_error("is_totally_cyclic: expects a 0-orientation");
  const EdgeSet& removed = o.removed();

  if (mode == CyclicMode::NoDirectedCut) {
    // Over all proper Z of V: a nonempty cut whose edges all point into Z
    // (or all out of Z) is directed.
    bool ok = true;
    detail::for_each_proper_subset(g.all_vertices(), [&](const VertexSet& z) {
      if (!ok) return;
      const EdgeSet cut = cut_between(g, z, removed);
      if (cut.empty()) return;
      bool all_in = true;
      bool all_out = true;
      for (int e : cut.to_vector()) {
        const bool into = z.contains(target_of(g, o, e));
        all_in = all_in && into;
        all_out = all_out && !into;
      }
      if (all_in || all_out) ok = false;
    });
    return ok;
  }
  if (mode == CyclicMode::CycleCover) {
    for (int e = 0; e < g.edge_count(); ++e) {
      if (removed.contains(e) || g.edge(e).is_loop()) continue;
      const VertexSet start(g.vertex_count(), {target_of(g, o, e)});
      if (!detail::reachable(g, o, start).contains(source_of(g, o, e))) return false;
    }
    return true;
  }

  const Divisor d = divisor_of(g, o);
  bool ok = true;
  for (const VertexSet& comp : connected_components(g, removed)) {
    detail::for_each_proper_subset(comp, [&](const VertexSet& z) {
      if (!ok) return;
      switch (mode) {
        case CyclicMode::PositiveInflow:
          if (t_into(g, o, z) <= 0) ok = false;
          break;
        case CyclicMode::ConnectedInflow:
          if (detail::induces_connected(g, removed, z) && t_into(g, o, z) <= 0) ok = false;
          break;
        case CyclicMode::DivisorBound:
          if (detail::induces_connected(g, removed, z) &&
              d.degree_on(z) <= subset_genus(g, z, removed) - 1) {
            ok = false;
          }
          break;
        default: break;
      }
    });
  }
  return ok;
}

/// Literal pairwise form of the cycle characterization: any two distinct
/// vertices of one component lie on a common simple directed cycle. It is
/// not equivalent to total cyclicity once a component has a cut vertex;
/// kept for reports.
inline bool pairwise_cycle_condition(const Graph& g, const Orientation& o) {
  check_carrier(g, o);
  const auto label = component_labels(g, o.removed(), g.all_vertices());
  // Simple directed cycle through u and v, found by DFS over simple paths
  // leaving u and returning to it.
  auto on_common_cycle = [&](int u, int v) {
    VertexSet used = g.no_vertices();
    used.insert(u);
    bool found = false;
    std::function<void(int, bool)> dfs = [&](int at, bool seen_v) {
      for (int e = 0; e < g.edge_count() && !found; ++e) {
        if (o.state(e) != EdgeState::Forward && o.state(e) != EdgeState::Backward) continue;
        if (g.edge(e).is_loop() || source_of(g, o, e) != at) continue;
        const int w = target_of(g, o, e);
        if (w == u) {
          if (seen_v) found = true;
          continue;
        }
        if (used.contains(w)) continue;
        used.insert(w);
        dfs(w, seen_v || w == v);
        used.erase(w);
      }
    };
    dfs(u, false);
    return found;
  };
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      if (label[static_cast<std::size_t>(u)] != label[static_cast<std::size_t>(v)]) continue;
      if (!on_common_cycle(u, v)) return false;
    }
  }
  return true;
}

/// Rooted test for a 1-orientation on a connected carrier. The single-vertex
/// empty orientation is rooted; any other empty orientation is not.
inline bool is_rooted(const Graph& g, const Orientation& o, RootedMode mode = RootedMode::Definition) {
  check_carrier(g, o);
  if (o.is_empty()) return g.vertex_count() == 1;
  if (o.b() != 1) throw std::domain_error("is_rooted: expects a 1-orientation");
  const EdgeSet& removed = o.removed();
  const int e0 = o.bioriented_edge();
  const Edge& be = g.edge(e0);
  auto contains_e0 = [&](const VertexSet& z) { return z.contains(be.tail) && z.contains(be.head); };

  if (mode == RootedMode::Reachability) {
    VertexSet start(g.vertex_count(), {be.tail, be.head});
    return detail::reachable(g, o, start) == g.all_vertices();
  }
  if (!is_connected(g, removed)) return false;
  const Divisor d = divisor_of(g, o);
  bool ok = true;
  detail::for_each_proper_subset(g.all_vertices(), [&](const VertexSet& z) {
    if (!ok) return;
    switch (mode) {
      case RootedMode::Definition: {
        if (!contains_e0(z)) return;
        // Some edge leaving Z has its target in Z^c.
        bool out = false;
        for (int e : cut_between(g, z, removed).to_vector()) {
          if (!z.contains(target_of(g, o, e))) out = true;
        }
        if (!out) ok = false;
        break;
      }
      case RootedMode::PositiveInflow:
        if (!contains_e0(z) && t_into(g, o, z) <= 0) ok = false;
        break;
      case RootedMode::ConnectedInflow:
        if (!contains_e0(z) && detail::induces_connected(g, removed, z) && t_into(g, o, z) <= 0) ok = false;
        break;
      case RootedMode::DivisorBound:
        if (detail::induces_connected(g, removed, z) && d.degree_on(z) <= subset_genus(g, z, removed) - 1) {
          ok = false;
        }
        break;
      default: break;
    }
  });
  return ok;
}

/// Admissible: totally cyclic for b = 0, rooted for b = 1.
inline bool is_admissible(const Graph& g, const Orientation& o) {
  return o.b() == 0 ? is_totally_cyclic(g, o) : is_rooted(g, o);
}

/// Every raw b-orientation of G - removed, lexicographically ordered.
inline std::vector<Orientation> enumerate_orientations(const Graph& g, const EdgeSet& removed, int b) {
  if (b != 0 && b != 1) throw std::domain_error("enumerate_orientations: b must be 0 or 1");
  const std::vector<int> act = removed.complement().to_vector();
  if (act.empty()) return {Orientation::empty(g.edge_count(), b)};
  const int k = static_cast<int>(act.size());
  std::vector<Orientation> out;
  std::vector<EdgeState> base(static_cast<std::size_t>(g.edge_count()), EdgeState::Absent);
  auto emit = [&](int bi, std::uint64_t mask) {
    std::vector<EdgeState> st = base;
    // The first active edge is the most significant bit so that counting up
    // walks the lexicographic order.
    for (int i = 0; i < k; ++i) {
      const bool back = ((mask >> (k - 1 - i)) & 1U) != 0;
      st[static_cast<std::size_t>(act[static_cast<std::size_t>(i)])] = back ? EdgeState::Backward : EdgeState::Forward;
    }
    if (bi >= 0) st[static_cast<std::size_t>(bi)] = EdgeState::Bioriented;
    out.emplace_back(removed, std::move(st), b);
  };
  if (b == 0) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) emit(-1, mask);
    return out;
  }
  for (int bi : act) {
    const int pos = static_cast<int>(std::find(act.begin(), act.end(), bi) - act.begin());
    const std::uint64_t bit = std::uint64_t{1} << (k - 1 - pos);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      if ((mask & bit) == 0) emit(bi, mask);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// O^b(G - removed).
inline std::vector<Orientation> enumerate_admissible(const Graph& g, const EdgeSet& removed, int b) {
  std::vector<Orientation> out;
  for (Orientation& o : enumerate_orientations(g, removed, b)) {
    if (is_admissible(g, o)) out.push_back(std::move(o));
  }
  return out;
}

struct OrientationClass {
  Divisor divisor;
  std::vector<Orientation> members;  ///< sorted; members.front() is the representative
  const Orientation& representative() const { return members.front(); }
};

/// Partition by divisor, classes ordered by divisor.
inline std::vector<OrientationClass> equivalence_classes(const Graph& g,
                                                         const std::vector<Orientation>& orients) {
  std::map<Divisor, std::vector<Orientation>> by_divisor;
  for (const Orientation& o : orients) {
    if (o.removed() != orients.front().removed()) {
      throw std::domain_error("equivalence_classes: orientations live on different carriers");
    }
    by_divisor[divisor_of(g, o)].push_back(o);
  }
  std::vector<OrientationClass> out;
  for (auto& [d, members] : by_divisor) {
    std::sort(members.begin(), members.end());
    out.push_back({d, std::move(members)});
  }
  return out;
}

/// Ō^b(G - removed).
inline std::vector<OrientationClass> admissible_classes(const Graph& g, const EdgeSet& removed, int b) {
  return equivalence_classes(g, enumerate_admissible(g, removed, b));
}

}  // namespace orcalc
