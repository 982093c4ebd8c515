// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// The posets A^b_G, OP^b_G and the class poset ŌP^b_G of a fixed graph.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orcalc/graph.hpp"
#include "orcalc/orientation.hpp"
#include "orcalc/orientation_ops.hpp"
#include "orcalc/poset.hpp"

namespace orcalc {

inline std::string ints_json(const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

inline std::string orientation_key(const Orientation& o) {
  std::string states = "[";
  bool first = true;
  for (EdgeState s : o.states()) {
    if (s == EdgeState::Absent) continue;
    if (!first) states += ",";
    first = false;
    states += '"';
    states += state_char(s);
    states += '"';
  }
  states += "]";
  std::string key = "{\"removed\":" + ints_json(o.removed().to_vector()) + ",\"states\":" + states;
  if (o.is_empty()) key += ",\"b\":" + std::to_string(o.b());
  return key + "}";
}

inline std::string class_key(const EdgeSet& s, const Divisor& d) {
  return "{\"removed\":" + ints_json(s.to_vector()) + ",\"divisor\":" + ints_json(d.values()) + "}";
}

/// S ∈ A^b_G: G - S bridgeless (b = 0) or connected (b = 1).
inline bool in_A(const Graph& g, const EdgeSet& s, int b) {
  return b == 0 ? bridges(g, s).empty() : is_connected(g, s);
}

struct APoset {
  std::vector<EdgeSet> sets;
  FinitePoset poset;

  int index_of(const EdgeSet& s) const {
    auto it = std::lower_bound(sets.begin(), sets.end(), s);
    return (it != sets.end() && *it == s) ? static_cast<int>(it - sets.begin()) : -1;
  }
};

/// A^b_G ordered by reverse inclusion, ranked by g(G - S). Elements are
/// sorted as edge sets.
inline APoset build_A(const Graph& g, int b) {
  std::vector<EdgeSet> sets;
  for_each_subset(g.all_edges(), [&](const EdgeSet& s) {
    if (in_A(g, s, b)) sets.push_back(s);
  });
  std::sort(sets.begin(), sets.end());
  std::vector<std::string> keys;
  std::vector<int> rank;
  for (const EdgeSet& s : sets) {
    keys.push_back(ints_json(s.to_vector()));
    rank.push_back(spanning_genus(g, s));
  }
  FinitePoset p = FinitePoset::build(
      std::move(keys),
      [&](int i, int j) { return sets[static_cast<std::size_t>(j)].subset_of(sets[static_cast<std::size_t>(i)]); },
      std::move(rank));
  return {std::move(sets), std::move(p)};
}

/// O_S <= O_T: T ⊆ S and O_T restricted to G - S equals O_S (states only).
inline bool op_leq(const Orientation& os, const Orientation& ot) {
  if (!ot.removed().subset_of(os.removed())) return false;
  for (int e = 0; e < os.edge_count(); ++e) {
    if (!os.removed().contains(e) && os.state(e) != ot.state(e)) return false;
  }
  return true;
}

struct OPPoset {
  std::vector<Orientation> elements;  ///< grouped by A^b_G element, each group sorted
  std::vector<int> to_A;              ///< element -> index in the A poset
  APoset A;
  FinitePoset poset;
};

inline OPPoset build_OP(const Graph& g, int b) {
  OPPoset out;
  out.A = build_A(g, b);
  std::vector<std::string> keys;
  std::vector<int> rank;
  for (std::size_t a = 0; a < out.A.sets.size(); ++a) {
    for (Orientation& o : enumerate_admissible(g, out.A.sets[a], b)) {
      keys.push_back(orientation_key(o));
      rank.push_back(spanning_genus(g, o.removed()));
      out.elements.push_back(std::move(o));
      out.to_A.push_back(static_cast<int>(a));
    }
  }
  out.poset = FinitePoset::build(
      std::move(keys),
      [&](int i, int j) {
        return op_leq(out.elements[static_cast<std::size_t>(i)], out.elements[static_cast<std::size_t>(j)]);
      },
      std::move(rank));
  return out;
}

struct ClassElement {
  EdgeSet removed;
  Divisor divisor;
  std::vector<int> members;  ///< indices into OPPoset::elements, sorted
  const std::vector<int>& member_indices() const { return members; }
};

struct OPBarPoset {
  OPPoset op;
  std::vector<ClassElement> classes;  ///< ordered as (A element, divisor)
  std::vector<int> projection;        ///< OP element -> class
  std::vector<int> to_A;              ///< class -> index in the A poset
  FinitePoset poset;

  int find(const EdgeSet& s, const Divisor& d) const {
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (classes[i].removed == s && classes[i].divisor == d) return static_cast<int>(i);
    }
    return -1;
  }
};

/// ŌP^b_G as the quotient of OP^b_G by divisor equivalence on each G - S.
inline OPBarPoset build_OPbar(const Graph& g, int b) {
  OPBarPoset out;
  out.op = build_OP(g, b);
  std::map<std::pair<int, Divisor>, int> index;
  for (std::size_t i = 0; i < out.op.elements.size(); ++i) {
    const Orientation& o = out.op.elements[i];
    index.emplace(std::make_pair(out.op.to_A[i], divisor_of(g, o)), 0);
  }
  std::vector<std::string> keys;
  std::vector<int> rank;
  for (auto& [k, slot] : index) {
    slot = static_cast<int>(out.classes.size());
    const EdgeSet& s = out.op.A.sets[static_cast<std::size_t>(k.first)];
    out.classes.push_back({s, k.second, {}});
    out.to_A.push_back(k.first);
    keys.push_back(class_key(s, k.second));
    rank.push_back(spanning_genus(g, s));
  }
  out.projection.resize(out.op.elements.size());
  for (std::size_t i = 0; i < out.op.elements.size(); ++i) {
    const int c = index.at({out.op.to_A[i], divisor_of(g, out.op.elements[i])});
    out.projection[i] = c;
    out.classes[static_cast<std::size_t>(c)].members.push_back(static_cast<int>(i));
  }
  PosetQuotient q = quotient_by_equivalence(out.op.poset, out.projection, std::move(keys), std::move(rank));
  out.poset = std::move(q.poset);
  return out;
}

/// For classes x <= y of ŌP (the existential comparison), every member of x
/// lies below some member of y. Returns the first violating pair.
inline std::optional<std::pair<int, int>> universal_comparison_violation(const OPBarPoset& bar) {
  const FinitePoset& op = bar.op.poset;
  for (int x = 0; x < bar.poset.size(); ++x) {
    for (int y = 0; y < bar.poset.size(); ++y) {
      if (!bar.poset.leq(x, y)) continue;
      for (int i : bar.classes[static_cast<std::size_t>(x)].members) {
        bool found = false;
        for (int j : bar.classes[static_cast<std::size_t>(y)].members) {
          if (op.leq(i, j)) {
            found = true;
            break;
          }
        }
        if (!found) return std::make_pair(x, y);
      }
    }
  }
  return std::nullopt;
}

}  // namespace orcalc
