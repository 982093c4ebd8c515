// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Integer divisors on graphs and stable divisors.
//
// Divisors on G and on any spanning subgraph G - S share the vertex index
// space, so the stability predicates take the removed edge set explicitly.

#include <compare>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orcalc/contraction.hpp"
#include "orcalc/graph.hpp"

namespace orcalc {

class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(std::vector<int> values) : values_(std::move(values)) {}
  static Divisor zero(int n) { return Divisor(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  /// The divisor with a single unit at v.
  static Divisor unit(int n, int v) {
    Divisor d = zero(n);
    d.values_.at(static_cast<std::size_t>(v)) = 1;
    return d;
  }

  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }
  int operator[](int v) const { return values_.at(static_cast<std::size_t>(v)); }
  int& operator[](int v) { return values_.at(static_cast<std::size_t>(v)); }

  /// |d|.
  int degree() const { return std::accumulate(values_.begin(), values_.end(), 0); }

  /// |d_Z|.
  int degree_on(const VertexSet& z) const {
    check_carrier(z.size());
    int s = 0;
    for (int v : z.to_vector()) s += values_[static_cast<std::size_t>(v)];
    return s;
  }

  /// d_Z, zero-extended outside Z.
  Divisor restrict(const VertexSet& z) const {
    check_carrier(z.size());
    Divisor out = zero(size());
    for (int v : z.to_vector()) out.values_[static_cast<std::size_t>(v)] = values_[static_cast<std::size_t>(v)];
    return out;
  }

  Divisor operator+(const Divisor& o) const { return combine(o, std::plus<>{}); }
  Divisor operator-(const Divisor& o) const { return combine(o, std::minus<>{}); }

  friend bool operator==(const Divisor&, const Divisor&) = default;
  friend auto operator<=>(const Divisor&, const Divisor&) = default;

  void check_carrier(int n) const {
    if (n != size()) {
      throw std::domain_error("Divisor: carrier mismatch (" + std::to_string(size()) + " vs " +
                              std::to_string(n) + " vertices)");
    }
  }

 private:
  template <class Op>
  Divisor combine(const Divisor& o, Op op) const {
    check_carrier(o.size());
    Divisor out = *this;
    for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = op(values_[i], o.values_[i]);
    return out;
  }

  std::vector<int> values_;
};

/// Coordinatewise d <= d'.
inline bool partial_leq(const Divisor& a, const Divisor& b) {
  a.check_carrier(b.size());
  for (int v = 0; v < a.size(); ++v) {
    if (a[v] > b[v]) return false;
  }
  return true;
}

namespace detail {

// |d_Z| > g(Z) - 1 for every nonempty Z inside `within`, optionally skipping
// Z = within itself.
inline bool strict_bound_on_subsets(const Graph& g, const EdgeSet& removed, const Divisor& d,
                                    const VertexSet& within, bool include_whole) {
  bool ok = true;
  for_each_subset(within, [&](const VertexSet& z) {
    if (!ok || z.empty()) return;
    if (!include_whole && z == within) return;
    if (d.degree_on(z) <= subset_genus(g, z, removed) - 1) ok = false;
  });
  return ok;
}

}  // namespace detail

/// Stability of d on G - removed: degree g for b = 1 (connected carriers only),
/// degree g - 1 per component for b = 0.
inline bool is_stable_divisor(const Graph& g, const EdgeSet& removed, const Divisor& d, int b) {
  if (b != 0 && b != 1) throw std::domain_error("is_stable_divisor: b must be 0 or 1");
  d.check_carrier(g.vertex_count());
  const auto comps = connected_components(g, removed);
  if (b == 1) {
    if (comps.size() != 1) return false;
    if (d.degree() != spanning_genus(g, removed)) return false;
    // Z = V is vacuous here (g > g - 1) and is tested anyway.
    return detail::strict_bound_on_subsets(g, removed, d, g.all_vertices(), true);
  }
  for (const VertexSet& c : comps) {
    if (d.degree_on(c) != subset_genus(g, c, removed) - 1) return false;
    if (!detail::strict_bound_on_subsets(g, removed, d, c, false)) return false;
  }
  return true;
}
inline bool is_stable_divisor(const Graph& g, const Divisor& d, int b) {
  return is_stable_divisor(g, g.no_edges(), d, b);
}

/// Calls fn(d) for every divisor of total degree `degree` with
/// lo[v] <= d_v <= hi[v], in lexicographic order.
template <class Fn>
void for_each_divisor_in_box(const std::vector<int>& lo, const std::vector<int>& hi, int degree,
                             Fn&& fn) {
  const std::size_t n = lo.size();
  std::vector<int> suffix_lo(n + 1, 0);
  std::vector<int> suffix_hi(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    suffix_lo[i] = suffix_lo[i + 1] + lo[i];
    suffix_hi[i] = suffix_hi[i + 1] + hi[i];
  }
  std::vector<int> cur(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == n) {
      if (remaining == 0) fn(Divisor(cur));
      return;
    }
    for (int x = lo[i]; x <= hi[i]; ++x) {
      const int rest = remaining - x;
      if (rest < suffix_lo[i + 1] || rest > suffix_hi[i + 1]) continue;
      cur[i] = x;
      rec(i + 1, rest);
    }
  };
  rec(0, degree);
}

/// Σ^b(G - removed), searched over the window w(v) - 1 + [0, deg(v) + b]
/// widened by `widen` on both sides. Lexicographic order.
inline std::vector<Divisor> sigma(const Graph& g, const EdgeSet& removed, int b, int widen = 0) {
  if (b != 0 && b != 1) throw std::domain_error("sigma: b must be 0 or 1");
  const int n = g.vertex_count();
  std::vector<int> lo(static_cast<std::size_t>(n));
  std::vector<int> hi(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    lo[static_cast<std::size_t>(v)] = g.weight(v) - 1 - widen;
    hi[static_cast<std::size_t>(v)] = g.weight(v) - 1 + g.degree(v, removed) + b + widen;
  }
  const int target = spanning_genus(g, removed) - component_count(g, removed) + b;
  std::vector<Divisor> out;
  if (b == 1 && !is_connected(g, removed)) return out;
  for_each_divisor_in_box(lo, hi, target, [&](const Divisor& d) {
    if (is_stable_divisor(g, removed, d, b)) out.push_back(d);
  });
  return out;
}
inline std::vector<Divisor> sigma(const Graph& g, int b) { return sigma(g, g.no_edges(), b); }

/// d̂: d on the original vertices of Ĝ_S and 1 on every exceptional vertex.
inline Divisor hat_divisor(const Divisor& d, const Subdivision& sub) {
  const int exceptional = sub.subdivided.count();
  if (d.size() + exceptional != sub.graph.vertex_count()) {
    throw std::domain_error("hat_divisor: carrier mismatch");
  }
  std::vector<int> values = d.values();
  values.resize(static_cast<std::size_t>(sub.graph.vertex_count()), 1);
  return Divisor(std::move(values));
}

}  // namespace orcalc
