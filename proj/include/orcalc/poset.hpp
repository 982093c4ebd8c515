// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Finite posets with an explicit relation matrix, covers, ranks, quotient
// maps and quotients by equivalence relations.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orcalc {

class PosetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

// Dense bit rows; poset sizes here stay in the thousands.
class BitRows {
 public:
  BitRows() = default;
  explicit BitRows(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>((n + 63) / 64), 0) {}
  bool get(int i, int j) const { return (row(i)[j / 64] >> (j % 64)) & 1U; }
  void set(int i, int j) { row(i)[j / 64] |= std::uint64_t{1} << (j % 64); }
  const std::uint64_t* row(int i) const { return bits_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(words_); }
  std::uint64_t* row(int i) { return bits_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(words_); }
  int words() const { return words_; }
  int size() const { return n_; }
  friend bool operator==(const BitRows&, const BitRows&) = default;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace detail

class FinitePoset {
 public:
  FinitePoset() = default;

  /// Materializes leq over all pairs and validates the poset axioms.
  template <class Leq>
  static FinitePoset build(std::vector<std::string> keys, Leq&& leq,
                           std::optional<std::vector<int>> rank = std::nullopt) {
    const int n = static_cast<int>(keys.size());
    detail::BitRows rel(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (leq(i, j)) rel.set(i, j);
      }
    }
    return FinitePoset(std::move(keys), std::move(rel), std::move(rank));
  }

  int size() const { return static_cast<int>(keys_.size()); }
  const std::string& key(int i) const { return keys_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& keys() const { return keys_; }
  std::optional<int> index_of(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool leq(int i, int j) const { return rel_.get(i, j); }
  bool less(int i, int j) const { return i != j && rel_.get(i, j); }

  bool has_rank() const { return rank_.has_value(); }
  int rank(int i) const { return rank_.value().at(static_cast<std::size_t>(i)); }
  const std::optional<std::vector<int>>& ranks() const { return rank_; }

  /// Hasse relation: pairs (i, j) with j covering i, sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  std::vector<int> minimal_elements() const {
    std::vector<int> out;
    for (int j = 0; j < size(); ++j) {
      bool minimal = true;
      for (int i = 0; i < size() && minimal; ++i) minimal = !less(i, j);
      if (minimal) out.push_back(j);
    }
    return out;
  }
  std::vector<int> maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
      bool maximal = true;
      for (int j = 0; j < size() && maximal; ++j) maximal = !less(i, j);
      if (maximal) out.push_back(i);
    }
    return out;
  }

 private:
  FinitePoset(std::vector<std::string> keys, detail::BitRows rel, std::optional<std::vector<int>> rank)
      : keys_(std::move(keys)), rel_(std::move(rel)), rank_(std::move(rank)) {
    for (int i = 0; i < size(); ++i) {
      if (!index_.emplace(keys_[static_cast<std::size_t>(i)], i).second) {
        throw PosetError("FinitePoset: duplicate key " + keys_[static_cast<std::size_t>(i)]);
      }
    }
    if (rank_ && static_cast<int>(rank_->size()) != size()) throw PosetError("FinitePoset: rank size mismatch");
    validate();
    compute_covers();
  }

  void validate() const {
    const int n = size();
    for (int i = 0; i < n; ++i) {
      if (!leq(i, i)) throw PosetError("FinitePoset: not reflexive at " + key(i));
      for (int j = i + 1; j < n; ++j) {
        if (leq(i, j) && leq(j, i)) {
          throw PosetError("FinitePoset: not antisymmetric on (" + key(i) + ", " + key(j) + ")");
        }
      }
    }
    // i <= j <= k must give i <= k: every up-set of j is inside the up-set of i.
    const int w = rel_.words();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!leq(i, j)) continue;
        const std::uint64_t* ri = rel_.row(i);
        const std::uint64_t* rj = rel_.row(j);
        for (int k = 0; k < w; ++k) {
          const std::uint64_t missing = rj[k] & ~ri[k];
          if (missing != 0) {
            const int z = k * 64 + __builtin_ctzll(missing);
            throw PosetError("FinitePoset: not transitive on (" + key(i) + ", " + key(j) + ", " + key(z) + ")");
          }
        }
      }
    }
  }

  // The covers of i are the strict successors of i that are not strictly
  // above another strict successor.
  void compute_covers() {
    const int n = size();
    const int w = rel_.words();
    std::vector<std::uint64_t> up(static_cast<std::size_t>(w));
    std::vector<std::uint64_t> beyond(static_cast<std::size_t>(w));
    for (int i = 0; i < n; ++i) {
      std::copy(rel_.row(i), rel_.row(i) + w, up.begin());
      up[static_cast<std::size_t>(i / 64)] &= ~(std::uint64_t{1} << (i % 64));
      std::fill(beyond.begin(), beyond.end(), 0);
      for (int k = 0; k < n; ++k) {
        if (!((up[static_cast<std::size_t>(k / 64)] >> (k % 64)) & 1U)) continue;
        const std::uint64_t* rk = rel_.row(k);
        for (int x = 0; x < w; ++x) {
          std::uint64_t r = rk[x];
          if (x == k / 64) r &= ~(std::uint64_t{1} << (k % 64));
          beyond[static_cast<std::size_t>(x)] |= r;
        }
      }
      for (int j = 0; j < n; ++j) {
        const auto x = static_cast<std::size_t>(j / 64);
        if (((up[x] & ~beyond[x]) >> (j % 64)) & 1U) covers_.emplace_back(i, j);
      }
    }
  }

  std::vector<std::string> keys_;
  std::map<std::string, int> index_;
  detail::BitRows rel_;
  std::optional<std::vector<int>> rank_;
  std::vector<std::pair<int, int>> covers_;
};

/// Every cover raises the rank by exactly one.
inline bool is_graded(const FinitePoset& p, const std::vector<int>& rank) {
  for (auto [i, j] : p.covers()) {
    if (rank.at(static_cast<std::size_t>(j)) != rank.at(static_cast<std::size_t>(i)) + 1) return false;
  }
  return true;
}
inline bool is_graded(const FinitePoset& p) { return p.has_rank() && is_graded(p, *p.ranks()); }

/// Why f: P -> Q fails to be a quotient of posets (surjective, monotone and
/// every comparable pair of Q lifts to a comparable pair of P), or nullopt.
inline std::optional<std::string> quotient_map_violation(const std::vector<int>& f, const FinitePoset& p,
                                                         const FinitePoset& q) {
  if (static_cast<int>(f.size()) != p.size()) return "map is not total";
  std::vector<std::vector<int>> fiber(static_cast<std::size_t>(q.size()));
  for (int i = 0; i < p.size(); ++i) {
    const int t = f[static_cast<std::size_t>(i)];
    if (t < 0 || t >= q.size()) return "image out of range at " + p.key(i);
    fiber[static_cast<std::size_t>(t)].push_back(i);
  }
  for (int t = 0; t < q.size(); ++t) {
    if (fiber[static_cast<std::size_t>(t)].empty()) return "not surjective: nothing maps to " + q.key(t);
  }
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j) {
      if (p.leq(i, j) && !q.leq(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)])) {
        return "not monotone on (" + p.key(i) + ", " + p.key(j) + ")";
      }
    }
  }
  for (int a = 0; a < q.size(); ++a) {
    for (int b = 0; b < q.size(); ++b) {
      if (!q.leq(a, b)) continue;
      bool lifted = false;
      for (int i : fiber[static_cast<std::size_t>(a)]) {
        for (int j : fiber[static_cast<std::size_t>(b)]) {
          if (p.leq(i, j)) {
            lifted = true;
            break;
          }
        }
        if (lifted) break;
      }
      if (!lifted) return "pair (" + q.key(a) + ", " + q.key(b) + ") does not lift";
    }
  }
  return std::nullopt;
}
inline bool is_quotient_map(const std::vector<int>& f, const FinitePoset& p, const FinitePoset& q) {
  return !quotient_map_violation(f, p, q).has_value();
}

struct PosetQuotient {
  FinitePoset poset;
  std::vector<int> projection;
};

/// Lifting hypothesis for the quotient of P by the classes `label`: for
/// x <= y and y' ~ y some x' ~ x has x' <= y' (or the same with the roles
/// of x and y exchanged). Returns a violating (x, y, y') description for each
/// failing side, or nullopt when one side holds.
inline std::optional<std::string> lifting_violation(const FinitePoset& p, const std::vector<int>& label) {
  const int n = p.size();
  const int k = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<int>> members(static_cast<std::size_t>(k));
  for (int i = 0; i < n; ++i) members.at(static_cast<std::size_t>(label[static_cast<std::size_t>(i)])).push_back(i);
  // Witness pair (x, y) with x <= y for each comparable pair of classes.
  std::vector<std::pair<int, int>> witness(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), {-1, -1});
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      auto& w = witness[static_cast<std::size_t>(label[static_cast<std::size_t>(x)]) * static_cast<std::size_t>(k) +
                        static_cast<std::size_t>(label[static_cast<std::size_t>(y)])];
      if (w.first < 0) w = {x, y};
    }
  }
  auto side = [&](bool down) -> std::optional<std::string> {
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        const auto [x, y] = witness[static_cast<std::size_t>(a) * static_cast<std::size_t>(k) + static_cast<std::size_t>(b)];
        if (x < 0) continue;
        // down: every y' ~ y is above some x' ~ x. up: every x' ~ x is below some y' ~ y.
        const auto& moved = members[static_cast<std::size_t>(down ? b : a)];
        const auto& other = members[static_cast<std::size_t>(down ? a : b)];
        for (int m : moved) {
          bool ok = false;
          for (int c : other) {
            if (down ? p.leq(c, m) : p.leq(m, c)) {
              ok = true;
              break;
            }
          }
          if (!ok) {
            return "x=" + p.key(x) + ", y=" + p.key(y) + (down ? ", y'=" : ", x'=") + p.key(m);
          }
        }
      }
    }
    return std::nullopt;
  };
  auto first = side(true);
  if (!first) return std::nullopt;
  auto second = side(false);
  if (!second) return std::nullopt;
  return "lifting fails both ways: " + *first + " | " + *second;
}

/// P/~ with x̄ <= ȳ iff some representatives compare. `label` numbers the
/// classes 0..k-1; keys default to the key of the first member in brackets.
inline PosetQuotient quotient_by_equivalence(const FinitePoset& p, const std::vector<int>& label,
                                             std::optional<std::vector<std::string>> keys = std::nullopt,
                                             std::optional<std::vector<int>> rank = std::nullopt) {
  if (static_cast<int>(label.size()) != p.size()) throw PosetError("quotient_by_equivalence: label size mismatch");
  if (auto bad = lifting_violation(p, label)) throw PosetError("quotient_by_equivalence: " + *bad);
  const int k = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<int>> members(static_cast<std::size_t>(k));
  for (int i = 0; i < p.size(); ++i) members.at(static_cast<std::size_t>(label[static_cast<std::size_t>(i)])).push_back(i);
  if (!keys) {
    keys.emplace();
    for (const auto& m : members) {
      if (m.empty()) throw PosetError("quotient_by_equivalence: empty class");
      keys->push_back("[" + p.key(m.front()) + "]");
    }
  }
  FinitePoset q = FinitePoset::build(
      std::move(*keys),
      [&](int a, int b) {
        for (int i : members[static_cast<std::size_t>(a)]) {
          for (int j : members[static_cast<std::size_t>(b)]) {
            if (p.leq(i, j)) return true;
          }
        }
        return false;
      },
      std::move(rank));
  return {std::move(q), label};
}

}  // namespace orcalc
