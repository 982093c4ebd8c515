// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Push-forward and pull-back along contractions: edge sets, divisors,
// orientations and orientation classes, plus the checks of their laws.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "orcalc/contraction.hpp"
#include "orcalc/divisor.hpp"
#include "orcalc/orientation.hpp"
#include "orcalc/orientation_ops.hpp"
#include "orcalc/orientation_posets.hpp"
#include "orcalc/report.hpp"

namespace orcalc {

/// γ_*S = S \ S0, as target edge indices.
inline EdgeSet push_edges(const Contraction& gamma, const EdgeSet& s) {
  EdgeSet out = gamma.target().no_edges();
  for (int e : s.to_vector()) {
    const EdgeImage& im = gamma.map_edge(e);
    if (!im.contracted) out.insert(im.index);
  }
  return out;
}

/// γ^*T: T itself for b = 1, together with the bridges of G - T for b = 0.
inline EdgeSet pull_edges(const Contraction& gamma, const EdgeSet& t, int b) {
  if (b != 0 && b != 1) throw std::domain_error("pull_edges: b must be 0 or 1");
  EdgeSet out = gamma.source().no_edges();
  for (int f : t.to_vector()) out.insert(gamma.preimage_edge(f));
  if (b == 0) out = out | bridges(gamma.source(), out);
  return out;
}

inline Divisor push_divisor(const Contraction& gamma, const Divisor& d) {
  d.check_carrier(gamma.source().vertex_count());
  Divisor out = Divisor::zero(gamma.target().vertex_count());
  std::vector<int> v = out.values();
  for (int z = 0; z < d.size(); ++z) v[static_cast<std::size_t>(gamma.map_vertex(z))] += d[z];
  return Divisor(std::move(v));
}

/// c^{γ,S}: contracted edges of S counted at the vertex they collapse into.
inline Divisor c_divisor(const Contraction& gamma, const EdgeSet& s) {
  std::vector<int> v(static_cast<std::size_t>(gamma.target().vertex_count()), 0);
  for (int e : (s & gamma.contracted()).to_vector()) ++v[static_cast<std::size_t>(gamma.map_edge(e).index)];
  return Divisor(std::move(v));
}

/// γ_*O_S: O_S restricted to the surviving edges. Edges carried with a flip
/// change direction with their half-edges.
inline Orientation push_orientation(const Contraction& gamma, const Orientation& o) {
  check_carrier(gamma.source(), o);
  const int mh = gamma.target().edge_count();
  std::vector<EdgeState> st(static_cast<std::size_t>(mh), EdgeState::Absent);
  EdgeSet removed = EdgeSet::full(mh);
  for (int e = 0; e < o.edge_count(); ++e) {
    const EdgeState s = o.state(e);
    const EdgeImage& im = gamma.map_edge(e);
    if (im.contracted) {
      if (s == EdgeState::Bioriented) {
        throw std::domain_error("push_orientation: a contracted edge is bioriented");
      }
      continue;
    }
    if (s == EdgeState::Absent) continue;
    st[static_cast<std::size_t>(im.index)] = im.flipped ? reversed(s) : s;
    removed.erase(im.index);
  }
  return Orientation(removed, std::move(st), o.b());
}

/// A member of the class of `o` that push_orientation accepts: for b = 1 the
/// bioriented edge is moved off S0 when G - S has an edge outside S0.
/// Returns nullopt when every edge of G - S is contracted and o is bioriented
/// on one of them.
inline std::optional<Orientation> pushable_representative(const Contraction& gamma, const Orientation& o) {
  const int e0 = o.bioriented_edge();
  if (e0 < 0 || !gamma.contracted().contains(e0)) return o;
  const int e = (o.active() - gamma.contracted()).first();
  if (e < 0) return std::nullopt;
  return move_biorientation(gamma.source(), o, e);
}

/// The class push γ̄_*, returned as the image of a suitable representative.
/// When every edge of G - S is contracted (this includes S0 = E with b = 1)
/// the image is the empty rooted orientation of the one-vertex H - γ_*S.
inline Orientation push_class(const Contraction& gamma, const Orientation& o) {
  if (auto rep = pushable_representative(gamma, o)) return push_orientation(gamma, *rep);
  const EdgeSet t = push_edges(gamma, o.removed());
  if (t != gamma.target().all_edges() || gamma.target().vertex_count() != 1) {
    throw std::logic_error("push_class: expected a one-vertex edgeless image");
  }
  return Orientation::empty(gamma.target().edge_count(), o.b());
}

inline std::string contraction_key(const Contraction& gamma) {
  std::vector<int> emap;
  for (int e = 0; e < gamma.source().edge_count(); ++e) {
    const EdgeImage& im = gamma.map_edge(e);
    emap.push_back(im.contracted ? -1 - im.index : (im.flipped ? -100 - im.index : im.index));
  }
  return to_string(gamma.source()) + " -> " + to_string(gamma.target()) +
         " S0=" + ints_json(gamma.contracted().to_vector()) + " vmap=" + ints_json(gamma.vertex_map()) +
         " emap=" + ints_json(emap);
}

/// γ̄_* on class indices of prebuilt ŌP posets.
inline std::vector<int> class_map(const Contraction& gamma, const OPBarPoset& src, const OPBarPoset& dst) {
  std::vector<int> out;
  for (const ClassElement& c : src.classes) {
    const Orientation& rep = src.op.elements[static_cast<std::size_t>(c.members.front())];
    const Orientation img = push_class(gamma, rep);
    const int k = dst.find(img.removed(), divisor_of(gamma.target(), img));
    if (k < 0) throw std::logic_error("class_map: image is not a class of the target");
    out.push_back(k);
  }
  return out;
}

/// Forward and pull-back laws on A^b: membership, monotonicity, rank
/// preservation of γ^*, the adjunction and the quotient property.
inline void verify_fupr(const Contraction& gamma, int b, const APoset& ag, const APoset& ah, Report& r) {
  const Graph& g = gamma.source();
  const Graph& h = gamma.target();
  const std::string key = contraction_key(gamma) + " b=" + std::to_string(b);
  std::vector<int> push(ag.sets.size());
  for (std::size_t i = 0; i < ag.sets.size(); ++i) {
    const EdgeSet t = push_edges(gamma, ag.sets[i]);
    push[i] = ah.index_of(t);
    r.check(push[i] >= 0, "push_edges lands in A^b_H", key, "S=" + ints_json(ag.sets[i].to_vector()));
  }
  if (std::find(push.begin(), push.end(), -1) != push.end()) return;
  for (std::size_t i = 0; i < ag.sets.size(); ++i) {
    for (std::size_t j = 0; j < ag.sets.size(); ++j) {
      if (!ag.poset.leq(static_cast<int>(i), static_cast<int>(j))) continue;
      if (!ah.poset.leq(push[i], push[j])) {
        r.fail("push_edges is monotone", key,
               ints_json(ag.sets[i].to_vector()) + " <= " + ints_json(ag.sets[j].to_vector()));
      }
    }
  }
  r.check(is_quotient_map(push, ag.poset, ah.poset), "push_edges is a quotient A^b_G -> A^b_H", key,
          quotient_map_violation(push, ag.poset, ah.poset).value_or(""));
  std::vector<int> pull(ah.sets.size());
  for (std::size_t t = 0; t < ah.sets.size(); ++t) {
    const EdgeSet& tt = ah.sets[t];
    const EdgeSet s = pull_edges(gamma, tt, b);
    const std::string inst = key + " T=" + ints_json(tt.to_vector());
    pull[t] = ag.index_of(s);
    if (!r.check(pull[t] >= 0, "pull_edges lands in A^b_G", inst, ints_json(s.to_vector()))) continue;
    r.check(push_edges(gamma, s) == tt, "push(pull T) = T", inst, ints_json(s.to_vector()));
    r.check(spanning_genus(h, tt) == spanning_genus(g, s), "pull_edges preserves rank", inst,
            std::to_string(spanning_genus(h, tt)) + " vs " + std::to_string(spanning_genus(g, s)));
    for (const EdgeSet& ss : ag.sets) {
      const bool lhs = tt.subset_of(push_edges(gamma, ss));
      const bool rhs = s.subset_of(ss);
      r.check(lhs == rhs, "T within push S iff pull T within S", inst, "S=" + ints_json(ss.to_vector()));
      if (push_edges(gamma, ss) == tt && !s.subset_of(ss)) {
        r.fail("pull T is the least element of its fiber", inst, "S=" + ints_json(ss.to_vector()));
      }
    }
  }
  for (std::size_t a = 0; a < ah.sets.size(); ++a) {
    for (std::size_t c = 0; c < ah.sets.size(); ++c) {
      if (pull[a] < 0 || pull[c] < 0) continue;
      if (ah.poset.leq(static_cast<int>(a), static_cast<int>(c)) && !ag.poset.leq(pull[a], pull[c])) {
        r.fail("pull_edges is monotone", key,
               ints_json(ah.sets[a].to_vector()) + " <= " + ints_json(ah.sets[c].to_vector()));
      }
    }
  }
  if (gamma.contracted().subset_of(bridges(g))) {
    std::vector<int> sorted_push = push;
    std::sort(sorted_push.begin(), sorted_push.end());
    const bool bijective =
        std::adjacent_find(sorted_push.begin(), sorted_push.end()) == sorted_push.end() &&
        sorted_push.size() == ah.sets.size();
    r.check(bijective, "push_edges is an isomorphism when S0 consists of bridges", key);
  }
}

/// Orientation push-forward laws: admissibility, the divisor identity,
/// compatibility with equivalence and order, and the square with the class
/// quotients. When S0 consists of bridges the maps are checked to be
/// bijections (for b = 1 only at the class level).
inline void verify_fprop(const Contraction& gamma, int b, const OPBarPoset& src, const OPBarPoset& dst, Report& r) {
  const Graph& g = gamma.source();
  const Graph& h = gamma.target();
  const std::string key = contraction_key(gamma) + " b=" + std::to_string(b);
  const auto& elems = src.op.elements;
  std::vector<int> img(elems.size(), -1);
  std::map<Orientation, int> dst_index;
  for (std::size_t j = 0; j < dst.op.elements.size(); ++j) dst_index.emplace(dst.op.elements[j], static_cast<int>(j));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const Orientation& o = elems[i];
    const int e0 = o.bioriented_edge();
    if (e0 >= 0 && gamma.contracted().contains(e0)) continue;
    const std::string inst = key + " O=" + o.to_string();
    const Orientation p = push_orientation(gamma, o);
    auto it = dst_index.find(p);
    if (!r.check(it != dst_index.end() && is_admissible(h, p), "push of an admissible orientation is admissible",
                 inst, p.to_string())) {
      continue;
    }
    img[i] = it->second;
    const Divisor lhs = push_divisor(gamma, divisor_of(g, o));
    const Divisor rhs = divisor_of(h, p) - c_divisor(gamma, o.removed());
    r.check(lhs == rhs, "push d^O = d^(push O) - c^(gamma,S)", inst,
            ints_json(lhs.values()) + " vs " + ints_json(rhs.values()));
  }
  // Equivalence and order.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (img[i] < 0) continue;
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (img[j] < 0 || i == j) continue;
      if (src.projection[i] == src.projection[j] && dst.projection[static_cast<std::size_t>(img[i])] !=
                                                        dst.projection[static_cast<std::size_t>(img[j])]) {
        r.fail("push preserves equivalence", key, elems[i].to_string() + " ~ " + elems[j].to_string());
      }
      if (src.op.poset.leq(static_cast<int>(i), static_cast<int>(j)) && !dst.op.poset.leq(img[i], img[j])) {
        r.fail("push preserves order", key, elems[i].to_string() + " <= " + elems[j].to_string());
      }
    }
  }
  // Commutative square: class of push = push of class, for every eligible member.
  const std::vector<int> cmap = class_map(gamma, src, dst);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (img[i] < 0) continue;
    r.check(dst.projection[static_cast<std::size_t>(img[i])] == cmap[static_cast<std::size_t>(src.projection[i])],
            "class of push = push of class", key + " O=" + elems[i].to_string());
  }
  for (int x = 0; x < src.poset.size(); ++x) {
    for (int y = 0; y < src.poset.size(); ++y) {
      if (src.poset.leq(x, y) && !dst.poset.leq(cmap[static_cast<std::size_t>(x)], cmap[static_cast<std::size_t>(y)])) {
        r.fail("class push is order preserving", key, src.poset.key(x) + " <= " + src.poset.key(y));
      }
    }
  }
  if (gamma.contracted().subset_of(bridges(g))) {
    auto bijective = [](std::vector<int> v, std::size_t n) {
      std::sort(v.begin(), v.end());
      return v.size() == n && std::adjacent_find(v.begin(), v.end()) == v.end() &&
             (v.empty() || (v.front() >= 0 && v.back() < static_cast<int>(n)));
    };
    if (b == 0) {
      r.check(bijective(img, dst.op.elements.size()), "push on OP^0 is a bijection when S0 consists of bridges", key);
    }
    r.check(bijective(cmap, dst.classes.size()),
            b == 0 ? "class push on OP^0 is a bijection when S0 consists of bridges"
                   : "class push on OP^1 is a bijection when S0 consists of bridges",
            key);
  }
}

/// Class push is a quotient of posets and maps the classes on G - γ^*T onto
/// the classes on H - T for every T in A^b_H.
inline Report verify_fthm(const Contraction& gamma, int b, const OPBarPoset& src, const OPBarPoset& dst) {
  Report r;
  const std::string key = contraction_key(gamma) + " b=" + std::to_string(b);
  std::vector<int> cmap;
  try {
    cmap = class_map(gamma, src, dst);
  } catch (const std::exception& ex) {
    r.fail("class push is defined", key, ex.what());
    return r;
  }
  // Representative independence.
  for (std::size_t c = 0; c < src.classes.size(); ++c) {
    for (int m : src.classes[c].members) {
      const Orientation& o = src.op.elements[static_cast<std::size_t>(m)];
      const Orientation img = push_class(gamma, o);
      const int k = dst.find(img.removed(), divisor_of(gamma.target(), img));
      r.check(k == cmap[c], "class push is independent of the representative", key + " O=" + o.to_string());
    }
  }
  r.check(is_quotient_map(cmap, src.poset, dst.poset), "class push is a quotient of posets", key,
          quotient_map_violation(cmap, src.poset, dst.poset).value_or(""));
  for (std::size_t t = 0; t < dst.op.A.sets.size(); ++t) {
    const EdgeSet& tt = dst.op.A.sets[t];
    const EdgeSet s = pull_edges(gamma, tt, b);
    std::set<int> want;
    std::set<int> got;
    for (std::size_t k = 0; k < dst.classes.size(); ++k) {
      if (dst.classes[k].removed == tt) want.insert(static_cast<int>(k));
    }
    for (std::size_t c = 0; c < src.classes.size(); ++c) {
      if (src.classes[c].removed == s) got.insert(cmap[c]);
    }
    r.check(got == want, "classes on G - pull T map onto classes on H - T", key + " T=" + ints_json(tt.to_vector()),
            std::to_string(got.size()) + " of " + std::to_string(want.size()));
  }
  return r;
}

inline Report verify_fthm(const Contraction& gamma, int b) {
  return verify_fthm(gamma, b, build_OPbar(gamma.source(), b), build_OPbar(gamma.target(), b));
}

/// Functor laws for γ: G -> H followed by δ: H -> J.
inline void verify_composition(const Contraction& gamma, const Contraction& delta, int b, const OPBarPoset& bg,
                               const OPBarPoset& bh, const OPBarPoset& bj, Report& r) {
  const Contraction comp = compose(gamma, delta);
  const std::string key = contraction_key(gamma) + " then " + contraction_key(delta) + " b=" + std::to_string(b);
  for (const EdgeSet& s : bg.op.A.sets) {
    r.check(push_edges(comp, s) == push_edges(delta, push_edges(gamma, s)), "(delta gamma)_* S = delta_* gamma_* S",
            key + " S=" + ints_json(s.to_vector()));
  }
  for (const EdgeSet& t : bj.op.A.sets) {
    r.check(pull_edges(comp, t, b) == pull_edges(gamma, pull_edges(delta, t, b), b),
            "(delta gamma)^* T = gamma^* delta^* T", key + " T=" + ints_json(t.to_vector()));
  }
  for (const ClassElement& c : bg.classes) {
    r.check(push_divisor(comp, c.divisor) == push_divisor(delta, push_divisor(gamma, c.divisor)),
            "(delta gamma)_* d = delta_* gamma_* d", key + " d=" + ints_json(c.divisor.values()));
  }
  for (const Orientation& o : bg.op.elements) {
    const int e0 = o.bioriented_edge();
    if (e0 >= 0 && comp.contracted().contains(e0)) continue;
    r.check(push_orientation(comp, o) == push_orientation(delta, push_orientation(gamma, o)),
            "(delta gamma)_* O = delta_* gamma_* O", key + " O=" + o.to_string());
  }
  const auto cg = class_map(gamma, bg, bh);
  const auto cd = class_map(delta, bh, bj);
  const auto cc = class_map(comp, bg, bj);
  for (std::size_t i = 0; i < cc.size(); ++i) {
    r.check(cc[i] == cd[static_cast<std::size_t>(cg[i])], "class push is functorial",
            key + " class=" + bg.poset.key(static_cast<int>(i)));
  }
}

/// Removing or contracting all bridges identifies OP^0 and its class poset.
inline void verify_bricor(const Graph& g, Report& r) {
  const EdgeSet br = bridges(g);
  const std::string key = to_string(g);
  const Subgraph sub = delete_edges(g, br);
  const OPBarPoset big = build_OPbar(g, 0);
  const OPBarPoset small = build_OPbar(sub.graph, 0);
  // The inclusion G - G_br -> G on A^0 and OP^0.
  std::vector<int> amap;
  for (const EdgeSet& s : small.op.A.sets) {
    EdgeSet t = br;
    for (int e : s.to_vector()) t.insert(sub.edge_map[static_cast<std::size_t>(e)]);
    amap.push_back(big.op.A.index_of(t));
  }
  auto is_iso = [](const std::vector<int>& f, const FinitePoset& p, const FinitePoset& q) {
    if (static_cast<int>(f.size()) != p.size() || p.size() != q.size()) return false;
    for (int x : f) {
      if (x < 0) return false;
    }
    for (int i = 0; i < p.size(); ++i) {
      for (int j = 0; j < p.size(); ++j) {
        if (p.leq(i, j) != q.leq(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)])) return false;
      }
    }
    return true;
  };
  r.check(is_iso(amap, small.op.A.poset, big.op.A.poset), "A^0 of G - G_br is A^0 of G", key);
  std::map<Orientation, int> big_index;
  for (std::size_t j = 0; j < big.op.elements.size(); ++j) big_index.emplace(big.op.elements[j], static_cast<int>(j));
  std::vector<int> omap;
  for (const Orientation& o : small.op.elements) {
    std::vector<EdgeState> st(static_cast<std::size_t>(g.edge_count()), EdgeState::Absent);
    EdgeSet removed = br;
    for (int e = 0; e < o.edge_count(); ++e) {
      const int f = sub.edge_map[static_cast<std::size_t>(e)];
      st[static_cast<std::size_t>(f)] = o.state(e);
      if (o.state(e) == EdgeState::Absent) removed.insert(f);
    }
    auto it = big_index.find(Orientation(removed, std::move(st), 0));
    omap.push_back(it == big_index.end() ? -1 : it->second);
  }
  r.check(is_iso(omap, small.op.poset, big.op.poset), "OP^0 of G - G_br is OP^0 of G", key);
  std::vector<int> cmap;
  for (std::size_t c = 0; c < small.classes.size(); ++c) {
    const int o = omap[static_cast<std::size_t>(small.classes[c].members.front())];
    cmap.push_back(o < 0 ? -1 : big.projection[static_cast<std::size_t>(o)]);
  }
  r.check(is_iso(cmap, small.poset, big.poset), "class poset of G - G_br is that of G", key);
  // The contraction G -> G/G_br.
  const Contraction gamma = contract(g, br);
  const OPBarPoset quo = build_OPbar(gamma.target(), 0);
  std::map<Orientation, int> quo_index;
  for (std::size_t j = 0; j < quo.op.elements.size(); ++j) quo_index.emplace(quo.op.elements[j], static_cast<int>(j));
  std::vector<int> pmap;
  for (const Orientation& o : big.op.elements) {
    auto it = quo_index.find(push_orientation(gamma, o));
    pmap.push_back(it == quo_index.end() ? -1 : it->second);
  }
  r.check(is_iso(pmap, big.op.poset, quo.op.poset), "OP^0 of G is OP^0 of G/G_br", key);
  r.check(is_iso(class_map(gamma, big, quo), big.poset, quo.poset), "class poset of G is that of G/G_br", key);
}

/// Vertex bijection from Ĝ_S/Ŝ0 onto Ĥ_R, R = γ_*S, together with the
/// contraction γ̂ itself. Ŝ0 holds S0 \ S and both halves of every e in S0 ∩ S.
struct HatContraction {
  Subdivision source;
  Subdivision target;
  Contraction gamma_hat;
  std::vector<int> to_target;  ///< vertex of gamma_hat.target() -> vertex of target.graph
};

inline HatContraction hat_contraction(const Contraction& gamma, const EdgeSet& s) {
  const Graph& g = gamma.source();
  Subdivision sg = subdivide(g, s);
  Subdivision sh = subdivide(gamma.target(), push_edges(gamma, s));
  EdgeSet s0hat = sg.graph.no_edges();
  for (int e : gamma.contracted().to_vector()) {
    const auto k = static_cast<std::size_t>(e);
    if (s.contains(e)) {
      s0hat.insert(sg.h_edge[k]);
      s0hat.insert(sg.j_edge[k]);
    } else {
      s0hat.insert(sg.edge_image[k]);
    }
  }
  Contraction gh = contract(sg.graph, s0hat);
  std::vector<int> to(static_cast<std::size_t>(gh.target().vertex_count()), -1);
  for (int z = sg.graph.vertex_count() - 1; z >= 0; --z) {
    int image = -1;
    if (z < g.vertex_count()) {
      image = gamma.map_vertex(z);
    } else {
      for (int e = 0; e < g.edge_count(); ++e) {
        if (sg.exceptional[static_cast<std::size_t>(e)] == z && !gamma.contracted().contains(e)) {
          image = sh.exceptional[static_cast<std::size_t>(gamma.map_edge(e).index)];
        }
      }
    }
    if (image >= 0) to[static_cast<std::size_t>(gh.map_vertex(z))] = image;
  }
  return {std::move(sg), std::move(sh), std::move(gh), std::move(to)};
}

/// Choice-function identity δ_* d̂ = d + c^δ for all δ: Ĝ_S -> G, and the
/// hat compatibility d̂^{γ_*O} = γ̂_* d̂^{O} for every O in the class of d and
/// every contraction of G not contracting the bioriented edge of O.
inline Report verify_exclm(const Graph& g, const EdgeSet& s, const Divisor& d) {
  Report r;
  const int b = d.degree() - spanning_genus(g, s) + component_count(g, s);
  const std::string key = to_string(g) + " S=" + ints_json(s.to_vector()) + " d=" + ints_json(d.values());
  if ((b != 0 && b != 1) || !is_stable_divisor(g, s, d, b)) {
    r.fail("d is stable on G - S", key, "b=" + std::to_string(b));
    return r;
  }
  const Subdivision sub = subdivide(g, s);
  const Divisor dhat = hat_divisor(d, sub);
  const std::vector<int> members = s.to_vector();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << members.size()); ++mask) {
    EdgeSet chosen = sub.graph.no_edges();
    for (std::size_t i = 0; i < members.size(); ++i) {
      const auto k = static_cast<std::size_t>(members[i]);
      chosen.insert(((mask >> i) & 1U) ? sub.j_edge[k] : sub.h_edge[k]);
    }
    const Contraction delta = contract(sub.graph, chosen);
    const std::string inst = key + " choice=" + std::to_string(mask);
    if (!r.check(delta.target() == g, "choice contraction returns G", inst, to_string(delta.target()))) continue;
    const Divisor lhs = push_divisor(delta, dhat);
    const Divisor rhs = d + c_divisor(delta, sub.graph.all_edges());
    r.check(lhs == rhs, "delta_* d_hat = d + c^delta", inst, ints_json(lhs.values()) + " vs " + ints_json(rhs.values()));
  }
  std::vector<Orientation> reps;
  for (Orientation& o : enumerate_admissible(g, s, b)) {
    if (divisor_of(g, o) == d) reps.push_back(std::move(o));
  }
  r.check(!reps.empty(), "stable divisor has an admissible orientation", key);
  for_each_subset(g.all_edges(), [&](const EdgeSet& s0) {
    const Contraction gamma = contract(g, s0);
    const HatContraction hc = hat_contraction(gamma, s);
    const std::string inst = key + " S0=" + ints_json(s0.to_vector());
    bool bij = std::find(hc.to_target.begin(), hc.to_target.end(), -1) == hc.to_target.end() &&
               hc.gamma_hat.target().vertex_count() == hc.target.graph.vertex_count();
    if (bij) {
      std::vector<int> seen = hc.to_target;
      std::sort(seen.begin(), seen.end());
      bij = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
      for (int v = 0; bij && v < hc.gamma_hat.target().vertex_count(); ++v) {
        bij = hc.gamma_hat.target().weight(v) == hc.target.graph.weight(hc.to_target[static_cast<std::size_t>(v)]);
      }
      std::multiset<std::pair<int, int>> a;
      std::multiset<std::pair<int, int>> c;
      for (const Edge& e : hc.gamma_hat.target().edges()) {
        a.emplace(hc.to_target[static_cast<std::size_t>(e.tail)], hc.to_target[static_cast<std::size_t>(e.head)]);
      }
      for (const Edge& e : hc.target.graph.edges()) c.emplace(e.tail, e.head);
      bij = bij && a == c;
    }
    if (!r.check(bij, "G_hat/S0_hat is H_hat", inst)) return;
    for (const Orientation& o : reps) {
      const int e0 = o.bioriented_edge();
      if (e0 >= 0 && s0.contains(e0)) continue;
      const Divisor lhs = hat_divisor(divisor_of(gamma.target(), push_orientation(gamma, o)), hc.target);
      const Divisor pushed = push_divisor(hc.gamma_hat, hat_divisor(divisor_of(g, o), hc.source));
      std::vector<int> rhs(static_cast<std::size_t>(lhs.size()), 0);
      for (int v = 0; v < pushed.size(); ++v) rhs[static_cast<std::size_t>(hc.to_target[static_cast<std::size_t>(v)])] = pushed[v];
      r.check(lhs == Divisor(rhs), "hat of pushed divisor = hat push of hat divisor", inst + " O=" + o.to_string(),
              ints_json(lhs.values()) + " vs " + ints_json(rhs));
    }
  });
  return r;
}

}  // namespace orcalc
