// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
//
// A short tour: orientations and classes of the theta graph, a contraction,
// and the genus-2 posets.

#include <cstdio>

#include "orcalc/atlas.hpp"
#include "orcalc/catalog.hpp"
#include "orcalc/functors.hpp"

using namespace orcalc;

int main() {
  const Graph theta = catalog::theta();
  std::printf("theta: %s, genus %d\n", to_string(theta).c_str(), genus(theta));

  for (int b : {0, 1}) {
    const auto orients = enumerate_admissible(theta, theta.no_edges(), b);
    const auto classes = equivalence_classes(theta, orients);
    std::printf("b=%d: %zu admissible orientations in %zu classes:", b, orients.size(), classes.size());
    for (const auto& c : classes) std::printf(" %s", ints_json(c.divisor.values()).c_str());
    std::printf("\n");
  }

  // Contract one edge; the class of a rooted orientation moves along.
  const Contraction gamma = contract(theta, EdgeSet(3, {0}));
  const Orientation o = rooted_orient(theta);
  const Orientation p = push_class(gamma, o);
  std::printf("contract e0: %s -> %s\n", to_string(theta).c_str(), to_string(gamma.target()).c_str());
  std::printf("  %s (d=%s) pushes to %s (d=%s)\n", o.to_string().c_str(), ints_json(divisor_of(theta, o).values()).c_str(),
              p.to_string().c_str(), ints_json(divisor_of(gamma.target(), p).values()).c_str());

  const OPBarPoset bar = build_OPbar(theta, 0);
  std::printf("class poset of theta, b=0: %d elements, %zu covers\n", bar.poset.size(), bar.poset.covers().size());

  const Atlas atlas = enumerate_stable_graphs(2);
  const ContractionTable table(atlas);
  const GenusOP op = build_OPg(table, 1, build_Ag(table, 1));
  const GenusConj conj = conjugacy_quotient(op, atlas);
  std::printf("genus 2: %d stable graphs, OP^1_2 has %d elements, %d up to automorphisms\n", atlas.size(), op.poset.size(),
              conj.poset.size());
  return 0;
}
