// Copyright (c) orcalc contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Small named graphs used throughout the tests, the suites and the demo.

#include <vector>

#include "orcalc/graph.hpp"
#include "orcalc/orientation.hpp"

namespace orcalc::catalog {

/// Two weight-0 vertices joined by three parallel edges.
inline Graph theta() { return Graph({0, 0}, {{0, 1}, {0, 1}, {0, 1}}); }

/// Two weight-0 vertices, a loop at each (edges 0 and 2) and a bridge (edge 1).
inline Graph dumbbell() { return Graph({0, 0}, {{0, 0}, {0, 1}, {1, 1}}); }

/// A single vertex of weight w.
inline Graph point(int w) { return Graph({w}, {}); }

/// Three weight-1 vertices u1, u2, u3; edges 0-2 join u1u2 (edge 2 is the
/// one contracted in the worked example), edges 3-5 join u2u3.
inline Graph figure4() {
  return Graph({1, 1, 1}, {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {1, 2}, {1, 2}});
}
inline constexpr int kFigure4Edge = 2;

/// The 0-orientation of figure4() minus edge 2 from the worked example:
/// top edge u2 -> u1, middle u1 -> u2, then u2 -> u3, u3 -> u2, u2 -> u3.
inline Orientation figure4_orientation() {
  using S = EdgeState;
  return Orientation(EdgeSet(6, {kFigure4Edge}),
                     {S::Backward, S::Forward, S::Absent, S::Forward, S::Backward, S::Forward}, 0);
}

/// Genus 3: u-v doubled, v-w doubled, u-w single, all weight 0. Removing
/// the u-w edge leaves two cycles sharing the cut vertex v.
inline Graph bowtie_closed() {
  return Graph({0, 0, 0}, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}});
}

}  // namespace orcalc::catalog
