#pragma once

#include <vector>

#include "skewzf/graph.hpp"
#include "skewzf/set_family.hpp"
#include "skewzf/vertex_set.hpp"

namespace skewzf {

/// One application of the skew color change rule: `forcer` (of any color)
/// had `forced` as its only white neighbor.
struct Force {
  Vertex forcer = 0;
  Vertex forced = 0;
  bool operator==(const Force&) const = default;
};

/// Result of running the skew color change rule to its fixpoint.
struct ColorTrace {
  VertexSet initial;
  VertexSet black;
  /// Chronological; each vertex is forced at most once.
  std::vector<Force> forces;

  bool all_black(int order) const { return black == VertexSet::range(order); }
};

/// Runs the skew color change rule from black set `z` until no vertex has
/// exactly one white neighbor. Firing order is deterministic: the lowest
/// eligible forcer fires first. The final black set does not depend on the
/// order. Throws std::out_of_range when z has a vertex outside the graph and
/// std::invalid_argument for order > 64.
ColorTrace skew_closure(const Graph& g, VertexSet z);

/// Final black set only; same fixpoint as skew_closure(g, z).black.
VertexSet skew_closure_set(const Graph& g, VertexSet z);

bool is_skew_forcing_set(const Graph& g, VertexSet z);

struct ZMinus {
  int value = 0;
  VertexSet witness;
};

/// Exact skew zero forcing number with one minimum forcing set.
///
/// Isolated vertices are placed in every candidate. A vertex already black
/// in the closure of that base set never belongs to a minimum forcing set,
/// so candidates range over the remaining vertices in increasing
/// cardinality, stopping at the first forcing set found.
ZMinus zminus(const Graph& g);

/// Every forcing set of size Z^-(g).
SetFamily all_minimum_szfs(const Graph& g);

}  // namespace skewzf
