#pragma once

#include <cstdint>
#include <vector>

#include "skewzf/graph.hpp"

namespace skewzf {

/// Largest order accepted by canonical_form.
inline constexpr int kMaxCanonicalOrder = 10;

/// Canonical labelling of a small graph.
///
/// `code` is the upper-triangle adjacency bit string in column order
/// (x01, x02, x12, x03, ...) read as an integer with x01 as the most
/// significant bit, minimised over all vertex permutations; numeric order of
/// codes equals lexicographic order of bit strings. `graph` is the graph
/// relabelled so that its own code is `code`.
struct CanonicalForm {
  std::uint64_t code = 0;
  Graph graph;
};

/// Exact lexicographically-minimal form by branch and bound over permutations.
/// Requires g.order() <= kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);

/// Column-order adjacency code of g as labelled (no minimisation).
std::uint64_t adjacency_code(const Graph& g);

/// Rebuilds the graph whose column-order adjacency code is `code`.
Graph graph_from_code(int order, std::uint64_t code);

/// One canonical representative per isomorphism class of connected graphs of
/// order n, sorted by code. Supports 1 <= n <= 7; throws std::out_of_range otherwise.
std::vector<Graph> enumerate_connected(int n);

/// All isomorphism classes of graphs (connected or not) of order n, 1 <= n <= 7.
std::vector<Graph> enumerate_graphs(int n);

/// Connected bipartite graphs of order n, 1 <= n <= 8, up to isomorphism.
std::vector<Graph> enumerate_connected_bipartite(int n);

/// Unlabelled trees of order n, 1 <= n <= 16, up to isomorphism (canonical
/// rooted-at-centre encoding rather than canonical_form).
std::vector<Graph> enumerate_trees(int n);

}  // namespace skewzf
