#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "skewzf/vertex_set.hpp"

namespace skewzf {

/// An undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool has(Vertex w) const { return u == w || v == w; }
  constexpr Vertex other(Vertex w) const { return w == u ? v : u; }

  constexpr auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on vertices {0, ..., order-1}.
///
/// Immutable once built. Edges are kept sorted and deduplicated, adjacency
/// lists are sorted, and for order <= 64 each vertex also carries a
/// neighborhood bitmask used by the forcing and matching engines.
class Graph {
 public:
  /// Edgeless graph on `order` vertices. Throws std::invalid_argument if order < 1.
  explicit Graph(int order = 1);

  /// Builds a graph from an edge list; duplicates (in either orientation) collapse.
  /// Throws std::out_of_range on an endpoint outside [0, order) and
  /// std::invalid_argument on a loop or order < 1.
  static Graph from_edge_list(int order, std::span<const Edge> edges);
  static Graph from_edge_list(int order, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return order_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex a, Vertex b) const;
  bool has_edge(Edge e) const { return adjacent(e.u, e.v); }

  /// Whether the bitset accessors below are available (order <= 64).
  bool fits_bitset() const { return order_ <= kMaxBitsetOrder; }
  VertexSet vertex_set() const { return VertexSet::range(order_); }
  /// N(v) as a bitmask. Requires fits_bitset().
  VertexSet neighbor_set(Vertex v) const { return masks_[static_cast<std::size_t>(v)]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  Graph(int order, std::vector<Edge> sorted_unique_edges);

  int order_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexSet> masks_;
};

/// Throws std::invalid_argument unless g.fits_bitset(); `what` names the caller.
void require_bitset_order(const Graph& g, const char* what);

/// Result of induced_subgraph: the subgraph plus both directions of the relabelling.
struct InducedSubgraph {
  Graph graph;
  /// to_original[new] = old vertex.
  std::vector<Vertex> to_original;
  /// from_original[old] = new vertex, or nullopt when old was dropped.
  std::vector<std::optional<Vertex>> from_original;
};

/// G[S], relabelled 0..|S|-1 in increasing order of original label.
/// Throws std::invalid_argument on empty S, std::out_of_range on a bad vertex.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);
InducedSubgraph induced_subgraph(const Graph& g, VertexSet subset);

/// G - v.
InducedSubgraph delete_vertex(const Graph& g, Vertex v);

/// Disjoint union of g1 and g2 with v1 and v2 identified. Vertices of g1 keep
/// their labels; the identified vertex is v1; the remaining vertices of g2
/// follow in increasing order.
Graph vertex_sum(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);

/// Disjoint union, g2 relabelled after g1.
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// G o H: one copy of h per vertex of g, that vertex joined to its whole copy.
/// Vertex v of g keeps label v; copy i occupies labels |g| + i|h| ... .
Graph corona(const Graph& g, const Graph& h);

/// G box H on pairs (a, x) labelled a*|h| + x.
Graph cartesian_product(const Graph& g, const Graph& h);

/// G x H (direct/tensor product): (a,x)~(b,y) iff a~b and x~y. Labels a*|h| + x.
Graph tensor_product(const Graph& g, const Graph& h);

Graph complement(const Graph& g);

}  // namespace skewzf
