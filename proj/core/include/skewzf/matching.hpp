#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "skewzf/graph.hpp"
#include "skewzf/vertex_set.hpp"

namespace skewzf {

/// A set of pairwise vertex-disjoint edges, kept sorted.
class Matching {
 public:
  Matching() = default;
  /// Throws std::invalid_argument when two edges share an endpoint.
  explicit Matching(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  bool contains(Edge e) const;
  /// Endpoints of all edges. Requires endpoints < 64.
  VertexSet saturated() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> edges_;
};

std::string to_string(const Matching& m);

/// Throws std::invalid_argument when some edge of m is not an edge of g.
void validate_matching(const Graph& g, const Matching& m);

/// Maximum cardinality matching by Edmonds' blossom algorithm.
Matching maximum_matching(const Graph& g);

/// match(G).
int matching_number(const Graph& g);

/// True iff g contains an even cycle alternating between edges of m and
/// edges not in m. Found by DFS over alternating walks seeded at each edge
/// of m.
bool has_alternating_cycle(const Graph& g, const Matching& m);

/// True iff m is the only perfect matching of the subgraph induced by the
/// m-saturated vertices, i.e. no other matching saturates the same set.
bool is_unique_on_saturated_set(const Graph& g, const Matching& m);

/// Uniquely restricted: no m-alternating cycle. Validates m against g.
bool is_uniquely_restricted(const Graph& g, const Matching& m);

/// A largest uniquely restricted matching, by branch and bound over
/// matchings (the property is inherited by sub-matchings).
Matching maximum_ur_matching(const Graph& g);

/// Calls fn for every matching of g (including the empty one).
void for_each_matching(const Graph& g, const std::function<void(const Matching&)>& fn);

std::vector<Matching> matchings_of_size(const Graph& g, int k);

/// Every matching of size match(G), each exactly once.
std::vector<Matching> all_maximum_matchings(const Graph& g);

VertexSet saturated_set(const Graph& g, const Matching& m);
/// V(G) minus the endpoints of m. Validates m against g.
VertexSet unsaturated_set(const Graph& g, const Matching& m);

/// Exact count by branching on a minimum-degree remaining vertex.
std::uint64_t count_perfect_matchings(const Graph& g);
bool has_unique_perfect_matching(const Graph& g);

}  // namespace skewzf
