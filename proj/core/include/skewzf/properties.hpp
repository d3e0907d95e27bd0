#pragma once

#include <optional>
#include <vector>

#include "skewzf/graph.hpp"

namespace skewzf {

struct DegreeStats {
  int min_degree = 0;  // delta(G)
  int max_degree = 0;  // Delta(G)
  auto operator<=>(const DegreeStats&) const = default;
};

bool is_connected(const Graph& g);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// Vertices whose removal increases the number of components.
std::vector<Vertex> cut_vertices(const Graph& g);

DegreeStats degree_stats(const Graph& g);

std::vector<Vertex> isolated_vertices(const Graph& g);

/// Side assignment (0/1 per vertex) of a proper 2-coloring, or nullopt.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

bool is_tree(const Graph& g);

/// Connected with exactly one cycle (|E| = |V|).
bool is_unicyclic(const Graph& g);

/// Vertices of the unique cycle of a unicyclic graph, in cyclic order.
/// Throws std::invalid_argument when g is not unicyclic.
std::vector<Vertex> unicyclic_cycle(const Graph& g);

/// Part sizes (ascending) when g is K_{n1,...,ns} with s >= 2, otherwise
/// nullopt. g is complete multipartite iff non-adjacency is an equivalence
/// relation, i.e. the complement is a disjoint union of cliques.
/// Throws std::invalid_argument on a disconnected graph.
std::optional<std::vector<int>> is_complete_multipartite(const Graph& g);

}  // namespace skewzf
