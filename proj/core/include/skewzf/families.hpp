#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "skewzf/graph.hpp"

namespace skewzf {

enum class Family {
  path,
  cycle,
  complete,
  complete_multipartite,
  star,
  wheel,
  hypercube,
  pineapple,
  super_triangle,
  half_graph,
  necklace,
};

/// A named graph family plus its integer parameters.
///
/// Parameter conventions:
///   path(n), cycle(n >= 3), complete(n), star(n >= 2, so K_{1,n-1}),
///   wheel(n >= 4, so C_{n-1} plus hub), hypercube(s >= 1),
///   complete_multipartite(n1, ..., ns; s >= 1, ni >= 1),
///   pineapple(m >= 3, k >= 1), super_triangle(rows >= 1),
///   half_graph(s >= 1), necklace(s >= 2 diamonds).
struct FamilySpec {
  Family family;
  std::vector<int> params;
};

/// Throws std::invalid_argument when the parameters are invalid for the family.
Graph generate(const FamilySpec& spec);

std::string family_name(Family f);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_multipartite_graph(const std::vector<int>& parts);
Graph star_graph(int n);
/// Hub is vertex n-1; rim is the cycle 0..n-2.
Graph wheel_graph(int n);
/// Vertices are bit strings of length s; adjacent iff they differ in one bit.
Graph hypercube_graph(int s);
/// K_m on 0..m-1 plus k pendant vertices m..m+k-1 all attached to vertex 0.
Graph pineapple_graph(int m, int k);
/// Triangular grid with `rows` rows; row r (0-based) has r+1 vertices.
/// (r,c) ~ (r,c+1), (r,c) ~ (r+1,c), (r,c) ~ (r+1,c+1).
Graph super_triangle_graph(int rows);
/// u_i = i, v_j = s + j (0-based); u_i ~ v_j iff i <= j.
Graph half_graph(int s);
/// s diamonds in a ring. Diamond i uses 4i..4i+3 with spine {4i+1, 4i+2}
/// and tips 4i, 4i+3; tip 4i+3 is joined to tip 4(i+1) mod 4s.
Graph necklace_graph(int s);

/// The 9-vertex direct product K3 x K3: (i,j) labelled 3i+j, (i,j)~(k,l)
/// iff i != k and j != l. With 1-based labels 3i+j+1 the blocks of rows
/// {1,2,3}, {4,5,6}, {7,8,9} are the three independent classes.
Graph k3_times_k3();

/// Uniformly random parent array tree: vertex i >= 1 attaches to a uniform
/// vertex in [0, i). Requires n >= 1.
Graph random_tree(int n, std::mt19937_64& rng);

/// random_tree(n) plus one uniformly chosen non-edge. Requires n >= 3.
Graph random_unicyclic(int n, std::mt19937_64& rng);

/// Uniform integer in [0, bound) drawn by rejection, so sequences are identical
/// across standard library implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace skewzf
