#pragma once

// Slow, obviously-correct reference implementations for cross-checking.

#include <cstdint>
#include <random>
#include <vector>

#include "skewzf/graph.hpp"
#include "skewzf/skewrank.hpp"
#include "skewzf/vertex_set.hpp"

namespace oracle {

using skewzf::Graph;
using skewzf::VertexSet;

/// Largest set of disjoint edges, by recursion over the edge list.
int max_matching_size(const Graph& g);

/// Rank as the order of the largest nonzero minor; determinants by the
/// Leibniz formula. Only for n <= 6.
int leibniz_rank(const skewzf::SkewMatrixGF& a);

/// Closure firing eligible forcers in a random order each round.
VertexSet random_order_closure(const Graph& g, VertexSet black, std::mt19937_64& rng);

/// Smallest forcing set by checking every subset of V.
int zminus_all_subsets(const Graph& g);

/// Number of matchings of g with the same saturated set as m (m included).
int matchings_on_saturated_set(const Graph& g, VertexSet saturated);

/// Number of isomorphism classes among all labeled graphs of order n
/// (connected only if requested), via the minimum code over all relabelings.
int count_isomorphism_classes(int n, bool connected_only);

/// True iff some relabeling maps a onto b.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace oracle
