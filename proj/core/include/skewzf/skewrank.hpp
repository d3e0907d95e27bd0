#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewzf/graph.hpp"

namespace skewzf {

/// An odd prime modulus below 2^31.
class Prime {
 public:
  /// Throws std::invalid_argument for 2, composites, and values >= 2^31.
  explicit Prime(std::uint32_t p);
  std::uint32_t value() const { return p_; }
  bool operator==(const Prime&) const = default;

 private:
  std::uint32_t p_;
};

/// Skew-symmetric n x n matrix over GF(p) whose off-diagonal support is
/// exactly the edge set of a graph.
class SkewMatrixGF {
 public:
  /// `upper[i]` is the entry at (e.u, e.v) for e = g.edges()[i]; the (e.v, e.u)
  /// entry is its negative and every other entry is zero. Throws
  /// std::invalid_argument if the count is wrong or a value is not in [1, p-1].
  static SkewMatrixGF from_edge_values(const Graph& g, Prime p, std::span<const std::uint32_t> upper);

  /// Any square matrix over GF(p); entries are reduced mod p. The result may
  /// violate skew-symmetry; see is_skew_symmetric. Used by tests and oracles.
  static SkewMatrixGF from_entries(Prime p, int n, std::vector<std::uint32_t> entries);

  Prime prime() const { return p_; }
  int dimension() const { return n_; }
  std::uint32_t at(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const std::vector<std::uint32_t>& entries() const { return a_; }

  bool is_skew_symmetric() const;
  /// Skew-symmetric with off-diagonal support equal to E(g).
  bool belongs_to(const Graph& g) const;

  /// D A D for the diagonal matrix D = diag(d); entries are reduced mod p.
  SkewMatrixGF diagonal_congruence(std::span<const std::uint32_t> d) const;

  bool operator==(const SkewMatrixGF&) const = default;

 private:
  SkewMatrixGF(Prime p, int n, std::vector<std::uint32_t> a) : p_(p), n_(n), a_(std::move(a)) {}

  Prime p_;
  int n_;
  std::vector<std::uint32_t> a_;
};

/// Rank over GF(p) by Gaussian elimination.
int rank_gfp(const SkewMatrixGF& a);

/// Each edge value uniform in {1, ..., p-1}, driven by mt19937_64(seed).
SkewMatrixGF random_skew_matrix(const Graph& g, Prime p, std::uint64_t seed);

/// Largest rank over `trials` random matrices of S^-(GF(p), g). Compare with
/// 2 * matching_number(g). Throws std::invalid_argument if trials < 1.
int max_skew_rank_sampled(const Graph& g, Prime p, int trials, std::uint64_t seed);

/// Exhaustive search would visit more matrices than the budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExhaustiveOptions {
  /// Fix the entries on a spanning forest to 1. Every matrix of S^-(F, G) is
  /// diagonally congruent (D A D, D invertible) to one of these, and
  /// congruence preserves rank, so the minimum is unchanged.
  bool normalize_spanning_forest = true;
  /// Upper limit on the number of matrices visited.
  std::uint64_t budget = std::uint64_t{1} << 24;
  /// Stop once a matrix of rank <= this value is found. The reported rank is
  /// then only an upper bound on the minimum unless it equals the floor.
  std::optional<int> stop_at;
};

struct MinRankSearch {
  int min_rank;
  std::uint64_t matrices_visited;
  SkewMatrixGF witness;
};

/// Number of matrices the exhaustive search would visit, saturating at 2^63.
std::uint64_t exhaustive_cost(const Graph& g, Prime p, bool normalize_spanning_forest);

/// Exact minimum rank over S^-(GF(p), g) by enumeration. Stops early once
/// rank 2 (or 0 for an edgeless graph) is reached, since no nonzero
/// skew-symmetric matrix has smaller rank. Throws BudgetExceeded.
MinRankSearch min_skew_rank_search(const Graph& g, Prime p, const ExhaustiveOptions& options = {});
int min_skew_rank_exhaustive(const Graph& g, Prime p, const ExhaustiveOptions& options = {});

/// Graph classes with a closed-form minimum skew rank (field independent).
enum class RankFormula {
  complete_multipartite,       // 2
  tree,                        // 2 match
  unicyclic_odd_cycle,         // 2 match
  unicyclic_even_cycle_ur,     // 2 match: some maximum matching is uniquely restricted
  unicyclic_even_cycle_no_ur,  // 2 match - 2
};

struct MrFormula {
  int value = 0;
  RankFormula formula = RankFormula::tree;
  int matching_number = 0;
};

std::string to_string(RankFormula f);

/// Closed-form mr^- when g is connected and complete multipartite
/// (|G| >= 2), a tree, or unicyclic; nullopt otherwise.
std::optional<MrFormula> mr_formula(const Graph& g);

/// |G| - Z^-(G) <= mr^- <= MR^- = 2 match(G).
struct RankBounds {
  int lower = 0;
  int upper = 0;
  std::optional<int> exact_gfp;
  std::optional<std::uint32_t> prime;
};

RankBounds rank_bounds(const Graph& g);
/// Also fills exact_gfp when the exhaustive search fits the default budget.
RankBounds rank_bounds(const Graph& g, Prime p);

}  // namespace skewzf
