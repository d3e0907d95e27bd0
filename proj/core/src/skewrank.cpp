#include "skewzf/skewrank.hpp"

#include <limits>
#include <random>

#include "skewzf/families.hpp"
#include "skewzf/forcing.hpp"
#include "skewzf/matching.hpp"
#include "skewzf/properties.hpp"

namespace skewzf {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

std::uint32_t negate(std::uint32_t x, std::uint32_t p) { return x == 0 ? 0 : p - x; }

// Rank of a dense row-major n x n matrix over GF(p); destroys `m`.
int eliminate(std::vector<std::uint64_t>& m, int n, std::uint64_t p) {
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r) {
      if (m[static_cast<std::size_t>(r * n + col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = 0; c < n; ++c) std::swap(m[static_cast<std::size_t>(pivot * n + c)], m[static_cast<std::size_t>(rank * n + c)]);
    }
    const std::uint64_t inv = pow_mod(m[static_cast<std::size_t>(rank * n + col)], p - 2, p);
    for (int r = rank + 1; r < n; ++r) {
      const std::uint64_t x = m[static_cast<std::size_t>(r * n + col)];
      if (x == 0) continue;
      const std::uint64_t factor = x * inv % p;
      for (int c = col; c < n; ++c) {
        const std::uint64_t sub = factor * m[static_cast<std::size_t>(rank * n + c)] % p;
        auto& cell = m[static_cast<std::size_t>(r * n + c)];
        cell = (cell + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

// Edges of a BFS spanning forest, as indices into g.edges().
std::vector<char> spanning_forest_mask(const Graph& g) {
  std::vector<char> in_forest(g.edges().size(), 0);
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    seen[static_cast<std::size_t>(s)] = 1;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
        const auto it = std::lower_bound(g.edges().begin(), g.edges().end(), Edge(u, w));
        in_forest[static_cast<std::size_t>(it - g.edges().begin())] = 1;
      }
    }
  }
  return in_forest;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  constexpr std::uint64_t cap = std::uint64_t{1} << 63;
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (result > cap / base) return cap;
    result *= base;
  }
  return result;
}

}  // namespace

Prime::Prime(std::uint32_t p) : p_(p) {
  if (p == 2) throw std::invalid_argument("p = 2 is not allowed: skew-symmetric and symmetric coincide");
  if (p >= (1U << 31) || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime below 2^31");
}

SkewMatrixGF SkewMatrixGF::from_edge_values(const Graph& g, Prime p, std::span<const std::uint32_t> upper) {
  if (upper.size() != g.edges().size()) {
    throw std::invalid_argument("expected one value per edge (" + std::to_string(g.edges().size()) + "), got " +
                                std::to_string(upper.size()));
  }
  const int n = g.order();
  std::vector<std::uint32_t> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < upper.size(); ++i) {
    const std::uint32_t x = upper[i];
    if (x == 0 || x >= p.value()) throw std::invalid_argument("edge value must lie in [1, p-1]");
    const Edge& e = g.edges()[i];
    a[static_cast<std::size_t>(e.u * n + e.v)] = x;
    a[static_cast<std::size_t>(e.v * n + e.u)] = negate(x, p.value());
  }
  return SkewMatrixGF(p, n, std::move(a));
}

SkewMatrixGF SkewMatrixGF::from_entries(Prime p, int n, std::vector<std::uint32_t> entries) {
  if (n < 0 || entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("from_entries: expected n*n entries");
  }
  for (auto& x : entries) x %= p.value();
  return SkewMatrixGF(p, n, std::move(entries));
}

bool SkewMatrixGF::is_skew_symmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      if (at(i, j) != negate(at(j, i), p_.value())) return false;
    }
  }
  return true;
}

bool SkewMatrixGF::belongs_to(const Graph& g) const {
  if (g.order() != n_ || !is_skew_symmetric()) return false;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if ((at(i, j) != 0) != g.adjacent(i, j)) return false;
    }
  }
  return true;
}

SkewMatrixGF SkewMatrixGF::diagonal_congruence(std::span<const std::uint32_t> d) const {
  if (d.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("diagonal_congruence: size mismatch");
  const std::uint64_t p = p_.value();
  std::vector<std::uint32_t> out(a_.size());
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const std::uint64_t x = (d[static_cast<std::size_t>(i)] % p) * at(i, j) % p * (d[static_cast<std::size_t>(j)] % p) % p;
      out[static_cast<std::size_t>(i * n_ + j)] = static_cast<std::uint32_t>(x);
    }
  }
  return SkewMatrixGF(p_, n_, std::move(out));
}

int rank_gfp(const SkewMatrixGF& a) {
  std::vector<std::uint64_t> m(a.entries().begin(), a.entries().end());
  return eliminate(m, a.dimension(), a.prime().value());
}

SkewMatrixGF random_skew_matrix(const Graph& g, Prime p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> values(g.edges().size());
  for (auto& x : values) x = 1 + static_cast<std::uint32_t>(uniform_below(rng, p.value() - 1));
  return SkewMatrixGF::from_edge_values(g, p, values);
}

int max_skew_rank_sampled(const Graph& g, Prime p, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("max_skew_rank_sampled: trials must be >= 1");
  std::mt19937_64 seeds(seed);
  int best = 0;
  for (int t = 0; t < trials; ++t) best = std::max(best, rank_gfp(random_skew_matrix(g, p, seeds())));
  return best;
}

std::uint64_t exhaustive_cost(const Graph& g, Prime p, bool normalize_spanning_forest) {
  std::size_t free_edges = g.edges().size();
  if (normalize_spanning_forest) {
    const auto mask = spanning_forest_mask(g);
    free_edges -= static_cast<std::size_t>(std::count(mask.begin(), mask.end(), 1));
  }
  return saturating_pow(p.value() - 1, free_edges);
}

MinRankSearch min_skew_rank_search(const Graph& g, Prime p, const ExhaustiveOptions& options) {
  const std::uint64_t cost = exhaustive_cost(g, p, options.normalize_spanning_forest);
  if (cost > options.budget) {
    throw BudgetExceeded("exhaustive min-rank search needs " + std::to_string(cost) + " matrices over GF(" +
                         std::to_string(p.value()) + "), budget is " + std::to_string(options.budget));
  }
  const std::size_t m = g.edges().size();
  std::vector<char> fixed = options.normalize_spanning_forest ? spanning_forest_mask(g) : std::vector<char>(m, 0);
  std::vector<std::size_t> free_index;
  for (std::size_t i = 0; i < m; ++i) {
    if (!fixed[i]) free_index.push_back(i);
  }

  std::vector<std::uint32_t> values(m, 1);
  const int floor_rank = m == 0 ? 0 : 2;
  const std::uint32_t top = p.value() - 1;
  std::optional<SkewMatrixGF> witness;
  int best = std::numeric_limits<int>::max();
  std::uint64_t visited = 0;
  while (true) {
    auto a = SkewMatrixGF::from_edge_values(g, p, values);
    ++visited;
    const int r = rank_gfp(a);
    if (r < best) {
      best = r;
      witness = std::move(a);
      if (best == floor_rank || (options.stop_at && best <= *options.stop_at)) break;
    }
    // Odometer over the free edge values.
    std::size_t k = 0;
    while (k < free_index.size() && values[free_index[k]] == top) values[free_index[k++]] = 1;
    if (k == free_index.size()) break;
    ++values[free_index[k]];
  }
  return {best, visited, std::move(*witness)};
}

int min_skew_rank_exhaustive(const Graph& g, Prime p, const ExhaustiveOptions& options) {
  return min_skew_rank_search(g, p, options).min_rank;
}

std::string to_string(RankFormula f) {
  switch (f) {
    case RankFormula::complete_multipartite: return "complete multipartite";
    case RankFormula::tree: return "tree";
    case RankFormula::unicyclic_odd_cycle: return "unicyclic, odd cycle";
    case RankFormula::unicyclic_even_cycle_ur: return "unicyclic, even cycle, uniquely restricted maximum matching";
    case RankFormula::unicyclic_even_cycle_no_ur: return "unicyclic, even cycle, no uniquely restricted maximum matching";
  }
  return "unknown";
}

std::optional<MrFormula> mr_formula(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  const int match = matching_number(g);
  if (is_tree(g)) return MrFormula{2 * match, RankFormula::tree, match};
  if (is_unicyclic(g)) {
    if (unicyclic_cycle(g).size() % 2 == 1) return MrFormula{2 * match, RankFormula::unicyclic_odd_cycle, match};
    if (maximum_ur_matching(g).size() == match) {
      return MrFormula{2 * match, RankFormula::unicyclic_even_cycle_ur, match};
    }
    return MrFormula{2 * match - 2, RankFormula::unicyclic_even_cycle_no_ur, match};
  }
  if (g.order() >= 2 && is_complete_multipartite(g)) {
    return MrFormula{2, RankFormula::complete_multipartite, match};
  }
  return std::nullopt;
}

RankBounds rank_bounds(const Graph& g) {
  RankBounds b;
  b.lower = g.order() - zminus(g).value;
  b.upper = 2 * matching_number(g);
  return b;
}

RankBounds rank_bounds(const Graph& g, Prime p) {
  RankBounds b = rank_bounds(g);
  b.prime = p.value();
  const ExhaustiveOptions options;
  if (exhaustive_cost(g, p, options.normalize_spanning_forest) <= options.budget) {
    b.exact_gfp = min_skew_rank_exhaustive(g, p, options);
  }
  return b;
}

}  // namespace skewzf
