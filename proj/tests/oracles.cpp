#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "skewzf/properties.hpp"

namespace oracle {

namespace {

int matching_from(const std::vector<skewzf::Edge>& edges, std::size_t i, std::uint64_t used) {
  if (i == edges.size()) return 0;
  int best = matching_from(edges, i + 1, used);
  const auto& e = edges[i];
  const std::uint64_t mask = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
  if ((used & mask) == 0) best = std::max(best, 1 + matching_from(edges, i + 1, used | mask));
  return best;
}

std::int64_t det_mod(const std::vector<std::vector<std::int64_t>>& m, std::int64_t p) {
  const int k = static_cast<int>(m.size());
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    }
    std::int64_t term = 1;
    for (int i = 0; i < k; ++i) term = term * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] % p;
    total = (total + (inversions % 2 ? p - term : term)) % p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::uint64_t code_under(const Graph& g, const std::vector<int>& perm) {
  // Column-order upper triangle of the relabeled adjacency matrix.
  const int n = g.order();
  std::uint64_t code = 0;
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) code |= std::uint64_t{1} << bit;
    }
  }
  return code;
}

std::uint64_t min_code(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, code_under(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

int max_matching_size(const Graph& g) { return matching_from(g.edges(), 0, 0); }

int leibniz_rank(const skewzf::SkewMatrixGF& a) {
  const int n = a.dimension();
  const std::int64_t p = a.prime().value();
  for (int k = n; k >= 1; --k) {
    bool found = false;
    skewzf::for_each_k_subset(VertexSet::range(n), k, [&](VertexSet rows) {
      return skewzf::for_each_k_subset(VertexSet::range(n), k, [&](VertexSet cols) {
        std::vector<std::vector<std::int64_t>> m;
        for (int r : rows) {
          std::vector<std::int64_t> row;
          for (int c : cols) row.push_back(a.at(r, c));
          m.push_back(std::move(row));
        }
        found = det_mod(m, p) != 0;
        return found;
      });
    });
    if (found) return k;
  }
  return 0;
}

VertexSet random_order_closure(const Graph& g, VertexSet black, std::mt19937_64& rng) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    std::shuffle(order.begin(), order.end(), rng);
    for (int u : order) {
      std::vector<int> white;
      for (int w : g.neighbors(u)) {
        if (!black.contains(w)) white.push_back(w);
      }
      if (white.size() == 1) {
        black.insert(white.front());
        changed = true;
        break;
      }
    }
  }
  return black;
}

int zminus_all_subsets(const Graph& g) {
  const int n = g.order();
  int best = n;
  std::mt19937_64 rng(7);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const VertexSet s(mask);
    if (s.size() >= best) continue;
    if (random_order_closure(g, s, rng) == g.vertex_set()) best = s.size();
  }
  return best;
}

int matchings_on_saturated_set(const Graph& g, VertexSet saturated) {
  const auto& edges = g.edges();
  int count = 0;
  // Subsets of edges inside the saturated set; fine for tiny graphs.
  std::vector<skewzf::Edge> inside;
  for (const auto& e : edges) {
    if (saturated.contains(e.u) && saturated.contains(e.v)) inside.push_back(e);
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inside.size()); ++mask) {
    VertexSet covered;
    bool disjoint = true;
    for (std::size_t i = 0; i < inside.size() && disjoint; ++i) {
      if (!(mask >> i & 1U)) continue;
      const auto& e = inside[i];
      if (covered.contains(e.u) || covered.contains(e.v)) disjoint = false;
      covered.insert(e.u);
      covered.insert(e.v);
    }
    if (disjoint && covered == saturated) ++count;
  }
  return count;
}

int count_isomorphism_classes(int n, bool connected_only) {
  std::set<std::uint64_t> classes;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++bit) {
        if (code >> bit & 1U) edges.emplace_back(i, j);
      }
    }
    std::vector<skewzf::Edge> es;
    for (auto [u, v] : edges) es.emplace_back(u, v);
    const Graph g = Graph::from_edge_list(n, es);
    if (connected_only && !skewzf::is_connected(g)) continue;
    classes.insert(min_code(g));
  }
  return static_cast<int>(classes.size());
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && min_code(a) == min_code(b);
}

}  // namespace oracle
