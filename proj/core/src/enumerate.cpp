#include "skewzf/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "skewzf/properties.hpp"

namespace skewzf {

namespace {

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// Position of pair (i, j), i < j, in column order.
constexpr int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.order()), bits_(pair_count(g.order())) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(v)) adj_[static_cast<std::size_t>(v)] |= 1U << w;
    }
  }

  CanonicalForm run() {
    if (n_ == 1) return {0, Graph(1)};
    search(0, 0, 0);
    std::vector<Edge> edges;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i) {
        if (bit(best_, pair_index(i, j))) edges.emplace_back(i, j);
      }
    }
    return {best_, Graph::from_edge_list(n_, edges)};
  }

 private:
  bool bit(std::uint64_t code, int index) const { return (code >> (bits_ - 1 - index)) & 1U; }

  // Column value of `v` placed at position `k`: bits x(0,k) .. x(k-1,k), x(0,k) most significant.
  std::uint64_t column(Vertex v, int k) const {
    std::uint64_t col = 0;
    for (int i = 0; i < k; ++i) col = (col << 1) | ((adj_[static_cast<std::size_t>(v)] >> perm_[static_cast<std::size_t>(i)]) & 1U);
    return col;
  }

  void search(int k, std::uint64_t prefix, std::uint32_t used) {
    if (k == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        have_best_ = true;
      }
      return;
    }
    // Only candidates with the minimal next column can lead to the minimal string.
    std::uint64_t min_col = ~std::uint64_t{0};
    for (Vertex v = 0; v < n_; ++v) {
      if (!(used >> v & 1U)) min_col = std::min(min_col, column(v, k));
    }
    const std::uint64_t next = (prefix << k) | min_col;
    if (have_best_) {
      const int len = pair_count(k + 1);
      const std::uint64_t best_prefix = best_ >> (bits_ - len);
      if (next > best_prefix) return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if ((used >> v & 1U) || column(v, k) != min_col) continue;
      perm_[static_cast<std::size_t>(k)] = v;
      search(k + 1, next, used | (1U << v));
    }
  }

  int n_;
  int bits_;
  std::array<std::uint32_t, kMaxCanonicalOrder> adj_{};
  std::array<Vertex, kMaxCanonicalOrder> perm_{};
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

void check_order(int n, int max, const char* what) {
  if (n < 1 || n > max) {
    throw std::out_of_range(std::string(what) + ": order must be in [1," + std::to_string(max) + "]");
  }
}

// Extends each base graph by one new vertex n-1 whose neighbourhood is every
// subset accepted by `accept`, keeping one representative per class.
template <class Accept>
std::vector<Graph> extend_by_vertex(const std::vector<Graph>& bases, Accept&& accept) {
  std::map<std::uint64_t, Graph> seen;
  for (const Graph& base : bases) {
    const int m = base.order();
    for (std::uint32_t subset = 0; subset < (1U << m); ++subset) {
      if (!accept(base, subset)) continue;
      std::vector<Edge> edges(base.edges());
      for (int w = 0; w < m; ++w) {
        if (subset >> w & 1U) edges.emplace_back(w, m);
      }
      auto canon = canonical_form(Graph::from_edge_list(m + 1, edges));
      seen.try_emplace(canon.code, std::move(canon.graph));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [code, g] : seen) out.push_back(std::move(g));
  return out;
}

std::string tree_code(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v)) {
    if (w != parent) kids.push_back(tree_code(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (auto& k : kids) out += k;
  out += ')';
  return out;
}

std::vector<Vertex> tree_centers(const Graph& t) {
  const int n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all;
    for (Vertex v = 0; v < n; ++v) all.push_back(v);
    return all;
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = t.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : t.neighbors(v)) {
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  return layer;
}

std::string tree_canonical_string(const Graph& t) {
  std::string best;
  for (Vertex c : tree_centers(t)) {
    auto code = tree_code(t, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw std::out_of_range("canonical_form: order " + std::to_string(g.order()) + " exceeds " +
                            std::to_string(kMaxCanonicalOrder));
  }
  return CanonicalSearch(g).run();
}

std::uint64_t adjacency_code(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) throw std::out_of_range("adjacency_code: order too large");
  const int bits = pair_count(g.order());
  std::uint64_t code = 0;
  for (const Edge& e : g.edges()) code |= std::uint64_t{1} << (bits - 1 - pair_index(e.u, e.v));
  return code;
}

Graph graph_from_code(int order, std::uint64_t code) {
  if (order < 1 || order > kMaxCanonicalOrder) throw std::out_of_range("graph_from_code: bad order");
  const int bits = pair_count(order);
  std::vector<Edge> edges;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((code >> (bits - 1 - pair_index(i, j))) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(order, edges);
}

std::vector<Graph> enumerate_graphs(int n) {
  check_order(n, 7, "enumerate_graphs");
  if (n == 1) return {Graph(1)};
  return extend_by_vertex(enumerate_graphs(n - 1), [](const Graph&, std::uint32_t) { return true; });
}

std::vector<Graph> enumerate_connected(int n) {
  check_order(n, 7, "enumerate_connected");
  if (n == 1) return {Graph(1)};
  // Every connected graph has a non-cut vertex, so extending connected graphs
  // by a vertex with a nonempty neighbourhood reaches every class.
  return extend_by_vertex(enumerate_connected(n - 1),
                          [](const Graph&, std::uint32_t subset) { return subset != 0; });
}

std::vector<Graph> enumerate_connected_bipartite(int n) {
  check_order(n, 8, "enumerate_connected_bipartite");
  if (n == 1) return {Graph(1)};
  return extend_by_vertex(enumerate_connected_bipartite(n - 1), [](const Graph& base, std::uint32_t subset) {
    if (subset == 0) return false;
    // A connected bipartite graph has a unique bipartition; the new vertex may
    // only see one side.
    const auto sides = bipartition(base);
    std::uint32_t side0 = 0;
    for (Vertex v = 0; v < base.order(); ++v) {
      if ((*sides)[static_cast<std::size_t>(v)] == 0) side0 |= 1U << v;
    }
    const std::uint32_t all = (1U << base.order()) - 1;
    return (subset & ~side0) == 0 || (subset & side0 & all) == 0;
  });
}

std::vector<Graph> enumerate_trees(int n) {
  check_order(n, 16, "enumerate_trees");
  if (n == 1) return {Graph(1)};
  std::map<std::string, Graph> seen;
  for (const Graph& base : enumerate_trees(n - 1)) {
    for (Vertex v = 0; v < base.order(); ++v) {
      std::vector<Edge> edges(base.edges());
      edges.emplace_back(v, base.order());
      Graph t = Graph::from_edge_list(base.order() + 1, edges);
      seen.try_emplace(tree_canonical_string(t), std::move(t));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [key, t] : seen) out.push_back(std::move(t));
  return out;
}

}  // namespace skewzf
