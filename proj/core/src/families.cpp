#include "skewzf/families.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace skewzf {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_params(const FamilySpec& spec, std::size_t count) {
  require(spec.params.size() == count,
          family_name(spec.family) + " expects " + std::to_string(count) + " parameter(s)");
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_multipartite: return "complete_multipartite";
    case Family::star: return "star";
    case Family::wheel: return "wheel";
    case Family::hypercube: return "hypercube";
    case Family::pineapple: return "pineapple";
    case Family::super_triangle: return "super_triangle";
    case Family::half_graph: return "half_graph";
    case Family::necklace: return "necklace";
  }
  return "unknown";
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::complete_multipartite:
      return complete_multipartite_graph(spec.params);
    case Family::pineapple:
      require_params(spec, 2);
      return pineapple_graph(spec.params[0], spec.params[1]);
    default:
      break;
  }
  require_params(spec, 1);
  const int x = spec.params[0];
  switch (spec.family) {
    case Family::path: return path_graph(x);
    case Family::cycle: return cycle_graph(x);
    case Family::complete: return complete_graph(x);
    case Family::star: return star_graph(x);
    case Family::wheel: return wheel_graph(x);
    case Family::hypercube: return hypercube_graph(x);
    case Family::super_triangle: return super_triangle_graph(x);
    case Family::half_graph: return half_graph(x);
    case Family::necklace: return necklace_graph(x);
    default: break;
  }
  throw std::invalid_argument("unhandled family");
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edge_list(n, edges);
}

Graph complete_multipartite_graph(const std::vector<int>& parts) {
  require(!parts.empty(), "complete multipartite graph needs at least one part");
  std::vector<int> owner;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    require(parts[p] >= 1, "complete multipartite part sizes must be >= 1");
    owner.insert(owner.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
  }
  const int n = static_cast<int>(owner.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (owner[static_cast<std::size_t>(i)] != owner[static_cast<std::size_t>(j)]) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph star_graph(int n) {
  require(n >= 2, "star needs n >= 2");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph::from_edge_list(n, edges);
}

Graph wheel_graph(int n) {
  require(n >= 4, "wheel needs n >= 4");
  const int rim = n - 1;
  std::vector<Edge> edges;
  for (int i = 0; i < rim; ++i) {
    edges.emplace_back(i, (i + 1) % rim);
    edges.emplace_back(i, rim);
  }
  return Graph::from_edge_list(n, edges);
}

Graph hypercube_graph(int s) {
  require(s >= 1 && s <= 16, "hypercube needs 1 <= s <= 16");
  const int n = 1 << s;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int b = 0; b < s; ++b) {
      const int w = v ^ (1 << b);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph pineapple_graph(int m, int k) {
  require(m >= 3 && k >= 1, "pineapple needs m >= 3 and k >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) edges.emplace_back(i, j);
  }
  for (int i = 0; i < k; ++i) edges.emplace_back(0, m + i);
  return Graph::from_edge_list(m + k, edges);
}

Graph super_triangle_graph(int rows) {
  require(rows >= 1, "super-triangle needs at least one row");
  auto id = [](int r, int c) { return r * (r + 1) / 2 + c; };
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c <= r; ++c) {
      if (c < r) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) {
        edges.emplace_back(id(r, c), id(r + 1, c));
        edges.emplace_back(id(r, c), id(r + 1, c + 1));
      }
    }
  }
  return Graph::from_edge_list(rows * (rows + 1) / 2, edges);
}

Graph half_graph(int s) {
  require(s >= 1, "half-graph needs s >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < s; ++i) {
    for (int j = i; j < s; ++j) edges.emplace_back(i, s + j);
  }
  return Graph::from_edge_list(2 * s, edges);
}

Graph necklace_graph(int s) {
  require(s >= 2, "necklace needs at least two diamonds");
  std::vector<Edge> edges;
  for (int i = 0; i < s; ++i) {
    const int a = 4 * i;
    edges.emplace_back(a, a + 1);
    edges.emplace_back(a, a + 2);
    edges.emplace_back(a + 1, a + 2);
    edges.emplace_back(a + 1, a + 3);
    edges.emplace_back(a + 2, a + 3);
    edges.emplace_back(a + 3, (4 * (i + 1)) % (4 * s));
  }
  return Graph::from_edge_list(4 * s, edges);
}

Graph k3_times_k3() { return tensor_product(complete_graph(3), complete_graph(3)); }

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

Graph random_tree(int n, std::mt19937_64& rng) {
  require(n >= 1, "random_tree needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i))), i);
  }
  return Graph::from_edge_list(n, edges);
}

Graph random_unicyclic(int n, std::mt19937_64& rng) {
  require(n >= 3, "random_unicyclic needs n >= 3");
  const Graph tree = random_tree(n, rng);
  std::vector<Edge> non_edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!tree.adjacent(a, b)) non_edges.emplace_back(a, b);
    }
  }
  std::vector<Edge> edges(tree.edges());
  edges.push_back(non_edges[uniform_below(rng, non_edges.size())]);
  return Graph::from_edge_list(n, edges);
}

}  // namespace skewzf
