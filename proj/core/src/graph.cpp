#include "skewzf/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace skewzf {

namespace {

void check_vertex(const Graph& g, Vertex v, const char* what) {
  if (v < 0 || v >= g.order()) {
    throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) +
                            " out of range for order " + std::to_string(g.order()));
  }
}

}  // namespace

Graph::Graph(int order) : Graph(order, {}) {}

Graph::Graph(int order, std::vector<Edge> sorted_unique_edges)
    : order_(order), edges_(std::move(sorted_unique_edges)) {
  if (order < 1) throw std::invalid_argument("graph order must be at least 1");
  adjacency_.resize(static_cast<std::size_t>(order));
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  if (fits_bitset()) {
    masks_.resize(static_cast<std::size_t>(order));
    for (const Edge& e : edges_) {
      masks_[static_cast<std::size_t>(e.u)].insert(e.v);
      masks_[static_cast<std::size_t>(e.v)].insert(e.u);
    }
  }
}

Graph Graph::from_edge_list(int order, std::span<const Edge> edges) {
  if (order < 1) throw std::invalid_argument("graph order must be at least 1");
  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= order) {
      throw std::out_of_range("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              "} has an endpoint outside [0," + std::to_string(order) + ")");
    }
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    sorted.push_back(e);
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return Graph(order, std::move(sorted));
}

Graph Graph::from_edge_list(int order, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) list.emplace_back(a, b);
  return from_edge_list(order, list);
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= order_ || b >= order_) return false;
  const auto& list = adjacency_[static_cast<std::size_t>(a)];
  return std::binary_search(list.begin(), list.end(), b);
}

void require_bitset_order(const Graph& g, const char* what) {
  if (!g.fits_bitset()) {
    throw std::invalid_argument(std::string(what) + " supports graphs of order at most " +
                                std::to_string(kMaxBitsetOrder));
  }
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  if (subset.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  std::vector<Vertex> kept(subset.begin(), subset.end());
  for (Vertex v : kept) check_vertex(g, v, "induced_subgraph");
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  std::vector<std::optional<Vertex>> relabel(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < kept.size(); ++i) relabel[static_cast<std::size_t>(kept[i])] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const auto a = relabel[static_cast<std::size_t>(e.u)];
    const auto b = relabel[static_cast<std::size_t>(e.v)];
    if (a && b) edges.emplace_back(*a, *b);
  }
  return {Graph::from_edge_list(static_cast<int>(kept.size()), edges), std::move(kept), std::move(relabel)};
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet subset) {
  const auto list = subset.to_vector();
  return induced_subgraph(g, std::span<const Vertex>(list));
}

InducedSubgraph delete_vertex(const Graph& g, Vertex v) {
  check_vertex(g, v, "delete_vertex");
  std::vector<Vertex> rest;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w != v) rest.push_back(w);
  }
  return induced_subgraph(g, std::span<const Vertex>(rest));
}

Graph vertex_sum(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  check_vertex(g1, v1, "vertex_sum");
  check_vertex(g2, v2, "vertex_sum");
  const int n1 = g1.order();
  std::vector<Vertex> map2(static_cast<std::size_t>(g2.order()));
  int next = n1;
  for (Vertex w = 0; w < g2.order(); ++w) {
    map2[static_cast<std::size_t>(w)] = (w == v2) ? v1 : next++;
  }
  std::vector<Edge> edges(g1.edges());
  for (const Edge& e : g2.edges()) {
    edges.emplace_back(map2[static_cast<std::size_t>(e.u)], map2[static_cast<std::size_t>(e.v)]);
  }
  return Graph::from_edge_list(next, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<Edge> edges(g1.edges());
  for (const Edge& e : g2.edges()) edges.emplace_back(e.u + g1.order(), e.v + g1.order());
  return Graph::from_edge_list(g1.order() + g2.order(), edges);
}

Graph corona(const Graph& g, const Graph& h) {
  const int n = g.order();
  const int m = h.order();
  std::vector<Edge> edges(g.edges());
  for (Vertex v = 0; v < n; ++v) {
    const int offset = n + v * m;
    for (Vertex x = 0; x < m; ++x) edges.emplace_back(v, offset + x);
    for (const Edge& e : h.edges()) edges.emplace_back(offset + e.u, offset + e.v);
  }
  return Graph::from_edge_list(n + n * m, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int m = h.order();
  std::vector<Edge> edges;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (const Edge& e : h.edges()) edges.emplace_back(a * m + e.u, a * m + e.v);
  }
  for (const Edge& e : g.edges()) {
    for (Vertex x = 0; x < m; ++x) edges.emplace_back(e.u * m + x, e.v * m + x);
  }
  return Graph::from_edge_list(g.order() * m, edges);
}

Graph tensor_product(const Graph& g, const Graph& h) {
  const int m = h.order();
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    for (const Edge& f : h.edges()) {
      edges.emplace_back(e.u * m + f.u, e.v * m + f.v);
      edges.emplace_back(e.u * m + f.v, e.v * m + f.u);
    }
  }
  return Graph::from_edge_list(g.order() * m, edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = a + 1; b < g.order(); ++b) {
      if (!g.adjacent(a, b)) edges.emplace_back(a, b);
    }
  }
  return Graph::from_edge_list(g.order(), edges);
}

}  // namespace skewzf
