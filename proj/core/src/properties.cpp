#include "skewzf/properties.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace skewzf {

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

std::vector<Vertex> cut_vertices(const Graph& g) {
  // Hopcroft-Tarjan low-link over each DFS tree.
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
  int timer = 0;

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(u)) {
      if (w == parent) continue;
      if (disc[static_cast<std::size_t>(w)] >= 0) {
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
        continue;
      }
      ++children;
      dfs(w, u);
      low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(w)]);
      if (parent >= 0 && low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(u)]) {
        is_cut[static_cast<std::size_t>(u)] = 1;
      }
    }
    if (parent < 0 && children > 1) is_cut[static_cast<std::size_t>(u)] = 1;
  };

  for (Vertex s = 0; s < n; ++s) {
    if (disc[static_cast<std::size_t>(s)] < 0) dfs(s, -1);
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s{g.degree(0), g.degree(0)};
  for (Vertex v = 1; v < g.order(); ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }
  return s;
}

std::vector<Vertex> isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) out.push_back(v);
  }
  return out;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        auto& sw = side[static_cast<std::size_t>(w)];
        if (sw < 0) {
          sw = 1 - side[static_cast<std::size_t>(u)];
          queue.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

bool is_unicyclic(const Graph& g) { return g.size() == g.order() && is_connected(g); }

std::vector<Vertex> unicyclic_cycle(const Graph& g) {
  if (!is_unicyclic(g)) throw std::invalid_argument("unicyclic_cycle: graph is not unicyclic");
  // Strip leaves until only the cycle remains.
  std::vector<int> deg(static_cast<std::size_t>(g.order()));
  std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < g.order(); ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (deg[static_cast<std::size_t>(v)] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const Vertex v = leaves.back();
    leaves.pop_back();
    removed[static_cast<std::size_t>(v)] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (!removed[static_cast<std::size_t>(w)] && --deg[static_cast<std::size_t>(w)] == 1) leaves.push_back(w);
    }
  }
  Vertex start = 0;
  while (removed[static_cast<std::size_t>(start)]) ++start;
  std::vector<Vertex> cycle{start};
  Vertex prev = -1;
  Vertex cur = start;
  while (true) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (!removed[static_cast<std::size_t>(w)] && w != prev) {
        next = w;
        break;
      }
    }
    if (next == start || next < 0) break;
    cycle.push_back(next);
    prev = cur;
    cur = next;
  }
  return cycle;
}

std::optional<std::vector<int>> is_complete_multipartite(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("is_complete_multipartite: graph is disconnected");
  const int n = g.order();
  std::vector<int> part(static_cast<std::size_t>(n), -1);
  std::vector<int> sizes;
  for (Vertex v = 0; v < n; ++v) {
    if (part[static_cast<std::size_t>(v)] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    for (Vertex w = v; w < n; ++w) {
      if (w == v || !g.adjacent(v, w)) {
        if (part[static_cast<std::size_t>(w)] >= 0) return std::nullopt;
        part[static_cast<std::size_t>(w)] = id;
        ++sizes.back();
      }
    }
  }
  // Every pair must be adjacent exactly when the parts differ.
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const bool same = part[static_cast<std::size_t>(a)] == part[static_cast<std::size_t>(b)];
      if (same == g.adjacent(a, b)) return std::nullopt;
    }
  }
  if (sizes.size() < 2) return std::nullopt;
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace skewzf
