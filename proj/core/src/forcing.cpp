#include "skewzf/forcing.hpp"

#include <stdexcept>

#include "skewzf/properties.hpp"

namespace skewzf {

namespace {

void check_set(const Graph& g, VertexSet z, const char* what) {
  require_bitset_order(g, what);
  if (!z.is_subset_of(g.vertex_set())) {
    throw std::out_of_range(std::string(what) + ": set " + to_string(z) + " has a vertex outside the graph");
  }
}

// Sweep-based fixpoint; assumes a validated graph and set.
VertexSet closure_unchecked(const Graph& g, VertexSet black) {
  const int n = g.order();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex u = 0; u < n; ++u) {
      const VertexSet white = g.neighbor_set(u) - black;
      if (white.size() == 1) {
        black |= white;
        changed = true;
      }
    }
  }
  return black;
}

struct SearchSpace {
  VertexSet base;     // isolated vertices
  VertexSet closed;   // closure of base
  VertexSet pool;     // candidates: V minus closed
};

SearchSpace search_space(const Graph& g) {
  require_bitset_order(g, "zminus");
  SearchSpace s;
  s.base = VertexSet::from(isolated_vertices(g));
  s.closed = closure_unchecked(g, s.base);
  s.pool = g.vertex_set() - s.closed;
  return s;
}

}  // namespace

ColorTrace skew_closure(const Graph& g, VertexSet z) {
  check_set(g, z, "skew_closure");
  ColorTrace trace{z, z, {}};
  const int n = g.order();
  for (Vertex u = 0; u < n;) {
    const VertexSet white = g.neighbor_set(u) - trace.black;
    if (white.size() == 1) {
      trace.forces.push_back({u, white.first()});
      trace.black |= white;
      u = 0;
    } else {
      ++u;
    }
  }
  return trace;
}

VertexSet skew_closure_set(const Graph& g, VertexSet z) {
  check_set(g, z, "skew_closure_set");
  return closure_unchecked(g, z);
}

bool is_skew_forcing_set(const Graph& g, VertexSet z) {
  return skew_closure_set(g, z) == g.vertex_set();
}

ZMinus zminus(const Graph& g) {
  const auto space = search_space(g);
  const VertexSet all = g.vertex_set();
  if (space.closed == all) return {space.base.size(), space.base};
  // Closure of S + base equals closure of S + closure(base).
  for (int k = 1; k <= space.pool.size(); ++k) {
    VertexSet found;
    const bool hit = for_each_k_subset(space.pool, k, [&](VertexSet s) {
      if (closure_unchecked(g, space.closed | s) == all) {
        found = s;
        return true;
      }
      return false;
    });
    if (hit) return {space.base.size() + k, space.base | found};
  }
  // Unreachable: the whole pool always forces.
  return {all.size(), all};
}

SetFamily all_minimum_szfs(const Graph& g) {
  const auto space = search_space(g);
  const int k = zminus(g).value - space.base.size();
  const VertexSet all = g.vertex_set();
  std::vector<VertexSet> members;
  for_each_k_subset(space.pool, k, [&](VertexSet s) {
    if (closure_unchecked(g, space.closed | s) == all) members.push_back(space.base | s);
    return false;
  });
  return SetFamily(all, std::move(members));
}

}  // namespace skewzf
