#include "skewzf/matching.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace skewzf {

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  std::vector<Vertex> ends;
  for (const Edge& e : edges_) {
    ends.push_back(e.u);
    ends.push_back(e.v);
  }
  std::sort(ends.begin(), ends.end());
  if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) {
    throw std::invalid_argument("matching edges share an endpoint");
  }
}

bool Matching::contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

VertexSet Matching::saturated() const {
  VertexSet s;
  for (const Edge& e : edges_) {
    s.insert(e.u);
    s.insert(e.v);
  }
  return s;
}

std::string to_string(const Matching& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.edges().size(); ++i) {
    if (i) out += ',';
    out += "{" + std::to_string(m.edges()[i].u) + "," + std::to_string(m.edges()[i].v) + "}";
  }
  return out + "}";
}

void validate_matching(const Graph& g, const Matching& m) {
  for (const Edge& e : m.edges()) {
    if (!g.has_edge(e)) {
      throw std::invalid_argument("matching edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} is not an edge of the graph");
    }
  }
}

namespace {

// Edmonds' blossom algorithm, BFS variant with explicit base/blossom arrays.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(static_cast<std::size_t>(g.order())), mate_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  Matching run() {
    // Greedy start, then augment from every exposed vertex.
    for (const Edge& e : g_.edges()) {
      if (mate_[idx(e.u)] < 0 && mate_[idx(e.v)] < 0) {
        mate_[idx(e.u)] = e.v;
        mate_[idx(e.v)] = e.u;
      }
    }
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (mate_[idx(v)] >= 0) continue;
      Vertex u = find_augmenting_path(v);
      while (u >= 0) {
        const Vertex pv = parent_[idx(u)];
        const Vertex ppv = mate_[idx(pv)];
        mate_[idx(u)] = pv;
        mate_[idx(pv)] = u;
        u = ppv;
      }
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (mate_[idx(v)] > v) edges.emplace_back(v, mate_[idx(v)]);
    }
    return Matching(std::move(edges));
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  Vertex lowest_common_ancestor(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[idx(a)];
      seen[idx(a)] = 1;
      if (mate_[idx(a)] < 0) break;
      a = parent_[idx(mate_[idx(a)])];
    }
    while (true) {
      b = base_[idx(b)];
      if (seen[idx(b)]) return b;
      b = parent_[idx(mate_[idx(b)])];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[idx(v)] != b) {
      in_blossom_[idx(base_[idx(v)])] = 1;
      in_blossom_[idx(base_[idx(mate_[idx(v)])])] = 1;
      parent_[idx(v)] = child;
      child = mate_[idx(v)];
      v = parent_[idx(mate_[idx(v)])];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<Vertex>(i);
    used_[idx(root)] = 1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[idx(v)] == base_[idx(to)] || mate_[idx(v)] == to) continue;
        if (to == root || (mate_[idx(to)] >= 0 && parent_[idx(mate_[idx(to)])] >= 0)) {
          const Vertex cur_base = lowest_common_ancestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[idx(base_[i])]) {
              base_[i] = cur_base;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(static_cast<Vertex>(i));
              }
            }
          }
        } else if (parent_[idx(to)] < 0) {
          parent_[idx(to)] = v;
          if (mate_[idx(to)] < 0) return to;
          const Vertex next = mate_[idx(to)];
          used_[idx(next)] = 1;
          queue.push_back(next);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

std::vector<Vertex> mates(const Graph& g, const Matching& m) {
  std::vector<Vertex> mate(static_cast<std::size_t>(g.order()), -1);
  for (const Edge& e : m.edges()) {
    mate[static_cast<std::size_t>(e.u)] = e.v;
    mate[static_cast<std::size_t>(e.v)] = e.u;
  }
  return mate;
}

// Searches for an alternating cycle through matched edge {start, mate(start)}
// that leaves `start` along its matching edge and returns to it along a
// non-matching edge.
bool alternating_cycle_from(const Graph& g, const std::vector<Vertex>& mate, Vertex start,
                            std::vector<char>& on_path, Vertex cur) {
  for (Vertex w : g.neighbors(cur)) {
    if (w == mate[static_cast<std::size_t>(cur)]) continue;
    if (w == start) return true;
    const Vertex wm = mate[static_cast<std::size_t>(w)];
    if (wm < 0 || on_path[static_cast<std::size_t>(w)] || on_path[static_cast<std::size_t>(wm)]) continue;
    on_path[static_cast<std::size_t>(w)] = on_path[static_cast<std::size_t>(wm)] = 1;
    if (alternating_cycle_from(g, mate, start, on_path, wm)) return true;
    on_path[static_cast<std::size_t>(w)] = on_path[static_cast<std::size_t>(wm)] = 0;
  }
  return false;
}

// Recursion shared by the matching enumerators: resolve the lowest free
// vertex by leaving it exposed or matching it to a free neighbour.
class MatchingWalker {
 public:
  MatchingWalker(const Graph& g, std::function<bool(const std::vector<Edge>&, VertexSet)> prune,
                 std::function<void(const std::vector<Edge>&)> emit)
      : g_(g), prune_(std::move(prune)), emit_(std::move(emit)) {}

  void run() { step(g_.vertex_set()); }

 private:
  void step(VertexSet free) {
    if (prune_(current_, free)) return;
    if (free.empty()) {
      emit_(current_);
      return;
    }
    const Vertex v = free.first();
    VertexSet rest = free;
    rest.erase(v);
    for (Vertex u : g_.neighbor_set(v) & rest) {
      current_.emplace_back(v, u);
      VertexSet next = rest;
      next.erase(u);
      step(next);
      current_.pop_back();
    }
    step(rest);
  }

  const Graph& g_;
  std::function<bool(const std::vector<Edge>&, VertexSet)> prune_;
  std::function<void(const std::vector<Edge>&)> emit_;
  std::vector<Edge> current_;
};

std::uint64_t count_pm(const Graph& g, VertexSet remaining, std::unordered_map<std::uint64_t, std::uint64_t>& memo) {
  if (remaining.empty()) return 1;
  if (remaining.size() % 2 == 1) return 0;
  if (auto it = memo.find(remaining.bits()); it != memo.end()) return it->second;
  Vertex pick = -1;
  int best = 1 << 30;
  for (Vertex v : remaining) {
    const int d = (g.neighbor_set(v) & remaining).size();
    if (d < best) {
      best = d;
      pick = v;
    }
  }
  std::uint64_t total = 0;
  if (best > 0) {
    VertexSet rest = remaining;
    rest.erase(pick);
    for (Vertex u : g.neighbor_set(pick) & rest) {
      VertexSet next = rest;
      next.erase(u);
      total += count_pm(g, next, memo);
    }
  }
  memo.emplace(remaining.bits(), total);
  return total;
}

}  // namespace

Matching maximum_matching(const Graph& g) { return Blossom(g).run(); }

int matching_number(const Graph& g) { return maximum_matching(g).size(); }

bool has_alternating_cycle(const Graph& g, const Matching& m) {
  const auto mate = mates(g, m);
  std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : m.edges()) {
    // Each cycle is found from any of its matched edges, in either direction,
    // so seeding with one orientation per edge suffices.
    on_path[static_cast<std::size_t>(e.u)] = on_path[static_cast<std::size_t>(e.v)] = 1;
    const bool found = alternating_cycle_from(g, mate, e.u, on_path, e.v);
    on_path[static_cast<std::size_t>(e.u)] = on_path[static_cast<std::size_t>(e.v)] = 0;
    if (found) return true;
  }
  return false;
}

bool is_unique_on_saturated_set(const Graph& g, const Matching& m) {
  validate_matching(g, m);
  if (m.size() == 0) return true;
  const auto sub = induced_subgraph(g, m.saturated());
  return count_perfect_matchings(sub.graph) == 1;
}

bool is_uniquely_restricted(const Graph& g, const Matching& m) {
  validate_matching(g, m);
  return !has_alternating_cycle(g, m);
}

Matching maximum_ur_matching(const Graph& g) {
  require_bitset_order(g, "maximum_ur_matching");
  const int target = matching_number(g);
  std::vector<Edge> best;
  bool done = false;
  MatchingWalker walker(
      g,
      [&](const std::vector<Edge>& cur, VertexSet free) {
        if (done) return true;
        if (static_cast<int>(cur.size()) + free.size() / 2 <= static_cast<int>(best.size())) return true;
        return !cur.empty() && has_alternating_cycle(g, Matching(cur));
      },
      [&](const std::vector<Edge>& cur) {
        if (cur.size() > best.size()) {
          best = cur;
          if (static_cast<int>(best.size()) == target) done = true;
        }
      });
  walker.run();
  return Matching(best);
}

void for_each_matching(const Graph& g, const std::function<void(const Matching&)>& fn) {
  require_bitset_order(g, "for_each_matching");
  MatchingWalker walker(
      g, [](const std::vector<Edge>&, VertexSet) { return false; },
      [&](const std::vector<Edge>& cur) { fn(Matching(cur)); });
  walker.run();
}

std::vector<Matching> matchings_of_size(const Graph& g, int k) {
  require_bitset_order(g, "matchings_of_size");
  std::vector<Matching> out;
  MatchingWalker walker(
      g,
      [k](const std::vector<Edge>& cur, VertexSet free) {
        const int size = static_cast<int>(cur.size());
        return size > k || size + free.size() / 2 < k;
      },
      [&](const std::vector<Edge>& cur) {
        if (static_cast<int>(cur.size()) == k) out.emplace_back(cur);
      });
  walker.run();
  return out;
}

std::vector<Matching> all_maximum_matchings(const Graph& g) { return matchings_of_size(g, matching_number(g)); }

VertexSet saturated_set(const Graph& g, const Matching& m) {
  require_bitset_order(g, "saturated_set");
  validate_matching(g, m);
  return m.saturated();
}

VertexSet unsaturated_set(const Graph& g, const Matching& m) { return g.vertex_set() - saturated_set(g, m); }

std::uint64_t count_perfect_matchings(const Graph& g) {
  require_bitset_order(g, "count_perfect_matchings");
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  return count_pm(g, g.vertex_set(), memo);
}

bool has_unique_perfect_matching(const Graph& g) { return count_perfect_matchings(g) == 1; }

}  // namespace skewzf
