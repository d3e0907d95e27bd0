#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "skewzf/enumerate.hpp"
#include "skewzf/families.hpp"
#include "skewzf/forcing.hpp"
#include "skewzf/matching.hpp"
#include "skewzf/properties.hpp"

using namespace skewzf;

TEST_CASE("matching basics") {
  CHECK_THROWS_AS(Matching({{0, 1}, {1, 2}}), std::invalid_argument);
  const Matching m({{2, 3}, {0, 1}});
  CHECK(to_string(m) == "{{0,1},{2,3}}");
  CHECK(m.saturated() == VertexSet{0, 1, 2, 3});
  CHECK_THROWS_AS(validate_matching(path_graph(3), Matching({{0, 2}})), std::invalid_argument);
  CHECK(unsaturated_set(path_graph(3), Matching({{0, 1}})) == VertexSet{2});
}

TEST_CASE("matching numbers") {
  CHECK(matching_number(path_graph(7)) == 3);
  CHECK(matching_number(cycle_graph(7)) == 3);
  CHECK(matching_number(complete_graph(6)) == 3);
  CHECK(matching_number(star_graph(5)) == 1);
  CHECK(matching_number(Graph(4)) == 0);
  CHECK(matching_number(corona(cycle_graph(5), complete_graph(1))) == 5);
}

TEST_CASE("blossom agrees with brute force") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const Matching m = maximum_matching(g);
      CHECK_NOTHROW(validate_matching(g, m));
      CHECK(m.size() == oracle::max_matching_size(g));
    }
  }
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const Graph t = random_unicyclic(12 + i % 5, rng);
    CHECK(matching_number(t) == oracle::max_matching_size(t));
  }
}

TEST_CASE("uniquely restricted examples") {
  const Graph c4 = cycle_graph(4);
  CHECK_FALSE(is_uniquely_restricted(c4, Matching({{0, 1}, {2, 3}})));
  CHECK(is_uniquely_restricted(c4, Matching({{0, 1}})));
  CHECK(maximum_ur_matching(c4).size() == 1);
  CHECK(maximum_ur_matching(path_graph(6)).size() == 3);
  CHECK(maximum_ur_matching(cycle_graph(6)).size() == 2);
}

TEST_CASE("both characterizations of uniquely restricted agree") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      for_each_matching(g, [&](const Matching& m) {
        const bool by_cycle = !has_alternating_cycle(g, m);
        CHECK(by_cycle == is_unique_on_saturated_set(g, m));
        CHECK(by_cycle == (oracle::matchings_on_saturated_set(g, m.saturated()) == 1));
      });
    }
  }
}

TEST_CASE("matching enumeration") {
  int total = 0;
  for_each_matching(cycle_graph(6), [&](const Matching&) { ++total; });
  CHECK(total == 1 + 6 + 9 + 2);
  CHECK(all_maximum_matchings(cycle_graph(6)).size() == 2);
  CHECK(matchings_of_size(path_graph(4), 1).size() == 3);
}

TEST_CASE("perfect matching counts") {
  CHECK(count_perfect_matchings(complete_graph(6)) == 15);
  CHECK(count_perfect_matchings(cycle_graph(8)) == 2);
  CHECK(count_perfect_matchings(path_graph(5)) == 0);
  CHECK(has_unique_perfect_matching(path_graph(6)));
  CHECK(count_perfect_matchings(hypercube_graph(3)) == 9);
  for (const Graph& g : enumerate_graphs(6)) {
    CHECK(has_unique_perfect_matching(g) == (count_perfect_matchings(g) == 1));
    CHECK(2 * matching_number(g) <= g.order());
  }
}

TEST_CASE("maximum uniquely restricted matching is maximum among UR matchings") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      int best = 0;
      for_each_matching(g, [&](const Matching& m) {
        if (is_uniquely_restricted(g, m)) best = std::max(best, m.size());
      });
      const Matching ur = maximum_ur_matching(g);
      CHECK(ur.size() == best);
      CHECK(is_uniquely_restricted(g, ur));
    }
  }
}

TEST_CASE("trees: every maximum matching is uniquely restricted") {
  for (int n = 1; n <= 10; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      for (const Matching& m : all_maximum_matchings(t)) CHECK(is_uniquely_restricted(t, m));
    }
  }
}

TEST_CASE("bipartite: unsaturated set of a UR matching is a forcing set") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected_bipartite(n)) {
      for_each_matching(g, [&](const Matching& m) {
        if (is_uniquely_restricted(g, m)) CHECK(is_skew_forcing_set(g, unsaturated_set(g, m)));
      });
    }
  }
}
