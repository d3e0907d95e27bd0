#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "skewzf/enumerate.hpp"
#include "skewzf/families.hpp"
#include "skewzf/graph.hpp"
#include "skewzf/io.hpp"
#include "skewzf/properties.hpp"

using namespace skewzf;

TEST_CASE("vertex sets") {
  const VertexSet s{0, 2, 5};
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK(to_string(s) == "{0,2,5}");
  CHECK(to_string(VertexSet{}) == "{}");
  CHECK(s.to_vector() == std::vector<Vertex>{0, 2, 5});
  CHECK_THROWS_AS(VertexSet::from({64}), std::out_of_range);

  int count = 0;
  for_each_k_subset(VertexSet::range(6), 3, [&](VertexSet t) {
    CHECK(t.size() == 3);
    ++count;
    return false;
  });
  CHECK(count == 20);
}

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS(Graph::from_edge_list(3, {{0, 0}}));
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), std::out_of_range);
  const Graph g = Graph::from_edge_list(3, {{1, 0}, {0, 1}, {2, 1}});
  CHECK(g.size() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("graph operations") {
  const Graph k3 = complete_graph(3);
  const Graph bowtie = vertex_sum(k3, 0, k3, 0);
  CHECK(bowtie.order() == 5);
  CHECK(bowtie.size() == 6);
  CHECK(cut_vertices(bowtie) == std::vector<Vertex>{0});

  const Graph c = corona(cycle_graph(4), complete_graph(1));
  CHECK(c.order() == 8);
  CHECK(c.size() == 8);

  const Graph grid = cartesian_product(path_graph(3), path_graph(3));
  CHECK(grid.order() == 9);
  CHECK(grid.size() == 12);

  const Graph k33 = k3_times_k3();
  CHECK(k33.order() == 9);
  CHECK(k33.size() == 18);
  CHECK(degree_stats(k33).min_degree == 4);

  CHECK(complement(complete_graph(4)).size() == 0);
  CHECK(disjoint_union(path_graph(2), path_graph(3)).size() == 3);

  const auto sub = induced_subgraph(path_graph(5), VertexSet{1, 2, 4});
  CHECK(sub.graph.size() == 1);
  CHECK(sub.to_original == std::vector<Vertex>{1, 2, 4});
}

TEST_CASE("product and corona counts") {
  const std::vector<Graph> small = {path_graph(3), cycle_graph(4), complete_graph(4), star_graph(5), path_graph(2)};
  for (const Graph& g : small) {
    const Graph c = corona(g, complete_graph(1));
    int leaves = 0;
    for (Vertex v = 0; v < c.order(); ++v) leaves += c.degree(v) == 1;
    CHECK(leaves == g.order());
    for (const Graph& h : small) {
      const Graph p = cartesian_product(g, h);
      CHECK(p.order() == g.order() * h.order());
      CHECK(p.size() == g.order() * h.size() + h.order() * g.size());
    }
  }
}

TEST_CASE("structural predicates") {
  CHECK(is_tree(path_graph(5)));
  CHECK(is_unicyclic(cycle_graph(5)));
  CHECK_FALSE(is_unicyclic(complete_graph(4)));
  CHECK(unicyclic_cycle(corona(cycle_graph(4), complete_graph(1))).size() == 4);
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK(is_complete_multipartite(complete_graph(4)) == std::vector<int>{1, 1, 1, 1});
  CHECK(is_complete_multipartite(cycle_graph(4)) == std::vector<int>{2, 2});
  CHECK_FALSE(is_complete_multipartite(path_graph(4)).has_value());
  CHECK_FALSE(is_complete_multipartite(Graph(1)).has_value());
}

TEST_CASE("named families") {
  CHECK(wheel_graph(6).size() == 10);
  CHECK(pineapple_graph(4, 2).order() == 6);
  CHECK(pineapple_graph(4, 2).size() == 8);
  CHECK(hypercube_graph(3).size() == 12);
  CHECK(super_triangle_graph(3).order() == 6);
  CHECK(super_triangle_graph(3).size() == 9);
  CHECK(half_graph(3).size() == 6);
  CHECK(is_bipartite(half_graph(4)));
  const Graph n2 = necklace_graph(2);
  CHECK(n2.order() == 8);
  CHECK(n2.size() == 12);
  CHECK(degree_stats(n2).min_degree == 3);
  CHECK(degree_stats(n2).max_degree == 3);
}

TEST_CASE("random generators are seeded and well formed") {
  std::mt19937_64 a(5);
  std::mt19937_64 b(5);
  for (int i = 0; i < 20; ++i) {
    const Graph t = random_tree(9, a);
    CHECK(is_tree(t));
    CHECK(t == random_tree(9, b));
    CHECK(is_unicyclic(random_unicyclic(3 + i % 8, a)));
    random_unicyclic(3 + i % 8, b);
  }
}

TEST_CASE("graph6 examples") {
  const Graph star = parse_graph6("D?{");
  CHECK(star.order() == 5);
  CHECK(degree_stats(star).max_degree == 4);
  CHECK(emit_graph6(path_graph(2)) == "A_");
  CHECK(parse_graph6(">>graph6<<A_\n") == path_graph(2));
  CHECK_THROWS_AS(parse_graph6("A"), ParseError);
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);  // nonzero padding
  CHECK_THROWS_AS(parse_graph6("!!"), ParseError);
  CHECK_THROWS_AS(parse_graph6("?"), ParseError);
  const Graph big = path_graph(70);
  CHECK(parse_graph6(emit_graph6(big)) == big);
}

TEST_CASE("edge lists") {
  const Graph g = parse_edge_list("# path\n4 3\n0 1\n1 2\n\n2 3\n");
  CHECK(g == path_graph(4));
  CHECK(parse_edge_list(emit_edge_list(g)) == g);
  CHECK(parse_graph_text("4 3\n0 1\n1 2\n2 3\n") == g);
  CHECK(parse_graph_text("# leading comment\n4 3\n0 1\n1 2\n2 3\n") == g);
  CHECK(parse_graph_text("C~\n") == complete_graph(4));
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), ParseError);
}

TEST_CASE("enumeration counts") {
  const int all[] = {1, 2, 4, 11, 34, 156, 1044};
  const int connected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(enumerate_graphs(n).size() == static_cast<std::size_t>(all[n - 1]));
    CHECK(enumerate_connected(n).size() == static_cast<std::size_t>(connected[n - 1]));
  }
  const int trees[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 1; n <= 12; ++n) CHECK(enumerate_trees(n).size() == static_cast<std::size_t>(trees[n - 1]));
  const int bipartite[] = {1, 1, 1, 3, 5, 17, 44, 182};
  for (int n = 1; n <= 8; ++n) {
    CHECK(enumerate_connected_bipartite(n).size() == static_cast<std::size_t>(bipartite[n - 1]));
  }
  CHECK_THROWS_AS(enumerate_connected(8), std::out_of_range);
}

TEST_CASE("enumeration agrees with brute-force isomorphism classes") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(oracle::count_isomorphism_classes(n, false) == static_cast<int>(enumerate_graphs(n).size()));
    CHECK(oracle::count_isomorphism_classes(n, true) == static_cast<int>(enumerate_connected(n).size()));
  }
  const auto six = enumerate_connected(6);
  CHECK(oracle::count_isomorphism_classes(6, true) == static_cast<int>(six.size()));
}

TEST_CASE("every connected labeled graph lands in the enumeration") {
  std::mt19937_64 rng(21);
  for (int n = 3; n <= 7; ++n) {
    const auto classes = enumerate_connected(n);
    std::vector<std::uint64_t> codes;
    for (const Graph& g : classes) codes.push_back(adjacency_code(g));
    CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
    for (int i = 0; i < 200; ++i) {
      std::vector<Edge> edges;
      for (int v = 1; v < n; ++v) edges.emplace_back(v, static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(v))));
      for (int k = 0; k < n; ++k) {
        const int a = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
        const int b = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
        if (a != b) edges.emplace_back(a, b);
      }
      const auto code = canonical_form(Graph::from_edge_list(n, edges)).code;
      CHECK(std::binary_search(codes.begin(), codes.end(), code));
    }
  }
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937_64 rng(11);
  for (const Graph& g : enumerate_graphs(6)) {
    std::vector<Vertex> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> relabeled;
    for (const Edge& e : g.edges()) relabeled.emplace_back(perm[e.u], perm[e.v]);
    const Graph h = Graph::from_edge_list(6, relabeled);
    const auto cg = canonical_form(g);
    CHECK(cg.code == canonical_form(h).code);
    CHECK(oracle::isomorphic(cg.graph, g));
    CHECK(adjacency_code(cg.graph) == cg.code);
    CHECK(graph_from_code(6, cg.code) == cg.graph);
  }
}

TEST_CASE("graph6 round trip on enumerated graphs") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) CHECK(parse_graph6(emit_graph6(g)) == g);
  }
  for (const Graph& t : enumerate_trees(14)) CHECK(parse_graph6(emit_graph6(t)) == t);
}
