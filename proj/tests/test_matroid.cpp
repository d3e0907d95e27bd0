#include <doctest.h>

#include "skewzf/enumerate.hpp"
#include "skewzf/families.hpp"
#include "skewzf/forcing.hpp"
#include "skewzf/matching.hpp"
#include "skewzf/matroid.hpp"

using namespace skewzf;

TEST_CASE("set families") {
  const SetFamily f(VertexSet::range(3), {{2}, {0}, {2}});
  CHECK(f.size() == 2);
  CHECK(to_string(f) == "{{0},{2}}");
  CHECK(f.contains({0}));
  CHECK_THROWS_AS(SetFamily(VertexSet::range(2), {{3}}), std::invalid_argument);
}

TEST_CASE("matching matroid bases") {
  CHECK(matching_matroid_bases(path_graph(3)) == SetFamily(VertexSet::range(3), {{0, 1}, {1, 2}}));
  CHECK(matching_matroid_bases(path_graph(4)) == SetFamily(VertexSet::range(4), {{0, 1, 2, 3}}));
  CHECK(matching_matroid_bases(cycle_graph(4)) == SetFamily(VertexSet::range(4), {{0, 1, 2, 3}}));
}

TEST_CASE("basis axioms") {
  CHECK(is_matroid_basis_family(SetFamily(VertexSet::range(3), {{0}, {2}})));
  CHECK_FALSE(is_matroid_basis_family(SetFamily(VertexSet::range(4), {{0, 1}, {2, 3}})));
  CHECK(is_matroid_basis_family(SetFamily(VertexSet::range(3), {VertexSet{}})));
  CHECK_FALSE(is_matroid_basis_family(SetFamily(VertexSet::range(3), {{0}, {1, 2}})));
  CHECK_THROWS_AS(is_matroid_basis_family(SetFamily(VertexSet::range(3), {})), std::invalid_argument);
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) CHECK(is_matroid_basis_family(matching_matroid_bases(g)));
  }
}

TEST_CASE("duals") {
  const SetFamily f(VertexSet::range(3), {{0, 1}, {1, 2}});
  CHECK(dual_bases(f) == SetFamily(VertexSet::range(3), {{2}, {0}}));
  CHECK(dual_bases(dual_bases(f)) == f);
  CHECK(dual_bases(SetFamily(VertexSet::range(4), {VertexSet::range(4)})) ==
        SetFamily(VertexSet::range(4), {VertexSet{}}));
}

TEST_CASE("all maximum matchings uniquely restricted") {
  CHECK(all_max_matchings_ur(path_graph(7)));
  CHECK_FALSE(all_max_matchings_ur(cycle_graph(4)));
  CHECK_FALSE(all_max_matchings_ur(cycle_graph(6)));
}

TEST_CASE("zero forcing matroid") {
  const auto p3 = verify_zero_forcing_matroid(path_graph(3));
  CHECK(p3.status == MatroidStatus::pass);
  CHECK(p3.forcing_sets == SetFamily(VertexSet::range(3), {{0}, {2}}));
  CHECK(verify_zero_forcing_matroid(path_graph(6)).forcing_sets == SetFamily(VertexSet::range(6), {VertexSet{}}));
  const auto c4 = verify_zero_forcing_matroid(cycle_graph(4));
  CHECK(c4.status == MatroidStatus::precondition_failed);
  CHECK(c4.detail == "max matchings not uniquely restricted");
  CHECK(verify_zero_forcing_matroid(cycle_graph(5)).status == MatroidStatus::precondition_failed);
  CHECK(verify_zero_forcing_matroid(cycle_graph(5)).detail == "not bipartite");
  for (int n = 1; n <= 9; ++n) {
    for (const Graph& t : enumerate_trees(n)) CHECK(verify_zero_forcing_matroid(t).status == MatroidStatus::pass);
  }
}
