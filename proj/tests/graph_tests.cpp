#include <catch2/catch.hpp>

#include "detour/families.hpp"
#include "detour/graph.hpp"
#include "support/brute.hpp"

using detour::Edge;
using detour::Graph;

TEST_CASE("edge normalizes endpoints and rejects loops") {
  Edge e(4, 1);
  CHECK(e.u == 1);
  CHECK(e.v == 4);
  CHECK(Edge(1, 4) == e);
  CHECK_THROWS_AS(Edge(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(Edge(-1, 2), std::invalid_argument);
}

TEST_CASE("graph construction enforces the basics") {
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);

  Graph g(4);
  g.add_edge(0, 1);
  CHECK(g.has_edge(1, 0));
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);  // loop
  CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("degree queries") {
  Graph c4 = detour::build_cycle(4);
  CHECK(c4.min_degree() == 2);

  Graph bowtie = detour::build_bowtie();
  CHECK(bowtie.degree(2) == 4);
  CHECK(bowtie.min_degree() == 2);

  CHECK(detour::build_h9().min_degree() == 2);
}

TEST_CASE("connectivity check") {
  CHECK(detour::build_cycle(4).is_connected());
  CHECK(detour::build_h9().is_connected());

  Graph two_triangles(6);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
    two_triangles.add_edge(u, v);
  CHECK_FALSE(two_triangles.is_connected());

  CHECK(Graph(1).is_connected());
  CHECK_FALSE(Graph(2).is_connected());
}

TEST_CASE("pure edge addition") {
  Graph k2 = add_edge(Graph(2), Edge(0, 1));
  CHECK(k2.edge_count() == 1);

  Graph c4 = detour::build_cycle(4);
  Graph diamond = add_edge(c4, Edge(0, 2));
  CHECK(diamond.edge_count() == 5);
  CHECK(c4.edge_count() == 4);  // input untouched
  CHECK_THROWS_AS(add_edge(diamond, Edge(0, 2)), std::invalid_argument);

  // recount after surgery against the oracle
  CHECK(testsupport::brute_detour_count(diamond) ==
        detour::count_detours_dfs(diamond).count);
}

TEST_CASE("subdivision") {
  Graph c3 = detour::build_cycle(3);
  Graph c4ish = subdivide(c3, Edge(0, 1), 1);
  CHECK(c4ish.order() == 4);
  CHECK(c4ish.min_degree() == 2);
  CHECK(c4ish.degree(3) == 2);
  // 2-regular connected on 4 vertices: the 4-cycle, up to labels
  CHECK(testsupport::brute_detour_count(c4ish) == 4);

  SECTION("zero steps is the identity") {
    CHECK(subdivide(c3, Edge(0, 1), 0) == c3);
  }

  SECTION("fresh vertices form the replacement path in label order") {
    Graph g = subdivide(c3, Edge(1, 2), 3);
    CHECK(g.order() == 6);
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(3, 4));
    CHECK(g.has_edge(4, 5));
    CHECK(g.has_edge(5, 2));
  }

  SECTION("old degrees survive") {
    Graph h9 = detour::build_h9();
    Graph g = subdivide(h9, Edge(7, 8), 2);
    for (int v = 0; v < 9; ++v) CHECK(g.degree(v) == h9.degree(v));
    CHECK(g.order() == 11);
  }

  CHECK_THROWS_AS(subdivide(c3, Edge(0, 3), 1), std::domain_error);
  Graph p2(3);
  p2.add_edge(0, 1);
  p2.add_edge(1, 2);
  CHECK_THROWS_AS(subdivide(p2, Edge(0, 2), 1), std::domain_error);
}

TEST_CASE("reachable region") {
  Graph h9 = detour::build_h9();
  // with vertex 4 blocked, nothing on the right is reachable from 0
  std::uint64_t allowed = h9.vertex_mask() & ~(1ull << 4) & ~1ull;
  std::uint64_t region = detour::reachable_within(h9, 0, allowed);
  CHECK(region == ((1ull << 1) | (1ull << 2) | (1ull << 3)));
}
