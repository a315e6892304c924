#include <catch2/catch.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "detour/connectivity.hpp"
#include "detour/engine.hpp"
#include "detour/families.hpp"
#include "detour/graph6.hpp"

using detour::Edge;
using detour::Graph;

namespace {

struct Audit {
  int delta, kappa, order, L;
  std::uint64_t f;
};

Audit audit(const Graph& g) {
  auto r = detour::count_detours_dfs(g);
  return {g.min_degree(), detour::connectivity_for_record(g), g.order(), r.order, r.count};
}

}  // namespace

TEST_CASE("cycle family") {
  Audit c4 = audit(detour::build_cycle(4));
  CHECK(c4.f == 4);
  CHECK(c4.L == 4);
  for (int n = 5; n <= 9; ++n) {
    Audit a = audit(detour::build_cycle(n));
    CHECK(a.f == static_cast<std::uint64_t>(n));
    CHECK(a.L == n);
    CHECK(a.delta == 2);
  }
  CHECK_THROWS_AS(detour::build_cycle(2), std::invalid_argument);
}

TEST_CASE("bowtie") {
  Audit a = audit(detour::build_bowtie());
  CHECK(a.order == 5);
  CHECK(a.delta == 2);
  CHECK(a.kappa == 1);
  CHECK(a.L == 5);
  CHECK(a.f == 4);
}

TEST_CASE("triangle-cycle family keeps f at 4 for every order") {
  CHECK(detour::build_triangle_cycle(5) == detour::build_bowtie());
  for (int n = 6; n <= 12; ++n) {
    Audit a = audit(detour::build_triangle_cycle(n));
    INFO("order " << n);
    CHECK(a.delta == 2);
    CHECK(a.kappa == 1);
    CHECK(a.L == n);
    CHECK(a.f == 4);
  }
  CHECK_THROWS_AS(detour::build_triangle_cycle(4), std::invalid_argument);
}

TEST_CASE("H9 is the pinned twelve-edge reconstruction") {
  Graph h9 = detour::build_h9();
  CHECK(h9.order() == 9);
  CHECK(h9.edge_count() == 12);
  std::vector<Edge> expected = {{0, 1}, {0, 2}, {1, 2}, {1, 4}, {2, 3}, {3, 4},
                                {4, 5}, {4, 7}, {5, 6}, {6, 7}, {6, 8}, {7, 8}};
  CHECK(h9.edges() == expected);

  Audit a = audit(h9);
  CHECK(a.delta == 2);
  CHECK(a.kappa == 1);
  CHECK(a.L == 9);
  CHECK(a.f == 9);
}

TEST_CASE("M family: nine detours at every order") {
  Graph m9 = detour::build_m(9);
  CHECK(m9 == add_edge(detour::build_h9(), Edge(2, 6)));

  for (int n = 9; n <= 14; ++n) {
    Audit a = audit(detour::build_m(n));
    INFO("order " << n);
    CHECK(a.order == n);
    CHECK(a.delta == 2);
    CHECK(a.kappa == 2);
    CHECK(a.L == n);  // traceable
    CHECK(a.f == 9);
  }
  CHECK_THROWS_AS(detour::build_m(8), std::invalid_argument);
}

TEST_CASE("validate_h10 gates the extended-H base") {
  SECTION("H9 fails on order") {
    auto v = detour::validate_h10(detour::build_h9());
    CHECK_FALSE(v.ok);
    REQUIRE_FALSE(v.failures.empty());
    CHECK(v.failures.front().find("order") != std::string::npos);
  }
  SECTION("M9 fails (wrong order, and would fail connectivity regardless)") {
    CHECK_FALSE(detour::validate_h10(detour::build_m(9)).ok);
  }
  SECTION("M10 fails on connectivity") {
    auto v = detour::validate_h10(detour::build_m(10));
    CHECK_FALSE(v.ok);
    bool kappa_complaint = false;
    for (const auto& f : v.failures)
      kappa_complaint |= f.find("connectivity") != std::string::npos;
    CHECK(kappa_complaint);
  }
  SECTION("subdividing H9's all-detours edge gives a valid base") {
    Graph candidate = subdivide(detour::build_h9(), Edge(7, 8), 1);
    auto v = detour::validate_h10(candidate);
    INFO("failures: " << (v.failures.empty() ? "none" : v.failures.front()));
    CHECK(v.ok);
    // the split halves of the old (7,8) corridor both lie on all nine detours
    CHECK(std::count(v.extension_edges.begin(), v.extension_edges.end(), Edge(7, 9)) == 1);
    CHECK(std::count(v.extension_edges.begin(), v.extension_edges.end(), Edge(8, 9)) == 1);
  }
}

TEST_CASE("extended H family from a validated base") {
  Graph base = subdivide(detour::build_h9(), Edge(7, 8), 1);
  for (int n = 11; n <= 13; ++n) {
    Graph h = detour::build_h_extended(base, n);
    Audit a = audit(h);
    INFO("order " << n);
    CHECK(a.order == n);
    CHECK(a.delta == 2);
    CHECK(a.kappa == 1);
    CHECK(a.L == n);
    CHECK(a.f == 9);
  }

  SECTION("rejects an invalid base") {
    CHECK_THROWS_AS(detour::build_h_extended(detour::build_m(10), 11), std::invalid_argument);
  }
  SECTION("rejects a subdivision edge that misses some detour") {
    // 0-2 is skipped by the detours that start 0,1,2
    CHECK_THROWS_AS(detour::build_h_extended(base, 11, Edge(0, 2)), std::invalid_argument);
  }
}

TEST_CASE("family dispatch") {
  CHECK(detour::build({detour::Family::cycle, 6}) == detour::build_cycle(6));
  CHECK(detour::build({detour::Family::m, 11}) == detour::build_m(11));
  CHECK_THROWS_AS(detour::build({detour::Family::h_extended, 11}), std::invalid_argument);
  CHECK(detour::family_from_name("triangle-cycle") == detour::Family::triangle_cycle);
  CHECK_THROWS_AS(detour::family_from_name("pentagon"), std::invalid_argument);
}
