#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "detour/connectivity.hpp"
#include "detour/dfs.hpp"
#include "detour/graph.hpp"

namespace detour {

enum class Family { cycle, bowtie, triangle_cycle, h9, m, h_extended };

struct FamilyId {
  Family family;
  int order = 0;
};

inline Family family_from_name(std::string name) {
  for (char& c : name)
    if (c == '-') c = '_';
  if (name == "cycle") return Family::cycle;
  if (name == "bowtie") return Family::bowtie;
  if (name == "triangle_cycle") return Family::triangle_cycle;
  if (name == "H9" || name == "h9") return Family::h9;
  if (name == "M" || name == "m") return Family::m;
  if (name == "H_extended" || name == "h_extended") return Family::h_extended;
  throw std::invalid_argument("unknown family '" + name +
                              "' (cycle, bowtie, triangle-cycle, H9, M, H-extended)");
}

inline const char* family_name(Family f) {
  switch (f) {
    case Family::cycle: return "cycle";
    case Family::bowtie: return "bowtie";
    case Family::triangle_cycle: return "triangle-cycle";
    case Family::h9: return "H9";
    case Family::m: return "M";
    default: return "H-extended";
  }
}

inline Graph build_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs order >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

// Two triangles sharing vertex 2.
inline Graph build_bowtie() {
  return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// Triangle {0,1,2} and the cycle 2,3,...,n-1 sharing vertex 2. Exactly four
// detours for every order >= 5; the order-5 member is the bowtie.
inline Graph build_triangle_cycle(int n) {
  if (n < 5) throw std::invalid_argument("triangle-cycle needs order >= 5");
  Graph g(n);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  for (int v = 2; v + 1 < n; ++v) g.add_edge(v, v + 1);
  g.add_edge(n - 1, 2);
  return g;
}

// Order-9 graph with exactly nine detours and connectivity 1; the edge set
// is the union of the edges of those nine detours, which reproduces the
// detour set exactly.
inline Graph build_h9() {
  return Graph::from_edges(9, {{0, 1},
                               {0, 2},
                               {1, 2},
                               {1, 4},
                               {2, 3},
                               {3, 4},
                               {4, 5},
                               {4, 7},
                               {5, 6},
                               {6, 7},
                               {6, 8},
                               {7, 8}});
}

// M_9 adds the edge (2,6) to H9 (connectivity rises to 2, the detour set is
// unchanged); M_n subdivides its edge (7,8) n-9 times. Every detour of M_9
// runs through (7,8), so the count survives subdivision.
inline Graph build_m(int n) {
  if (n < 9) throw std::invalid_argument("M needs order >= 9");
  return subdivide(add_edge(build_h9(), Edge(2, 6)), Edge(7, 8), n - 9);
}

struct H10Validation {
  bool ok = false;
  std::vector<std::string> failures;
  std::vector<Edge> extension_edges;  // edges lying on all nine detours
};

// Gate for user-supplied order-10 bases of the extended H family. The base
// must look like H9 one order up: order 10, connected, min degree >= 2,
// connectivity 1, traceable, exactly nine detours, and it must own at least
// one edge that lies on every detour (the edge whose subdivision can
// plausibly preserve the count; preservation is re-verified per step
// regardless).
inline H10Validation validate_h10(const Graph& g) {
  H10Validation result;
  auto fail = [&](const std::string& msg) { result.failures.push_back(msg); };

  if (g.order() != 10) fail("order is " + std::to_string(g.order()) + ", want 10");
  if (!g.is_connected()) fail("not connected");
  if (g.min_degree() < 2) fail("minimum degree " + std::to_string(g.min_degree()) + " < 2");
  if (g.is_connected()) {
    int kappa = vertex_connectivity(g);
    if (kappa != 1) fail("connectivity " + std::to_string(kappa) + ", want 1");
  }

  EnumerateOptions opt;
  opt.collect_paths = false;
  opt.collect_edge_counts = true;
  DetourReport report = enumerate_detours(g, opt);
  if (report.order != g.order())
    fail("not traceable (detour order " + std::to_string(report.order) + ")");
  if (report.count != 9) fail("detour count is " + std::to_string(report.count) + ", want 9");

  for (const auto& [e, hits] : *report.edge_counts)
    if (hits == report.count) result.extension_edges.push_back(e);
  if (result.extension_edges.empty()) fail("no edge lies on all detours");

  result.ok = result.failures.empty();
  return result;
}

// H_n for n >= 11 from a validated order-10 base, subdividing one
// all-detours edge one step at a time and recounting after each step.
inline Graph build_h_extended(const Graph& base, int n, std::optional<Edge> via = {}) {
  if (n < 11) throw std::invalid_argument("H-extended needs order >= 11");
  H10Validation check = validate_h10(base);
  if (!check.ok) {
    std::string msg = "base graph rejected:";
    for (const std::string& f : check.failures) msg += " [" + f + "]";
    throw std::invalid_argument(msg);
  }
  Edge e = via.value_or(check.extension_edges.front());
  bool listed = false;
  for (const Edge& cand : check.extension_edges) listed |= (cand == e);
  if (!listed)
    throw std::invalid_argument("edge " + to_string(e) + " does not lie on all nine detours");

  Graph g = base;
  for (int order = 11; order <= n; ++order) {
    g = subdivide(g, e, 1);
    // the fresh vertex sits between e.u and the old far end; keep extending
    // the same corridor
    e = Edge(e.u, g.order() - 1);
    DetourReport report = count_detours_dfs(g);
    if (report.order != g.order() || report.count != 9)
      throw EngineMismatchError("subdivision broke the detour count at order " +
                                std::to_string(g.order()) + ": L=" + std::to_string(report.order) +
                                " f=" + std::to_string(report.count));
  }
  return g;
}

inline Graph build(const FamilyId& id, const Graph* h10_base = nullptr) {
  switch (id.family) {
    case Family::cycle: return build_cycle(id.order);
    case Family::bowtie:
      if (id.order != 5) throw std::invalid_argument("bowtie has order 5");
      return build_bowtie();
    case Family::triangle_cycle: return build_triangle_cycle(id.order);
    case Family::h9:
      if (id.order != 9) throw std::invalid_argument("H9 has order 9");
      return build_h9();
    case Family::m: return build_m(id.order);
    case Family::h_extended:
      if (!h10_base)
        throw std::invalid_argument("H-extended requires a validated order-10 base graph");
      return build_h_extended(*h10_base, id.order);
  }
  throw std::logic_error("unhandled family");
}

}  // namespace detour
