#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "detour/graph.hpp"
#include "detour/path.hpp"

namespace detour {

// Per-graph result. `order` is L, the vertex count of a longest path;
// `count` is f, the number of distinct undirected detours. The optional
// fields are filled only by the enumerating / edge-statistics entry points.
struct DetourReport {
  int order = 0;
  std::uint64_t count = 0;
  std::optional<std::vector<Path>> detours;                          // canonical, lexicographic
  std::optional<std::vector<std::pair<Edge, std::uint64_t>>> edge_counts;  // every edge of g
};

// The basic lower bound on detour order in a connected graph.
inline int detour_order_lower_bound(const Graph& g) {
  return std::min(2 * g.min_degree() + 1, g.order());
}

}  // namespace detour
