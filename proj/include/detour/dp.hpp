#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "detour/errors.hpp"
#include "detour/graph.hpp"
#include "detour/report.hpp"

namespace detour {

inline constexpr int kDpOrderCap = 20;

// Exact (L, f) by dynamic programming over (vertex subset, endpoint) states:
// table[S][v] = number of directed simple paths with vertex set exactly S
// ending at v. f is half the number of directed paths of maximum order
// (each detour is walked once per direction), except that an edgeless graph
// has L = 1 and one detour per vertex.
//
// Memory is 2^n * n counts, hence the order cap; beyond it callers are
// pointed at the DFS engine.
inline DetourReport count_detours_dp(const Graph& g, int order_cap = kDpOrderCap) {
  int n = g.order();
  if (n > order_cap)
    throw CapacityError("order " + std::to_string(n) + " above DP cap " +
                        std::to_string(order_cap) + "; use the DFS engine");

  std::uint64_t full = g.vertex_mask();
  std::vector<std::uint64_t> table((std::size_t{1} << n) * static_cast<std::size_t>(n), 0);
  std::vector<std::uint64_t> per_order(static_cast<std::size_t>(n) + 1, 0);

  for (int v = 0; v < n; ++v) table[(std::size_t{1} << v) * n + v] = 1;

  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    int len = std::popcount(mask);
    std::uint64_t ends = mask;
    while (ends) {
      int v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint64_t paths = table[mask * n + v];
      if (paths == 0) continue;
      per_order[static_cast<std::size_t>(len)] =
          checked_add(per_order[static_cast<std::size_t>(len)], paths);
      std::uint64_t ext = g.adjacency(v) & ~mask;
      while (ext) {
        int u = std::countr_zero(ext);
        ext &= ext - 1;
        std::uint64_t& slot = table[(mask | (std::uint64_t{1} << u)) * n + u];
        slot = checked_add(slot, paths);
      }
    }
  }

  int longest = 1;
  for (int len = n; len >= 1; --len) {
    if (per_order[static_cast<std::size_t>(len)] > 0) {
      longest = len;
      break;
    }
  }

  DetourReport report;
  report.order = longest;
  report.count = longest == 1 ? static_cast<std::uint64_t>(n)
                              : per_order[static_cast<std::size_t>(longest)] / 2;
  return report;
}

}  // namespace detour
