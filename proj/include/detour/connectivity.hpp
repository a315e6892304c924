#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "detour/errors.hpp"
#include "detour/graph.hpp"

namespace detour {

// Lowpoint DFS articulation-point test. Linear time; used as the fast path
// for connectivity-class filters and as a cross-check on the brute-force
// cut search.
inline bool has_articulation_point(const Graph& g) {
  int n = g.order();
  if (n < 3) return false;
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  int timer = 0;
  bool found = false;

  struct Frame {
    int v;
    int parent;
    std::uint64_t pending;
    int children = 0;
  };
  std::vector<Frame> stack;
  stack.reserve(static_cast<std::size_t>(n));

  for (int root = 0; root < n && !found; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1, g.adjacency(root)});
    while (!stack.empty() && !found) {
      Frame& f = stack.back();
      if (f.pending) {
        int u = std::countr_zero(f.pending);
        f.pending &= f.pending - 1;
        if (u == f.parent) continue;
        if (disc[u] < 0) {
          ++f.children;
          disc[u] = low[u] = timer++;
          stack.push_back({u, f.v, g.adjacency(u)});
        } else {
          low[f.v] = std::min(low[f.v], disc[u]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& p = stack.back();
          low[p.v] = std::min(low[p.v], low[done.v]);
          if (p.parent != -1 && low[done.v] >= disc[p.v]) found = true;
        } else if (done.children > 1) {
          found = true;  // root with two DFS subtrees
        }
      }
    }
  }
  return found;
}

// kappa >= 2: connected, at least 3 vertices, no cut vertex.
inline bool is_biconnected(const Graph& g) {
  return g.order() >= 3 && g.is_connected() && !has_articulation_point(g);
}

namespace connectivity_detail {

inline bool connected_after_removal(const Graph& g, std::uint64_t removed) {
  std::uint64_t alive = g.vertex_mask() & ~removed;
  if (alive == 0) return true;
  int start = std::countr_zero(alive);
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = g.adjacency(start) & alive;
  while (frontier & ~seen) {
    seen |= frontier;
    std::uint64_t next = 0;
    std::uint64_t fresh = frontier;
    while (fresh) {
      int v = std::countr_zero(fresh);
      fresh &= fresh - 1;
      next |= g.adjacency(v);
    }
    frontier = next & alive & ~seen;
  }
  return (seen | frontier) == alive;
}

// All size-k vertex subsets, leaving early once a cut is found.
inline bool some_cut_of_size(const Graph& g, int k, std::uint64_t chosen, int next) {
  if (k == 0) return !connected_after_removal(g, chosen);
  for (int v = next; v <= g.order() - k; ++v)
    if (some_cut_of_size(g, k - 1, chosen | (std::uint64_t{1} << v), v + 1)) return true;
  return false;
}

}  // namespace connectivity_detail

// Size of a smallest vertex cut, by exhaustive subset deletion in increasing
// size order; n-1 for complete graphs. Kept brute force on purpose: the
// graphs of interest have n <= 20 and the subset search is easy to audit.
inline int vertex_connectivity(const Graph& g, int max_order = 20) {
  int n = g.order();
  if (!g.is_connected()) throw std::domain_error("vertex_connectivity: graph is disconnected");
  if (n > max_order)
    throw CapacityError("vertex_connectivity is brute force, capped at order " +
                        std::to_string(max_order));
  if (g.is_complete()) return n - 1;
  for (int k = 1; k <= n - 2; ++k)
    if (connectivity_detail::some_cut_of_size(g, k, 0, 0)) return k;
  return n - 1;  // unreachable for non-complete inputs
}

// Connectivity as recorded in scan output: 0 for disconnected graphs,
// otherwise vertex_connectivity.
inline int connectivity_for_record(const Graph& g, int max_order = 20) {
  if (g.order() == 1) return 0;
  if (!g.is_connected()) return 0;
  return vertex_connectivity(g, max_order);
}

}  // namespace detour
