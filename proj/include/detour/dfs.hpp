#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "detour/errors.hpp"
#include "detour/graph.hpp"
#include "detour/path.hpp"
#include "detour/report.hpp"

namespace detour {

namespace dfs_detail {

// Pass 1: longest simple path order, branch-and-bound. The bound at a node
// is current length plus the order of the connected region of unvisited
// vertices reachable from the endpoint; an extension can never leave that
// region, so pruning on it is lossless.
class LongestSearch {
 public:
  explicit LongestSearch(const Graph& g) : g_(g) {}

  int run() {
    best_ = 1;
    for (int v = 0; v < g_.order(); ++v) extend(v, std::uint64_t{1} << v, 1);
    return best_;
  }

 private:
  void extend(int v, std::uint64_t visited, int len) {
    best_ = std::max(best_, len);
    std::uint64_t free = g_.vertex_mask() & ~visited;
    std::uint64_t region = reachable_within(g_, v, free);
    if (len + std::popcount(region) <= best_) return;
    std::uint64_t ext = g_.adjacency(v) & free;
    while (ext) {
      int u = std::countr_zero(ext);
      ext &= ext - 1;
      extend(u, visited | (std::uint64_t{1} << u), len + 1);
    }
  }

  const Graph& g_;
  int best_ = 1;
};

// Pass 2: walk every directed simple path of order exactly `target`,
// pruning branches that cannot reach it. `target` must be the true detour
// order; a path of that order then has no free neighbor, so emission stops
// cleanly. Starts and extensions ascend by label, which makes the emission
// order lexicographic.
template <typename Fn>
class TargetWalk {
 public:
  TargetWalk(const Graph& g, int target, bool canonical_only, Fn fn)
      : g_(g), target_(target), canonical_only_(canonical_only), fn_(std::forward<Fn>(fn)) {}

  void run() {
    if (target_ == 1) {
      for (int v = 0; v < g_.order(); ++v) {
        path_.assign(1, v);
        fn_(path_);
      }
      return;
    }
    path_.reserve(static_cast<std::size_t>(target_));
    for (int v = 0; v < g_.order(); ++v) {
      path_.assign(1, v);
      extend(v, std::uint64_t{1} << v, 1);
    }
  }

 private:
  void extend(int v, std::uint64_t visited, int len) {
    if (len == target_) {
      if (!canonical_only_ || path_.front() < v) fn_(path_);
      return;
    }
    std::uint64_t free = g_.vertex_mask() & ~visited;
    std::uint64_t region = reachable_within(g_, v, free);
    if (len + std::popcount(region) < target_) return;
    std::uint64_t ext = g_.adjacency(v) & free;
    while (ext) {
      int u = std::countr_zero(ext);
      ext &= ext - 1;
      path_.push_back(u);
      extend(u, visited | (std::uint64_t{1} << u), len + 1);
      path_.pop_back();
    }
  }

  const Graph& g_;
  int target_;
  bool canonical_only_;
  Fn fn_;
  std::vector<int> path_;
};

}  // namespace dfs_detail

// Order of a longest simple path (over all components).
inline int detour_order(const Graph& g) { return dfs_detail::LongestSearch(g).run(); }

// Visit every detour once, in canonical orientation (smaller endpoint
// first), in lexicographic order of the vertex sequence. `target` must be
// the graph's detour order; the overload below computes it.
template <typename Fn>
void for_each_detour_of_order(const Graph& g, int target, Fn&& fn) {
  dfs_detail::TargetWalk<Fn&>(g, target, /*canonical_only=*/true, fn).run();
}

template <typename Fn>
void for_each_detour(const Graph& g, Fn&& fn) {
  for_each_detour_of_order(g, detour_order(g), std::forward<Fn>(fn));
}

// Directed count at a given order: every detour walked once per direction.
// Exposed for the doubling cross-check (directed == 2f for L >= 2).
inline std::uint64_t count_directed_detours(const Graph& g, int target) {
  std::uint64_t count = 0;
  dfs_detail::TargetWalk(g, target, /*canonical_only=*/false,
                         [&](const std::vector<int>&) { count = checked_add(count, 1); })
      .run();
  return count;
}

// (L, f) with no DP table; the exhaustive engine for cross-validation and
// for orders above the DP cap.
inline DetourReport count_detours_dfs(const Graph& g) {
  DetourReport report;
  report.order = detour_order(g);
  std::uint64_t count = 0;
  for_each_detour_of_order(g, report.order,
                           [&](const std::vector<int>&) { count = checked_add(count, 1); });
  report.count = count;
  return report;
}

struct EnumerateOptions {
  std::uint64_t emission_limit = 1'000'000;
  bool collect_paths = true;
  bool collect_edge_counts = false;
};

// Full enumeration. Detours come out canonical and lexicographically sorted;
// exceeding the emission limit raises TruncationError carrying the count
// found so far.
inline DetourReport enumerate_detours(const Graph& g, const EnumerateOptions& opt = {}) {
  DetourReport report;
  report.order = detour_order(g);

  int n = g.order();
  std::vector<std::uint64_t> edge_hits;
  if (opt.collect_edge_counts)
    edge_hits.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  std::vector<Path> paths;

  std::uint64_t count = 0;
  for_each_detour_of_order(g, report.order, [&](const std::vector<int>& verts) {
    count = checked_add(count, 1);
    if (opt.collect_paths) {
      if (count > opt.emission_limit)
        throw TruncationError("detour emission limit " + std::to_string(opt.emission_limit) +
                                  " exceeded",
                              count - 1);
      paths.emplace_back(Path(verts));
    }
    if (opt.collect_edge_counts) {
      for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
        auto [a, b] = std::minmax(verts[i], verts[i + 1]);
        ++edge_hits[static_cast<std::size_t>(a) * n + b];
      }
    }
  });

  report.count = count;
  if (opt.collect_paths) report.detours = std::move(paths);
  if (opt.collect_edge_counts) {
    std::vector<std::pair<Edge, std::uint64_t>> counts;
    for (const Edge& e : g.edges())
      counts.emplace_back(e, edge_hits[static_cast<std::size_t>(e.u) * n + e.v]);
    report.edge_counts = std::move(counts);
  }
  return report;
}

// Number of detours whose edge set contains e. Zero is meaningful: an edge
// can lie on no detour at all.
inline std::uint64_t detours_through_edge(const Graph& g, const Edge& e) {
  if (e.v >= g.order() || !g.has_edge(e))
    throw std::domain_error("detours_through_edge: " + to_string(e) + " is not an edge");
  std::uint64_t count = 0;
  for_each_detour(g, [&](const std::vector<int>& verts) {
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
      if (Edge(verts[i], verts[i + 1]) == e) {
        count = checked_add(count, 1);
        return;
      }
    }
  });
  return count;
}

inline std::vector<std::pair<Edge, std::uint64_t>> edge_detour_counts(const Graph& g) {
  EnumerateOptions opt;
  opt.collect_paths = false;
  opt.collect_edge_counts = true;
  return *enumerate_detours(g, opt).edge_counts;
}

}  // namespace detour
