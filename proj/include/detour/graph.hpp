#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "detour/errors.hpp"

namespace detour {

// Adjacency rows are single machine words, so the whole library is capped at
// 64 vertices. Everything studied here lives at n <= ~20.
inline constexpr int kMaxVertices = 64;

// Undirected edge with endpoints normalized to u < v.
struct Edge {
  int u = 0;
  int v = 1;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("self-loop edge (" + std::to_string(a) + ")");
    if (a < 0 || b < 0) throw std::invalid_argument("negative vertex label in edge");
  }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

// Simple undirected graph on vertices 0..n-1. One bitmask row per vertex;
// symmetric, irreflexive. Value type, freely copyable and shareable across
// threads.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
      throw std::invalid_argument("graph order must be in 1.." + std::to_string(kMaxVertices) +
                                  ", got " + std::to_string(n));
  }

  static Graph from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
  }

  int order() const { return n_; }

  std::uint64_t vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
  }

  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  // Builder mutation; the algorithmic surface uses the pure free functions
  // add_edge()/subdivide() below.
  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if ((adj_[u] >> v) & 1u)
      throw std::invalid_argument("duplicate edge " + to_string(Edge(u, v)));
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }

  void add_edge(const Edge& e) { add_edge(e.u, e.v); }

  std::uint64_t adjacency(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return std::popcount(adjacency(v)); }

  int min_degree() const {
    int best = kMaxVertices;
    for (int v = 0; v < n_; ++v) best = std::min(best, std::popcount(adj_[v]));
    return best;
  }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
    return total / 2;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < n_; ++u) {
      std::uint64_t higher = adj_[u] >> (u + 1);
      while (higher) {
        int v = u + 1 + std::countr_zero(higher);
        out.emplace_back(u, v);
        higher &= higher - 1;
      }
    }
    return out;
  }

  bool is_connected() const {
    if (n_ <= 1) return true;
    std::uint64_t seen = 1;
    std::uint64_t frontier = adj_[0];
    while (frontier & ~seen) {
      seen |= frontier;
      std::uint64_t next = 0;
      std::uint64_t fresh = frontier;
      while (fresh) {
        int v = std::countr_zero(fresh);
        fresh &= fresh - 1;
        next |= adj_[v];
      }
      frontier = next & ~seen;
    }
    return (seen | frontier) == vertex_mask();
  }

  bool is_complete() const {
    for (int v = 0; v < n_; ++v)
      if (std::popcount(adj_[v]) != n_ - 1) return false;
    return true;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(n_));
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

// Set of vertices in `allowed` reachable from `from` through `allowed`
// vertices only. `from` itself is not required to be in `allowed` and is not
// part of the result unless reachable by a round trip.
inline std::uint64_t reachable_within(const Graph& g, int from, std::uint64_t allowed) {
  std::uint64_t seen = 0;
  std::uint64_t frontier = g.adjacency(from) & allowed;
  while (frontier) {
    seen |= frontier;
    std::uint64_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.adjacency(v);
    }
    frontier = next & allowed & ~seen;
  }
  return seen;
}

// Pure edge addition: returns g plus edge e.
inline Graph add_edge(const Graph& g, const Edge& e) {
  if (e.v >= g.order())
    throw std::out_of_range("edge endpoint " + std::to_string(e.v) + " out of range");
  if (g.has_edge(e)) throw std::invalid_argument("edge " + to_string(e) + " already present");
  Graph out = g;
  out.add_edge(e);
  return out;
}

// Replace edge e by a path through `times` fresh vertices, appended with
// labels n..n+times-1 in order e.u -> fresh... -> e.v. times = 0 returns g
// unchanged. Old degrees are preserved; fresh vertices get degree 2.
inline Graph subdivide(const Graph& g, const Edge& e, int times) {
  if (times < 0) throw std::invalid_argument("negative subdivision count");
  if (e.v >= g.order() || !g.has_edge(e))
    throw std::domain_error("subdivide: " + to_string(e) + " is not an edge");
  if (times == 0) return g;
  int n = g.order();
  if (n + times > kMaxVertices)
    throw CapacityError("subdivision would exceed " + std::to_string(kMaxVertices) + " vertices");
  Graph out(n + times);
  for (const Edge& f : g.edges())
    if (f != e) out.add_edge(f);
  int prev = e.u;
  for (int i = 0; i < times; ++i) {
    out.add_edge(prev, n + i);
    prev = n + i;
  }
  out.add_edge(prev, e.v);
  return out;
}

}  // namespace detour
