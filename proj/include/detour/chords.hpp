#pragma once

#include <stdexcept>
#include <vector>

#include "detour/dfs.hpp"
#include "detour/graph.hpp"
#include "detour/path.hpp"

namespace detour {

// Relation of an edge to a reference path. A chord joins two path vertices
// without being a path edge; it is inner when both endpoints are internal
// vertices of the path and boundary when it touches a path endpoint.
enum class ChordClass { path_edge, inner, boundary, non_chord };

inline const char* to_string(ChordClass c) {
  switch (c) {
    case ChordClass::path_edge: return "path-edge";
    case ChordClass::inner: return "inner";
    case ChordClass::boundary: return "boundary";
    default: return "non-chord";
  }
}

inline ChordClass classify_chord(const Path& p, const Edge& e) {
  int pu = p.index_of(e.u);
  int pv = p.index_of(e.v);
  if (pu < 0 || pv < 0) return ChordClass::non_chord;
  if (pu > pv) std::swap(pu, pv);
  if (pv - pu == 1) return ChordClass::path_edge;
  int last = p.order() - 1;
  if (pu > 0 && pv < last) return ChordClass::inner;
  return ChordClass::boundary;
}

// A detour is basic relative to P when it uses no inner chord of P.
inline bool is_basic_detour(const Path& d, const Path& p) {
  if (d.order() != p.order())
    throw std::domain_error("is_basic_detour: paths have different orders (" +
                            std::to_string(d.order()) + " vs " + std::to_string(p.order()) + ")");
  for (const Edge& e : d.edges())
    if (classify_chord(p, e) == ChordClass::inner) return false;
  return true;
}

// Omega: the inner chords of the detour p that appear on at least one detour
// of g. p must itself be a detour of g.
inline std::vector<Edge> omega(const Graph& g, const Path& p) {
  if (!p.is_valid_in(g)) throw std::domain_error("omega: path is not a path of the graph");
  if (p.order() != detour_order(g))
    throw std::domain_error("omega: path of order " + std::to_string(p.order()) +
                            " is not a detour (detour order is " +
                            std::to_string(detour_order(g)) + ")");

  std::vector<Edge> inner;
  for (const Edge& e : g.edges())
    if (classify_chord(p, e) == ChordClass::inner) inner.push_back(e);
  if (inner.empty()) return inner;

  std::vector<Edge> used;
  for (const auto& [e, hits] : edge_detour_counts(g)) {
    for (const Edge& c : inner)
      if (c == e && hits > 0) used.push_back(e);
  }
  return used;
}

}  // namespace detour
