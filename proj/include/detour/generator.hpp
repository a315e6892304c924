#pragma once

#include <cstdint>
#include <utility>

#include "detour/errors.hpp"
#include "detour/filter.hpp"
#include "detour/graph.hpp"

namespace detour {

// Built-in corpus for small orders: every labeled graph on n vertices,
// exactly once. Labeled, not isomorphism-reduced — minima of f are the same
// over labels as over classes, and canonical generation is somebody else's
// project. Capped at n = 7 (2^21 graphs); larger orders come from external
// graph6 catalogs.
inline constexpr int kLabeledGeneratorCap = 7;

namespace generator_detail {

// Edge bit order matches graph6: (0,1),(0,2),(1,2),(0,3),...
inline Graph graph_from_edge_bits(int n, std::uint64_t bits) {
  Graph g(n);
  int idx = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row, ++idx)
      if ((bits >> idx) & 1) g.add_edge(row, col);
  return g;
}

}  // namespace generator_detail

template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
  if (n < 1) throw std::invalid_argument("labeled generator needs order >= 1");
  if (n > kLabeledGeneratorCap)
    throw CapacityError("labeled generation is capped at order " +
                        std::to_string(kLabeledGeneratorCap) +
                        "; ingest an external graph6 catalog instead");
  int pairs = n * (n - 1) / 2;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits)
    fn(generator_detail::graph_from_edge_bits(n, bits));
}

// Structural filters only; f-dependent filters need an engine downstream.
template <typename Fn>
void for_each_labeled_graph(int n, const FilterSpec& spec, Fn&& fn) {
  for_each_labeled_graph(n, [&](const Graph& g) {
    if (spec.structural_pass(g)) fn(g);
  });
}

}  // namespace detour
