#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "detour/path.hpp"

namespace detour {

// The detour-multiplication step. Given a path P: x_1,...,x_k and two
// boundary chords x_1x_i and x_kx_j, rebuilds the four (i <= j) or six
// (i > j) paths of order k whose edges lie in E(P) + the two chords. The
// first element is always P itself.
//
// Indices are 1-based to match the x_1..x_k convention; everything else in
// the library is 0-based. Legal range: 3 <= i <= k-1 and 2 <= j <= k-2.
// i = k and j = 1 are rejected: the chord then closes a k-cycle and the
// construction does not apply.
inline std::vector<Path> psi_detours(const Path& p, int i, int j) {
  int k = p.order();
  if (k < 4) throw std::invalid_argument("psi_detours: path order must be at least 4");
  if (i == k || j == 1)
    throw std::invalid_argument(
        "psi_detours: chord closes a k-cycle (i = k or j = 1); not a boundary-chord pair");
  if (i < 3 || i > k - 1)
    throw std::out_of_range("psi_detours: i must satisfy 3 <= i <= k-1, got " +
                            std::to_string(i));
  if (j < 2 || j > k - 2)
    throw std::out_of_range("psi_detours: j must satisfy 2 <= j <= k-2, got " +
                            std::to_string(j));

  // Subpath x_a..x_b of P, walked toward b; 1-based endpoints, inclusive.
  auto seg = [&](std::vector<int>& out, int a, int b) {
    int step = a <= b ? 1 : -1;
    for (int t = a; t != b + step; t += step) out.push_back(p[t - 1]);
  };
  auto make = [&](auto... pieces) {
    std::vector<int> verts;
    verts.reserve(static_cast<std::size_t>(k));
    (seg(verts, pieces.first, pieces.second), ...);
    return Path(std::move(verts));
  };
  using piece = std::pair<int, int>;

  std::vector<Path> out;
  out.push_back(p);
  out.push_back(make(piece{1, j}, piece{k, j + 1}));
  out.push_back(make(piece{i - 1, 1}, piece{i, k}));
  if (i <= j) {
    out.push_back(make(piece{i - 1, 1}, piece{i, j}, piece{k, j + 1}));
  } else {
    out.push_back(make(piece{j - 1, 1}, piece{i, k}, piece{j, i - 1}));
    out.push_back(make(piece{i + 1, k}, piece{j, 1}, piece{i, j + 1}));
    out.push_back(make(piece{j - 1, 1}, piece{i, j}, piece{k, i + 1}));
  }
  return out;
}

}  // namespace detour
