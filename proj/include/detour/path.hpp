#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "detour/graph.hpp"

namespace detour {

// Ordered sequence of distinct vertex labels. Adjacency of consecutive
// vertices is a property of a host graph, checked by is_valid_in().
class Path {
 public:
  Path() = default;

  explicit Path(std::vector<int> verts) : verts_(std::move(verts)) {
    if (verts_.empty()) throw std::invalid_argument("empty path");
    std::vector<int> sorted = verts_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0) throw std::invalid_argument("negative vertex label in path");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("repeated vertex in path");
  }

  Path(std::initializer_list<int> verts) : Path(std::vector<int>(verts)) {}

  int order() const { return static_cast<int>(verts_.size()); }
  const std::vector<int>& vertices() const { return verts_; }
  int operator[](int i) const { return verts_[static_cast<std::size_t>(i)]; }
  int front() const { return verts_.front(); }
  int back() const { return verts_.back(); }

  // Position of v on the path, or -1.
  int index_of(int v) const {
    auto it = std::find(verts_.begin(), verts_.end(), v);
    return it == verts_.end() ? -1 : static_cast<int>(it - verts_.begin());
  }

  bool contains(int v) const { return index_of(v) >= 0; }

  bool contains_edge(const Edge& e) const {
    for (std::size_t i = 0; i + 1 < verts_.size(); ++i)
      if (Edge(verts_[i], verts_[i + 1]) == e) return true;
    return false;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(verts_.size() > 0 ? verts_.size() - 1 : 0);
    for (std::size_t i = 0; i + 1 < verts_.size(); ++i)
      out.emplace_back(verts_[i], verts_[i + 1]);
    return out;
  }

  Path reversed() const {
    Path p = *this;
    std::reverse(p.verts_.begin(), p.verts_.end());
    return p;
  }

  // A path and its reverse are the same detour; the canonical orientation
  // puts the smaller endpoint first.
  Path canonical() const { return front() <= back() ? *this : reversed(); }

  bool is_valid_in(const Graph& g) const {
    if (verts_.empty()) return false;
    for (int v : verts_)
      if (v >= g.order()) return false;
    for (std::size_t i = 0; i + 1 < verts_.size(); ++i)
      if (!g.has_edge(verts_[i], verts_[i + 1])) return false;
    return true;
  }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) { return a.verts_ <=> b.verts_; }

 private:
  std::vector<int> verts_;
};

inline std::string to_string(const Path& p) {
  std::string out;
  for (int i = 0; i < p.order(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

}  // namespace detour
