#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>

#include "detour/errors.hpp"
#include "detour/graph.hpp"

namespace detour {

// Short-form graph6 codec.
//
// Layout of a line for a graph of order n <= 62:
//   byte 0:      n + 63
//   bytes 1...:  the upper-triangle bits in column order
//                (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...
//                packed big-endian into 6-bit groups, each group emitted as
//                byte group+63, last group zero-padded on the right.
// Long form (first byte 126, n > 62) is out of scope and rejected.

namespace g6_detail {

inline std::size_t body_bytes(int n) {
  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace g6_detail

inline Graph g6_decode(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty graph6 string", 0);
  unsigned char head = static_cast<unsigned char>(text[0]);
  if (head == 126)
    throw Graph6Error("long-form graph6 (order > 62) is not supported", 0);
  if (head < 63 || head > 126) throw Graph6Error("byte outside graph6 range 63..126", 0);
  int n = head - 63;
  if (n < 1) throw Graph6Error("graph of order 0 is not supported", 0);

  std::size_t expected = 1 + g6_detail::body_bytes(n);
  if (text.size() != expected)
    throw Graph6Error("expected " + std::to_string(expected) + " bytes for order " +
                          std::to_string(n) + ", got " + std::to_string(text.size()),
                      std::min(text.size(), expected));

  Graph g(n);
  std::size_t bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      std::size_t byte_index = 1 + bit / 6;
      unsigned char c = static_cast<unsigned char>(text[byte_index]);
      if (c < 63 || c > 126)
        throw Graph6Error("byte outside graph6 range 63..126", byte_index);
      if ((c - 63) >> (5 - bit % 6) & 1) g.add_edge(row, col);
    }
  }
  return g;
}

inline std::string g6_encode(const Graph& g) {
  int n = g.order();
  if (n > 62) throw CapacityError("graph6 short form supports order <= 62");
  std::string out(1 + g6_detail::body_bytes(n), char(63));
  out[0] = static_cast<char>(63 + n);
  std::size_t bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      if (g.has_edge(row, col))
        out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
    }
  }
  return out;
}

// Line-oriented graph6 reading. Strips trailing CR/LF, skips blank lines and
// the optional ">>graph6<<" header (which some writers glue to the first
// graph). Returns false at end of input; on success `line` holds one bare
// graph6 string and `line_no` its 1-based line number.
inline bool next_graph6_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    constexpr std::string_view header = ">>graph6<<";
    if (line.starts_with(header)) line.erase(0, header.size());
    if (!line.empty()) return true;
  }
  return false;
}

}  // namespace detour
