#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace detour {

// Malformed graph6 input. `offset` is the byte position of the first
// offending byte within the line (or the position where input ended early).
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Input exceeds a hard size limit of the chosen method (DP state table,
// labeled generator, graph6 short form).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumeration aborted after hitting the emission limit. `count_so_far` is
// the number of detours found before giving up; at least one more exists.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, std::uint64_t count_so_far)
      : std::runtime_error(what), count_so_far_(count_so_far) {}

  std::uint64_t count_so_far() const { return count_so_far_; }

 private:
  std::uint64_t count_so_far_;
};

// A path count left the 64-bit range. Never silently wraps.
class CountOverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The two detour engines disagreed, or a witness failed re-verification.
// Always an implementation bug; aborts the scan that detected it.
class EngineMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw CountOverflowError("path count exceeds 64-bit range");
  return r;
}

}  // namespace detour
