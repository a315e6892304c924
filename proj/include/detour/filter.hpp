#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "detour/connectivity.hpp"
#include "detour/graph.hpp"

namespace detour {

enum class DegreeMode { exact, at_least };
enum class Parity { odd, even };

inline DegreeMode degree_mode_from_name(const std::string& name) {
  if (name == "exact") return DegreeMode::exact;
  if (name == "atleast" || name == "at-least") return DegreeMode::at_least;
  throw std::invalid_argument("unknown min-degree mode '" + name + "' (exact|atleast)");
}

inline const char* degree_mode_name(DegreeMode m) {
  return m == DegreeMode::exact ? "exact" : "atleast";
}

// Predicate bundle for catalog scans. Structural filters (order, degree,
// connectivity) run before any detour computation; the f-dependent filters
// (traceability, parity, target) run after. The default "at least k"
// degree mode matches the hypotheses being tested; "exactly k" is the other
// reading of Gamma(k,n) and is always recorded in output.
struct FilterSpec {
  std::optional<int> order;
  std::optional<int> min_degree;
  DegreeMode degree_mode = DegreeMode::at_least;
  bool require_connected = false;
  std::optional<int> connectivity_exact;
  std::optional<int> connectivity_min;
  bool require_traceable = false;
  std::optional<Parity> f_parity;
  std::optional<std::uint64_t> f_target;

  bool structural_pass(const Graph& g) const {
    if (order && g.order() != *order) return false;
    if (min_degree) {
      int d = g.min_degree();
      if (degree_mode == DegreeMode::exact ? d != *min_degree : d < *min_degree) return false;
    }
    bool need_connected = require_connected || connectivity_exact.value_or(0) >= 1 ||
                          connectivity_min.value_or(0) >= 1;
    if (need_connected && !g.is_connected()) return false;
    if (connectivity_min) {
      int m = *connectivity_min;
      if (m >= 2 && !is_biconnected(g)) return false;
      if (m >= 3 && vertex_connectivity(g) < m) return false;
    }
    if (connectivity_exact) {
      int want = *connectivity_exact;
      if (want == 0) {
        if (g.is_connected() && g.order() > 1) return false;
      } else {
        if (!g.is_connected()) return false;
        if (vertex_connectivity(g) != want) return false;
      }
    }
    return true;
  }

  bool report_pass(int n, int L, std::uint64_t f) const {
    if (require_traceable && L != n) return false;
    if (f_parity && (f % 2 == 0) != (*f_parity == Parity::even)) return false;
    if (f_target && f != *f_target) return false;
    return true;
  }

  bool has_post_filter() const { return require_traceable || f_parity || f_target; }

  // Canonical one-line rendering; stored in resume logs so a log produced
  // under one filter is not silently reused under another.
  std::string describe() const {
    std::string out;
    auto app = [&](const std::string& s) {
      if (!out.empty()) out += ',';
      out += s;
    };
    if (order) app("n=" + std::to_string(*order));
    if (min_degree)
      app(std::string("delta") + (degree_mode == DegreeMode::exact ? "=" : ">=") +
          std::to_string(*min_degree));
    if (require_connected) app("connected");
    if (connectivity_exact) app("kappa=" + std::to_string(*connectivity_exact));
    if (connectivity_min) app("kappa>=" + std::to_string(*connectivity_min));
    if (require_traceable) app("traceable");
    if (f_parity) app(std::string("parity=") + (*f_parity == Parity::odd ? "odd" : "even"));
    if (f_target) app("f=" + std::to_string(*f_target));
    return out.empty() ? "none" : out;
  }
};

}  // namespace detour
