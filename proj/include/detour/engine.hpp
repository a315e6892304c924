#pragma once

#include <string>

#include "detour/dfs.hpp"
#include "detour/dp.hpp"
#include "detour/graph.hpp"
#include "detour/report.hpp"

namespace detour {

enum class Engine { dp, dfs, automatic };

inline Engine engine_from_name(const std::string& name) {
  if (name == "dp") return Engine::dp;
  if (name == "dfs") return Engine::dfs;
  if (name == "auto") return Engine::automatic;
  throw std::invalid_argument("unknown engine '" + name + "' (expected dp|dfs|auto)");
}

inline const char* engine_name(Engine e) {
  switch (e) {
    case Engine::dp: return "dp";
    case Engine::dfs: return "dfs";
    default: return "auto";
  }
}

// (L, f) under the chosen engine. `auto` takes the DP when the state table
// fits and the exhaustive DFS otherwise.
inline DetourReport count_detours(const Graph& g, Engine engine = Engine::automatic) {
  switch (engine) {
    case Engine::dp: return count_detours_dp(g);
    case Engine::dfs: return count_detours_dfs(g);
    default:
      return g.order() <= kDpOrderCap ? count_detours_dp(g) : count_detours_dfs(g);
  }
}

}  // namespace detour
