#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "detour/connectivity.hpp"
#include "detour/engine.hpp"
#include "detour/errors.hpp"
#include "detour/graph6.hpp"

namespace detour {

// One scanned graph. Everything is recomputable from the graph6 string;
// that is what witness re-verification does.
struct ScanRecord {
  std::string graph6;
  int n = 0;
  int delta = 0;
  int kappa = 0;
  int L = 0;
  std::uint64_t f = 0;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

inline ScanRecord compute_record(const std::string& g6, Engine engine = Engine::automatic) {
  Graph g = g6_decode(g6);
  DetourReport r = count_detours(g, engine);
  ScanRecord rec;
  rec.graph6 = g6;
  rec.n = g.order();
  rec.delta = g.min_degree();
  rec.kappa = connectivity_for_record(g);
  rec.L = r.order;
  rec.f = r.count;
  return rec;
}

// Recompute from graph6 and compare; throws EngineMismatchError when a
// stored record does not survive recomputation.
inline void verify_record(const ScanRecord& rec, Engine engine = Engine::automatic) {
  ScanRecord fresh = compute_record(rec.graph6, engine);
  if (!(fresh == rec))
    throw EngineMismatchError("record for " + rec.graph6 +
                              " failed re-verification: stored (n=" + std::to_string(rec.n) +
                              " delta=" + std::to_string(rec.delta) + " kappa=" +
                              std::to_string(rec.kappa) + " L=" + std::to_string(rec.L) +
                              " f=" + std::to_string(rec.f) + "), recomputed (n=" +
                              std::to_string(fresh.n) + " delta=" + std::to_string(fresh.delta) +
                              " kappa=" + std::to_string(fresh.kappa) + " L=" +
                              std::to_string(fresh.L) + " f=" + std::to_string(fresh.f) + ")");
}

inline nlohmann::ordered_json record_to_json(const ScanRecord& rec) {
  nlohmann::ordered_json j;
  j["graph6"] = rec.graph6;
  j["n"] = rec.n;
  j["delta"] = rec.delta;
  j["kappa"] = rec.kappa;
  j["L"] = rec.L;
  j["f"] = rec.f;
  return j;
}

inline ScanRecord record_from_json(const nlohmann::json& j) {
  ScanRecord rec;
  rec.graph6 = j.at("graph6").get<std::string>();
  rec.n = j.at("n").get<int>();
  rec.delta = j.at("delta").get<int>();
  rec.kappa = j.at("kappa").get<int>();
  rec.L = j.at("L").get<int>();
  rec.f = j.at("f").get<std::uint64_t>();
  return rec;
}

inline std::string record_csv_header() { return "graph6,n,delta,kappa,L,f"; }

inline std::string record_to_csv(const ScanRecord& rec) {
  return rec.graph6 + ',' + std::to_string(rec.n) + ',' + std::to_string(rec.delta) + ',' +
         std::to_string(rec.kappa) + ',' + std::to_string(rec.L) + ',' + std::to_string(rec.f);
}

// Human form; the trailing annotation surfaces the detour-order lower bound
// min(2*delta+1, n) that every connected graph must meet.
inline std::string record_to_human(const ScanRecord& rec) {
  std::string line = "n=" + std::to_string(rec.n) + " delta=" + std::to_string(rec.delta) +
                     " kappa=" + std::to_string(rec.kappa) + " L=" + std::to_string(rec.L) +
                     " f=" + std::to_string(rec.f);
  if (rec.kappa >= 1 || rec.n == 1) {
    int bound = std::min(2 * rec.delta + 1, rec.n);
    line += "  [L >= min(2*delta+1, n) = " + std::to_string(bound) + ": " +
            (rec.L >= bound ? "ok" : "VIOLATED") + "]";
  } else {
    line += "  [disconnected]";
  }
  return line;
}

}  // namespace detour
