#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detour/filter.hpp"
#include "detour/record.hpp"

namespace detour {

// Aggregate over one (k, n) cell of the catalog: a = min f, b = min odd f
// (absent when no odd f occurs), witnesses attaining each minimum, and the
// full f-spectrum. On a partial corpus the minima are upper bounds only and
// are flagged as such.
struct SearchSummary {
  int k = 0;
  int n = 0;
  DegreeMode mode = DegreeMode::at_least;
  bool complete = false;
  std::uint64_t graphs = 0;
  std::optional<std::uint64_t> a_value;
  std::optional<std::uint64_t> b_value;
  std::vector<std::string> a_witnesses;
  std::vector<std::string> b_witnesses;
  std::map<std::uint64_t, std::uint64_t> spectrum;
};

inline constexpr int kDefaultWitnessCap = 10;

class Tabulator {
 public:
  Tabulator(int k, int n, DegreeMode mode, bool complete, int witness_cap = kDefaultWitnessCap)
      : witness_cap_(witness_cap) {
    summary_.k = k;
    summary_.n = n;
    summary_.mode = mode;
    summary_.complete = complete;
  }

  void add(const ScanRecord& rec) {
    if (rec.n != summary_.n || rec.kappa < 1) return;
    if (summary_.mode == DegreeMode::exact ? rec.delta != summary_.k
                                           : rec.delta < summary_.k)
      return;
    ++summary_.graphs;
    ++summary_.spectrum[rec.f];
    take_min(summary_.a_value, a_raw_, rec);
    if (rec.f % 2 == 1) take_min(summary_.b_value, b_raw_, rec);
  }

  // Witnesses are re-verified from their graph6 strings before the summary
  // is released; a mismatch is an engine bug and aborts.
  SearchSummary finish() {
    for (const ScanRecord& rec : a_raw_) {
      verify_record(rec);
      summary_.a_witnesses.push_back(rec.graph6);
    }
    for (const ScanRecord& rec : b_raw_) {
      verify_record(rec);
      summary_.b_witnesses.push_back(rec.graph6);
    }
    return summary_;
  }

 private:
  void take_min(std::optional<std::uint64_t>& best, std::vector<ScanRecord>& witnesses,
                const ScanRecord& rec) {
    if (!best || rec.f < *best) {
      best = rec.f;
      witnesses.clear();
    }
    if (rec.f == *best && witnesses.size() < static_cast<std::size_t>(witness_cap_))
      witnesses.push_back(rec);
  }

  int witness_cap_;
  SearchSummary summary_;
  std::vector<ScanRecord> a_raw_;
  std::vector<ScanRecord> b_raw_;
};

// Witness hunt: collect up to `cap` records whose f equals the target
// (structural filters are assumed applied upstream by the scan). Each hit
// is re-verified before it is kept.
class WitnessCollector {
 public:
  WitnessCollector(std::uint64_t f_target, int cap = kDefaultWitnessCap)
      : target_(f_target), cap_(cap) {}

  void add(const ScanRecord& rec) {
    if (rec.f != target_) return;
    ++matches_;
    if (full()) return;
    verify_record(rec);
    witnesses_.push_back(rec);
  }

  bool full() const { return cap_ > 0 && witnesses_.size() >= static_cast<std::size_t>(cap_); }
  std::uint64_t matches() const { return matches_; }
  const std::vector<ScanRecord>& witnesses() const { return witnesses_; }

 private:
  std::uint64_t target_;
  int cap_;
  std::uint64_t matches_ = 0;
  std::vector<ScanRecord> witnesses_;
};

}  // namespace detour
