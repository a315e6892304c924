#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detour/record.hpp"

namespace detour {

struct VerifyResult {
  bool pass = true;
  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<ScanRecord> counterexamples;      // first few, for reporting
  std::map<int, std::uint64_t> min_f_by_order;  // over qualifying records
  std::string note;
};

inline constexpr std::size_t kCounterexampleKeep = 25;

// Every connected graph with min degree >= 2 and order >= 4 has at least
// four detours, and four is attained at every order. The minimum-equals-4
// part is only meaningful on a complete corpus for each order; pass
// complete=false for partial catalogs and only the f >= 4 half is enforced.
class Theorem1Verifier {
 public:
  void add(const ScanRecord& rec) {
    if (rec.n < 4 || rec.delta < 2 || rec.kappa < 1) return;
    ++result_.checked;
    auto [it, fresh] = result_.min_f_by_order.try_emplace(rec.n, rec.f);
    if (!fresh && rec.f < it->second) it->second = rec.f;
    if (rec.f < 4) {
      ++result_.violation_count;
      if (result_.counterexamples.size() < kCounterexampleKeep)
        result_.counterexamples.push_back(rec);
    }
  }

  VerifyResult finish(bool complete_corpus) {
    result_.pass = result_.violation_count == 0;
    if (complete_corpus) {
      for (const auto& [order, min_f] : result_.min_f_by_order) {
        if (min_f != 4) {
          result_.pass = false;
          result_.note += "minimum f at order " + std::to_string(order) + " is " +
                          std::to_string(min_f) + ", want 4; ";
        }
      }
    }
    return result_;
  }

 private:
  VerifyResult result_;
};

// No connected graph with min degree >= 2 and order >= 9 has an odd detour
// count below 9. Also reports where the odd minimum 9 is attained.
class Theorem2Verifier {
 public:
  void add(const ScanRecord& rec) {
    if (rec.n < 9 || rec.delta < 2 || rec.kappa < 1) return;
    ++result_.checked;
    if (rec.f % 2 == 0) return;
    auto [it, fresh] = min_odd_by_order_.try_emplace(rec.n, rec.f);
    if (!fresh && rec.f < it->second) it->second = rec.f;
    if (rec.f < 9) {
      ++result_.violation_count;
      if (result_.counterexamples.size() < kCounterexampleKeep)
        result_.counterexamples.push_back(rec);
    }
  }

  VerifyResult finish() {
    result_.pass = result_.violation_count == 0;
    result_.min_f_by_order = min_odd_by_order_;
    for (const auto& [order, min_odd] : min_odd_by_order_)
      if (min_odd == 9)
        result_.note += "odd minimum 9 attained at order " + std::to_string(order) + "; ";
    return result_;
  }

 private:
  VerifyResult result_;
  std::map<int, std::uint64_t> min_odd_by_order_;
};

}  // namespace detour
