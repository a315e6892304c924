#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <istream>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "detour/errors.hpp"
#include "detour/filter.hpp"
#include "detour/graph6.hpp"
#include "detour/record.hpp"

namespace detour {

struct ScanOptions {
  FilterSpec filter;
  Engine engine = Engine::automatic;
  int jobs = 1;
  double audit_fraction = 0.01;  // share of graphs recomputed on the other engine
  std::string resume_log;        // append-only jsonl record log; empty = off
  bool abort_on_decode_error = false;
  std::uint64_t limit = 0;  // max emitted records; 0 = unlimited
};

struct ScanStats {
  std::uint64_t lines = 0;
  std::uint64_t decode_errors = 0;
  std::uint64_t filtered = 0;
  std::uint64_t emitted = 0;
  std::uint64_t resumed = 0;
  std::uint64_t audited = 0;
};

// Line feeds for the scanner: a graph6 stream or an in-memory batch.
using LineSource = std::function<bool(std::string&, std::size_t&)>;

inline LineSource stream_line_source(std::istream& in) {
  auto line_no = std::make_shared<std::size_t>(0);
  return [&in, line_no](std::string& line, std::size_t& no) {
    if (!next_graph6_line(in, line, *line_no)) return false;
    no = *line_no;
    return true;
  };
}

inline LineSource vector_line_source(std::vector<std::string> lines) {
  auto state = std::make_shared<std::pair<std::vector<std::string>, std::size_t>>(
      std::move(lines), 0);
  return [state](std::string& line, std::size_t& no) {
    if (state->second >= state->first.size()) return false;
    line = state->first[state->second++];
    no = state->second;
    return true;
  };
}

namespace scan_detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Audit selection is a pure function of the graph6 string, so the audited
// subset does not depend on worker count or input order.
inline bool audit_selected(const std::string& g6, double fraction) {
  if (fraction <= 0.0) return false;
  if (fraction >= 1.0) return true;
  return static_cast<double>(fnv1a(g6) % 1000000) < fraction * 1000000.0;
}

struct LineOutcome {
  std::size_t line_no = 0;
  std::string text;
  std::optional<ScanRecord> record;  // empty: filtered out
  std::string decode_error;          // nonempty: undecodable line
  bool audited = false;
};

inline LineOutcome process_line(const std::string& text, std::size_t line_no,
                                const ScanOptions& opt) {
  LineOutcome out;
  out.line_no = line_no;
  out.text = text;
  Graph g;
  try {
    g = g6_decode(text);
  } catch (const Graph6Error& e) {
    out.decode_error = e.what();
    return out;
  }
  if (!opt.filter.structural_pass(g)) return out;

  Engine primary = opt.engine;
  if (primary == Engine::automatic)
    primary = g.order() <= kDpOrderCap ? Engine::dp : Engine::dfs;
  DetourReport r = count_detours(g, primary);

  if (audit_selected(text, opt.audit_fraction)) {
    Engine alternate = primary == Engine::dp ? Engine::dfs : Engine::dp;
    if (alternate == Engine::dfs || g.order() <= kDpOrderCap) {
      out.audited = true;
      DetourReport alt = count_detours(g, alternate);
      if (alt.order != r.order || alt.count != r.count)
        throw EngineMismatchError("engines disagree on " + text + ": " + engine_name(primary) +
                                  " says L=" + std::to_string(r.order) + " f=" +
                                  std::to_string(r.count) + ", " + engine_name(alternate) +
                                  " says L=" + std::to_string(alt.order) + " f=" +
                                  std::to_string(alt.count));
    }
  }

  if (!opt.filter.report_pass(g.order(), r.order, r.count)) return out;

  ScanRecord rec;
  rec.graph6 = text;
  rec.n = g.order();
  rec.delta = g.min_degree();
  rec.kappa = connectivity_for_record(g);
  rec.L = r.order;
  rec.f = r.count;
  out.record = rec;
  return out;
}

}  // namespace scan_detail

// Streamed catalog scan. Structural filters run before the engines, the
// f-filters after; records are handed to `on_record` in input order no
// matter how many workers run. `on_diag` receives human-readable notes
// (decode failures, resume-log warnings).
//
// With a resume log, already-logged graph6 keys are re-emitted from the log
// instead of recomputed, and fresh records are appended as they complete;
// an interrupted scan picks up where it stopped.
template <typename RecordFn, typename DiagFn>
ScanStats scan_lines(const LineSource& source, const ScanOptions& opt, RecordFn&& on_record,
                     DiagFn&& on_diag) {
  ScanStats stats;

  std::unordered_map<std::string, ScanRecord> logged;
  std::ofstream log_out;
  if (!opt.resume_log.empty()) {
    std::ifstream log_in(opt.resume_log);
    if (log_in) {
      std::string line;
      std::size_t log_line = 0;
      while (std::getline(log_in, line)) {
        ++log_line;
        if (line.empty()) continue;
        if (line[0] == '#') {
          auto pos = line.find("filter=");
          if (pos != std::string::npos && line.substr(pos + 7) != opt.filter.describe())
            on_diag("resume log " + opt.resume_log + " was written under filter '" +
                    line.substr(pos + 7) + "', current filter is '" + opt.filter.describe() +
                    "'");
          continue;
        }
        try {
          ScanRecord rec = record_from_json(nlohmann::json::parse(line));
          logged.emplace(rec.graph6, std::move(rec));
        } catch (const std::exception&) {
          on_diag("resume log " + opt.resume_log + ": skipping unparsable line " +
                  std::to_string(log_line));
        }
      }
    }
    bool fresh = logged.empty();
    log_out.open(opt.resume_log, std::ios::app);
    if (!log_out) throw std::runtime_error("cannot open resume log " + opt.resume_log);
    if (fresh) log_out << "# detour scan log filter=" << opt.filter.describe() << "\n";
  }
  const bool resuming = !opt.resume_log.empty();
  std::unordered_set<std::string> emitted_keys;

  int jobs = std::max(1, opt.jobs);
  constexpr std::size_t kBlock = 4096;

  std::vector<std::pair<std::string, std::size_t>> block;
  block.reserve(kBlock);
  bool exhausted = false;
  bool limit_hit = false;

  auto emit = [&](scan_detail::LineOutcome& out) {
    ++stats.lines;
    if (out.audited) ++stats.audited;
    if (!out.decode_error.empty()) {
      ++stats.decode_errors;
      on_diag("line " + std::to_string(out.line_no) + ": " + out.decode_error);
      if (opt.abort_on_decode_error)
        throw Graph6Error("line " + std::to_string(out.line_no) + ": " + out.decode_error, 0);
      return;
    }
    if (!out.record) {
      ++stats.filtered;
      return;
    }
    if (resuming && !emitted_keys.insert(out.text).second) return;  // duplicate input line
    on_record(*out.record);
    ++stats.emitted;
    if (log_out.is_open()) log_out << record_to_json(*out.record).dump() << "\n";
    if (opt.limit && stats.emitted >= opt.limit) limit_hit = true;
  };

  while (!exhausted && !limit_hit) {
    block.clear();
    std::string line;
    std::size_t line_no = 0;
    while (block.size() < kBlock && source(line, line_no)) block.emplace_back(line, line_no);
    if (block.empty()) break;
    exhausted = block.size() < kBlock;

    std::vector<scan_detail::LineOutcome> results(block.size());
    std::vector<char> from_log(block.size(), 0);

    auto work = [&](std::size_t idx) {
      const auto& [text, no] = block[idx];
      if (resuming) {
        auto it = logged.find(text);
        if (it != logged.end()) {
          results[idx].line_no = no;
          results[idx].text = text;
          results[idx].record = it->second;
          from_log[idx] = 1;
          return;
        }
      }
      results[idx] = scan_detail::process_line(text, no, opt);
    };

    if (jobs <= 1 || block.size() < 2) {
      for (std::size_t i = 0; i < block.size(); ++i) work(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr failure;
      std::mutex failure_mutex;
      auto runner = [&] {
        try {
          for (std::size_t i = next.fetch_add(1); i < block.size(); i = next.fetch_add(1))
            work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      };
      std::vector<std::thread> pool;
      int workers = static_cast<int>(std::min<std::size_t>(jobs, block.size()));
      pool.reserve(static_cast<std::size_t>(workers));
      for (int t = 0; t < workers; ++t) pool.emplace_back(runner);
      for (std::thread& t : pool) t.join();
      if (failure) std::rethrow_exception(failure);
    }

    for (std::size_t i = 0; i < block.size() && !limit_hit; ++i) {
      bool was_logged = from_log[i] != 0;
      if (was_logged) {
        ++stats.lines;
        if (!emitted_keys.insert(results[i].text).second) continue;
        ++stats.resumed;
        on_record(*results[i].record);
        ++stats.emitted;
        if (opt.limit && stats.emitted >= opt.limit) limit_hit = true;
      } else {
        emit(results[i]);
      }
    }
    if (log_out.is_open()) log_out.flush();
  }
  return stats;
}

}  // namespace detour
