#include <catch2/catch.hpp>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "detour/families.hpp"
#include "detour/generator.hpp"
#include "detour/graph6.hpp"
#include "detour/record.hpp"
#include "detour/scan.hpp"
#include "detour/tabulate.hpp"
#include "detour/verify.hpp"

using detour::FilterSpec;
using detour::Graph;
using detour::ScanOptions;
using detour::ScanRecord;
using detour::ScanStats;

namespace {

std::vector<ScanRecord> run_scan(const std::vector<std::string>& lines, const ScanOptions& opt,
                                  std::vector<std::string>* diags = nullptr,
                                  ScanStats* stats_out = nullptr) {
  std::vector<ScanRecord> records;
  ScanStats stats = detour::scan_lines(
      detour::vector_line_source(lines), opt,
      [&](const ScanRecord& rec) { records.push_back(rec); },
      [&](const std::string& d) {
        if (diags) diags->push_back(d);
      });
  if (stats_out) *stats_out = stats;
  return records;
}

std::vector<std::string> labeled_lines(int n, const FilterSpec& spec) {
  std::vector<std::string> lines;
  detour::for_each_labeled_graph(n, spec,
                                 [&](const Graph& g) { lines.push_back(detour::g6_encode(g)); });
  return lines;
}

struct TempPath {
  std::filesystem::path path;
  explicit TempPath(const std::string& stem)
      : path(std::filesystem::temp_directory_path() /
             (stem + "-" + std::to_string(::getpid()) + ".jsonl")) {
    std::filesystem::remove(path);
  }
  ~TempPath() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("scan of a single H9 line yields the pinned record") {
  std::string h9 = detour::g6_encode(detour::build_h9());
  auto records = run_scan({h9}, {});
  REQUIRE(records.size() == 1);
  CHECK(records[0].graph6 == h9);
  CHECK(records[0].n == 9);
  CHECK(records[0].delta == 2);
  CHECK(records[0].kappa == 1);
  CHECK(records[0].L == 9);
  CHECK(records[0].f == 9);
}

TEST_CASE("scan of an empty stream") {
  ScanStats stats;
  auto records = run_scan({}, {}, nullptr, &stats);
  CHECK(records.empty());
  CHECK(stats.lines == 0);
}

TEST_CASE("decode failures: skip-and-log vs abort") {
  std::string good = detour::g6_encode(detour::build_cycle(4));
  std::vector<std::string> lines{good, "not-a-graph6-&&&", good};

  SECTION("skip policy logs the line number and carries on") {
    std::vector<std::string> diags;
    ScanStats stats;
    auto records = run_scan(lines, {}, &diags, &stats);
    CHECK(records.size() == 2);
    CHECK(stats.decode_errors == 1);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].find("line 2") != std::string::npos);
  }

  SECTION("abort policy throws") {
    ScanOptions opt;
    opt.abort_on_decode_error = true;
    CHECK_THROWS_AS(run_scan(lines, opt), detour::Graph6Error);
  }
}

TEST_CASE("structural and f filters") {
  ScanOptions opt;
  opt.filter.order = 4;
  opt.filter.min_degree = 2;
  opt.filter.require_connected = true;
  auto all4 = labeled_lines(4, {});
  auto records = run_scan(all4, opt);
  // 3 labeled 4-cycles + 6 diamonds + K4
  CHECK(records.size() == 10);
  for (const auto& r : records) {
    CHECK(r.n == 4);
    CHECK(r.delta >= 2);
    CHECK(r.kappa >= 1);
  }

  SECTION("f target keeps only the four-detour graphs") {
    opt.filter.f_target = 4;
    auto hits = run_scan(all4, opt);
    CHECK_FALSE(hits.empty());
    for (const auto& r : hits) CHECK(r.f == 4);
    CHECK(hits.size() < records.size());
  }

  SECTION("traceability filter") {
    opt.filter.require_traceable = true;
    for (const auto& r : run_scan(all4, opt)) CHECK(r.L == r.n);
  }

  SECTION("parity filter") {
    ScanOptions podd;
    podd.filter.f_parity = detour::Parity::odd;
    for (const auto& r : run_scan(labeled_lines(5, {}), podd)) CHECK(r.f % 2 == 1);
  }
}

TEST_CASE("worker count does not change the record stream") {
  FilterSpec gen;
  gen.require_connected = true;
  auto lines = labeled_lines(5, gen);
  REQUIRE(lines.size() > 300);

  ScanOptions seq;
  seq.jobs = 1;
  ScanOptions par;
  par.jobs = 4;
  par.audit_fraction = 1.0;  // cross-engine audit on every graph, in parallel

  auto a = run_scan(lines, seq);
  auto b = run_scan(lines, par);
  REQUIRE(a.size() == b.size());
  CHECK(a == b);  // same records, same (input) order
}

TEST_CASE("resume log short-circuits recomputation and survives reruns") {
  TempPath log("detour-resume-test");
  FilterSpec gen;
  gen.order = 5;
  gen.require_connected = true;
  gen.min_degree = 2;
  auto lines = labeled_lines(5, gen);

  ScanOptions opt;
  opt.resume_log = log.path.string();

  ScanStats first_stats;
  auto first = run_scan(lines, opt, nullptr, &first_stats);
  CHECK(first_stats.resumed == 0);
  CHECK(first_stats.emitted == first.size());

  ScanStats second_stats;
  auto second = run_scan(lines, opt, nullptr, &second_stats);
  CHECK(second == first);
  CHECK(second_stats.resumed == second.size());

  SECTION("a partial log resumes the missing tail") {
    TempPath partial("detour-resume-partial");
    {
      std::ofstream out(partial.path);
      out << "# detour scan log filter=" << opt.filter.describe() << "\n";
      for (std::size_t i = 0; i < first.size() / 2; ++i)
        out << detour::record_to_json(first[i]).dump() << "\n";
    }
    ScanOptions resume_opt;
    resume_opt.resume_log = partial.path.string();
    ScanStats stats;
    auto resumed = run_scan(lines, resume_opt, nullptr, &stats);
    CHECK(resumed == first);
    CHECK(stats.resumed == first.size() / 2);
  }

  SECTION("filter drift is called out") {
    ScanOptions drift;
    drift.resume_log = log.path.string();
    drift.filter.min_degree = 1;
    std::vector<std::string> diags;
    run_scan(lines, drift, &diags);
    bool warned = false;
    for (const auto& d : diags) warned |= d.find("filter") != std::string::npos;
    CHECK(warned);
  }
}

TEST_CASE("scan limit stops the stream early") {
  FilterSpec gen;
  gen.require_connected = true;
  auto lines = labeled_lines(4, gen);
  ScanOptions opt;
  opt.limit = 7;
  ScanStats stats;
  auto records = run_scan(lines, opt, nullptr, &stats);
  CHECK(records.size() == 7);
  CHECK(stats.emitted == 7);
}

TEST_CASE("record json round trip") {
  ScanRecord rec{"H???ABC", 9, 2, 1, 9, 9};
  CHECK(detour::record_from_json(detour::record_to_json(rec)) == rec);
  CHECK(detour::record_to_csv(rec) == "H???ABC,9,2,1,9,9");
}

TEST_CASE("theorem 1 verification") {
  detour::Theorem1Verifier verifier;
  ScanOptions opt;
  opt.filter.require_connected = true;
  opt.filter.min_degree = 2;
  for (const auto& rec : run_scan(labeled_lines(4, opt.filter), opt)) verifier.add(rec);
  auto result = verifier.finish(/*complete_corpus=*/true);
  CHECK(result.pass);
  CHECK(result.min_f_by_order.at(4) == 4);

  SECTION("planted f=3 record is reported") {
    detour::Theorem1Verifier bad;
    bad.add(ScanRecord{"fake", 4, 2, 1, 4, 3});
    auto r = bad.finish(false);
    CHECK_FALSE(r.pass);
    REQUIRE(r.counterexamples.size() == 1);
    CHECK(r.counterexamples[0].graph6 == "fake");
  }

  SECTION("a complete corpus whose minimum is not 4 fails") {
    detour::Theorem1Verifier off;
    off.add(ScanRecord{"fake", 4, 2, 1, 4, 5});
    CHECK_FALSE(off.finish(true).pass);
    CHECK(off.finish(true).violation_count == 0);
  }
}

TEST_CASE("theorem 2 verification") {
  detour::Theorem2Verifier verifier;
  std::vector<std::string> family_lines{detour::g6_encode(detour::build_h9())};
  for (int n = 9; n <= 14; ++n)
    family_lines.push_back(detour::g6_encode(detour::build_m(n)));
  for (const auto& rec : run_scan(family_lines, {})) verifier.add(rec);
  auto result = verifier.finish();
  CHECK(result.pass);
  CHECK(result.checked == family_lines.size());
  for (int n = 9; n <= 14; ++n) CHECK(result.min_f_by_order.at(n) == 9);
  CHECK(result.note.find("attained") != std::string::npos);

  SECTION("planted f=7 record is a counterexample") {
    detour::Theorem2Verifier bad;
    bad.add(ScanRecord{"fake", 9, 2, 1, 9, 7});
    auto r = bad.finish();
    CHECK_FALSE(r.pass);
    REQUIRE(r.counterexamples.size() == 1);
  }

  SECTION("even counts below 9 are fine") {
    detour::Theorem2Verifier ok;
    ok.add(ScanRecord{"fake", 9, 2, 1, 9, 4});
    CHECK(ok.finish().pass);
  }

  SECTION("records outside the hypothesis class are ignored") {
    detour::Theorem2Verifier ok;
    ok.add(ScanRecord{"fake", 8, 2, 1, 8, 7});   // order below 9
    ok.add(ScanRecord{"fake2", 9, 1, 1, 9, 7});  // min degree below 2
    ok.add(ScanRecord{"fake3", 9, 2, 0, 9, 7});  // disconnected
    auto r = ok.finish();
    CHECK(r.pass);
    CHECK(r.checked == 0);
  }
}

TEST_CASE("tabulation over complete small corpora") {
  auto tabulate_order = [&](int n) {
    detour::Tabulator tab(2, n, detour::DegreeMode::at_least, /*complete=*/true);
    ScanOptions opt;
    opt.filter.order = n;
    opt.filter.min_degree = 2;
    opt.filter.require_connected = true;
    for (const auto& rec : run_scan(labeled_lines(n, opt.filter), opt)) tab.add(rec);
    return tab.finish();
  };

  SECTION("a(2,4) = 4, all even counts") {
    auto s = tabulate_order(4);
    REQUIRE(s.a_value.has_value());
    CHECK(*s.a_value == 4);
    CHECK_FALSE(s.b_value.has_value());  // n=4 spectrum is {4, 6, 12}: no odd f
    CHECK_FALSE(s.a_witnesses.empty());
    CHECK(s.spectrum.at(4) > 0);
  }

  SECTION("a(2,5) = 4 and b(2,5) = 5 via the 5-cycle") {
    auto s = tabulate_order(5);
    REQUIRE(s.a_value.has_value());
    CHECK(*s.a_value == 4);
    REQUIRE(s.b_value.has_value());
    CHECK(*s.b_value == 5);
    for (const auto& w : s.b_witnesses) {
      Graph g = detour::g6_decode(w);
      CHECK(g.order() == 5);
      CHECK(g.edge_count() == 5);  // 2-regular on 5 vertices: the 5-cycle
    }
  }

  SECTION("empty domain stays empty") {
    detour::Tabulator tab(3, 4, detour::DegreeMode::exact, true);
    auto s = tab.finish();
    CHECK(s.graphs == 0);
    CHECK_FALSE(s.a_value.has_value());
    CHECK_FALSE(s.b_value.has_value());
  }

  SECTION("witness cap is honored") {
    detour::Tabulator tab(2, 4, detour::DegreeMode::at_least, true, /*witness_cap=*/2);
    ScanOptions opt;
    opt.filter.order = 4;
    opt.filter.min_degree = 2;
    opt.filter.require_connected = true;
    for (const auto& rec : run_scan(labeled_lines(4, opt.filter), opt)) tab.add(rec);
    auto s = tab.finish();
    CHECK(s.a_witnesses.size() == 2);
  }
}

TEST_CASE("witness search") {
  ScanOptions opt;
  opt.filter.order = 5;
  opt.filter.min_degree = 2;
  opt.filter.require_connected = true;
  auto lines = labeled_lines(5, opt.filter);

  SECTION("f=4 witnesses exist at order 5") {
    detour::WitnessCollector collector(4, 5);
    for (const auto& rec : run_scan(lines, opt)) collector.add(rec);
    CHECK(collector.matches() > 0);
    REQUIRE_FALSE(collector.witnesses().empty());
    CHECK(collector.witnesses().size() <= 5);
    for (const auto& w : collector.witnesses()) CHECK(w.f == 4);
  }

  SECTION("f=3 is impossible") {
    detour::WitnessCollector collector(3);
    for (const auto& rec : run_scan(lines, opt)) collector.add(rec);
    CHECK(collector.matches() == 0);
    CHECK(collector.witnesses().empty());
  }

  SECTION("corrupted witness records do not survive re-verification") {
    detour::WitnessCollector collector(7);
    ScanRecord lie = detour::compute_record(detour::g6_encode(detour::build_cycle(5)));
    lie.f = 7;  // f(C5) is 5
    CHECK_THROWS_AS(collector.add(lie), detour::EngineMismatchError);
  }

  SECTION("H9 turns up hunting kappa=1, f=9 in a mixed catalog") {
    std::string h9 = detour::g6_encode(detour::build_h9());
    std::vector<std::string> catalog{detour::g6_encode(detour::build_m(9)), h9,
                                     detour::g6_encode(detour::build_cycle(9))};
    ScanOptions cut;
    cut.filter.connectivity_exact = 1;  // drops the M graph (kappa 2) and C9 (kappa 2)
    detour::WitnessCollector collector(9);
    for (const auto& rec : run_scan(catalog, cut)) collector.add(rec);
    REQUIRE(collector.witnesses().size() == 1);
    CHECK(collector.witnesses()[0].graph6 == h9);
  }
}
