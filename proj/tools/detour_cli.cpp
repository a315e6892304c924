// Command-line front end: every library capability as a subcommand with
// stable, scriptable output. Results go to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 domain/usage errors, 2 verification found a
// counterexample.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "detour/detour.hpp"

namespace {

using detour::Edge;
using detour::Engine;
using detour::FilterSpec;
using detour::Graph;
using detour::Path;
using detour::ScanRecord;
using nlohmann::ordered_json;

enum class Format { human, csv, jsonl };

Format format_from_name(const std::string& name) {
  if (name == "human") return Format::human;
  if (name == "csv") return Format::csv;
  if (name == "jsonl") return Format::jsonl;
  throw CLI::ValidationError("--format", "expected human|csv|jsonl");
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw CLI::ValidationError(what, "'" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw CLI::ValidationError(what, "empty list");
  return out;
}

// "4", "4..7", or "4,5,6"
std::vector<int> parse_order_list(const std::string& text) {
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    int lo = parse_int_list(text.substr(0, dots), "--labeled").front();
    int hi = parse_int_list(text.substr(dots + 2), "--labeled").front();
    if (lo > hi) throw CLI::ValidationError("--labeled", "empty range");
    std::vector<int> out;
    for (int n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  return parse_int_list(text, "--labeled");
}

// Compact filter syntax: k=2,n=7,kappa=1,kappa>=2,parity=odd,f=4,connected,traceable
void apply_filter_string(FilterSpec& spec, const std::string& text) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw CLI::ValidationError("--filter", "'" + item + "': " + why);
    };
    if (item == "connected") {
      spec.require_connected = true;
      continue;
    }
    if (item == "traceable") {
      spec.require_traceable = true;
      continue;
    }
    auto ge = item.find(">=");
    auto eq = item.find('=');
    try {
      if (ge != std::string::npos) {
        std::string key = item.substr(0, ge), value = item.substr(ge + 2);
        if (key == "kappa") spec.connectivity_min = std::stoi(value);
        else if (key == "k" || key == "delta") {
          spec.min_degree = std::stoi(value);
          spec.degree_mode = detour::DegreeMode::at_least;
        } else fail("unknown key '" + key + "'");
      } else if (eq != std::string::npos) {
        std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        if (key == "n") spec.order = std::stoi(value);
        else if (key == "k" || key == "delta") spec.min_degree = std::stoi(value);
        else if (key == "kappa") spec.connectivity_exact = std::stoi(value);
        else if (key == "kappamin") spec.connectivity_min = std::stoi(value);
        else if (key == "parity")
          spec.f_parity = value == "odd"    ? detour::Parity::odd
                          : value == "even" ? detour::Parity::even
                                            : throw std::invalid_argument(value);
        else if (key == "f") spec.f_target = std::stoull(value);
        else fail("unknown key '" + key + "'");
      } else {
        fail("expected key=value, key>=value, 'connected' or 'traceable'");
      }
    } catch (const CLI::ValidationError&) {
      throw;
    } catch (const std::exception&) {
      fail("bad value");
    }
  }
}

// Shared input plumbing. Graph commands take graph6 strings as positionals
// or a line stream; scan commands can also draw on the built-in labeled
// corpus for small orders.
struct InputOptions {
  std::vector<std::string> graphs;  // positional graph6 strings
  std::string input_path;           // file path or "-"
  std::string labeled;              // order list for the built-in generator
};

void add_stream_input(CLI::App* cmd, InputOptions& in, bool with_labeled) {
  cmd->add_option("--input", in.input_path, "graph6 lines from a file, or - for stdin");
  if (with_labeled)
    cmd->add_option("--labeled", in.labeled,
                    "scan every labeled graph of these orders (N, A..B or comma list; order <= " +
                        std::to_string(detour::kLabeledGeneratorCap) + ")");
}

detour::LineSource make_line_source(const InputOptions& in, std::unique_ptr<std::ifstream>& file) {
  if (!in.graphs.empty()) return detour::vector_line_source(in.graphs);
  if (!in.labeled.empty()) {
    auto orders = std::make_shared<std::vector<int>>(parse_order_list(in.labeled));
    for (int n : *orders)
      if (n < 1 || n > detour::kLabeledGeneratorCap)
        throw detour::CapacityError("--labeled order " + std::to_string(n) + " out of range 1.." +
                                    std::to_string(detour::kLabeledGeneratorCap));
    struct State {
      std::size_t order_idx = 0;
      std::uint64_t mask = 0;
      std::size_t line = 0;
    };
    auto state = std::make_shared<State>();
    return [orders, state](std::string& out, std::size_t& line_no) {
      while (state->order_idx < orders->size()) {
        int n = (*orders)[state->order_idx];
        std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        if (state->mask >= total) {
          ++state->order_idx;
          state->mask = 0;
          continue;
        }
        out = detour::g6_encode(detour::generator_detail::graph_from_edge_bits(n, state->mask));
        ++state->mask;
        line_no = ++state->line;
        return true;
      }
      return false;
    };
  }
  if (in.input_path.empty() || in.input_path == "-")
    return detour::stream_line_source(std::cin);
  file = std::make_unique<std::ifstream>(in.input_path);
  if (!*file) throw std::runtime_error("cannot open input file " + in.input_path);
  return detour::stream_line_source(*file);
}

// Materialized list for the per-graph commands (count/enumerate/edge-stats).
std::vector<std::string> gather_graph_lines(const InputOptions& in) {
  std::unique_ptr<std::ifstream> file;
  detour::LineSource source = make_line_source(in, file);
  std::vector<std::string> lines;
  std::string line;
  std::size_t no = 0;
  while (source(line, no)) lines.push_back(line);
  if (lines.empty()) throw std::runtime_error("no input graphs");
  return lines;
}

ordered_json path_to_json(const Path& p) {
  ordered_json arr = ordered_json::array();
  for (int i = 0; i < p.order(); ++i) arr.push_back(p[i]);
  return arr;
}

struct CountArgs {
  InputOptions in;
  std::string format = "human";
  std::string engine = "auto";
};

int run_count(const CountArgs& args) {
  Format format = format_from_name(args.format);
  Engine engine = detour::engine_from_name(args.engine);
  if (format == Format::csv) std::cout << detour::record_csv_header() << "\n";
  for (const std::string& line : gather_graph_lines(args.in)) {
    ScanRecord rec = detour::compute_record(line, engine);
    switch (format) {
      case Format::human: std::cout << detour::record_to_human(rec) << "\n"; break;
      case Format::csv: std::cout << detour::record_to_csv(rec) << "\n"; break;
      case Format::jsonl: std::cout << detour::record_to_json(rec).dump() << "\n"; break;
    }
  }
  return 0;
}

struct EnumerateArgs {
  InputOptions in;
  std::string format = "human";
  std::uint64_t limit = 1'000'000;
};

int run_enumerate(const EnumerateArgs& args) {
  Format format = format_from_name(args.format);
  std::vector<std::string> lines = gather_graph_lines(args.in);
  if (format == Format::csv) std::cout << "graph6,index,detour\n";
  for (const std::string& line : lines) {
    Graph g = detour::g6_decode(line);
    detour::EnumerateOptions opt;
    opt.emission_limit = args.limit;
    detour::DetourReport report = detour::enumerate_detours(g, opt);
    switch (format) {
      case Format::human:
        if (lines.size() > 1) std::cout << "# " << line << "\n";
        for (const Path& p : *report.detours) std::cout << detour::to_string(p) << "\n";
        break;
      case Format::csv: {
        std::size_t idx = 0;
        for (const Path& p : *report.detours) {
          std::string seq = detour::to_string(p);
          std::cout << line << ',' << idx++ << ",\"" << seq << "\"\n";
        }
        break;
      }
      case Format::jsonl: {
        ordered_json j = detour::record_to_json(detour::compute_record(line));
        ordered_json detours = ordered_json::array();
        for (const Path& p : *report.detours) detours.push_back(path_to_json(p));
        j["detours"] = std::move(detours);
        std::cout << j.dump() << "\n";
        break;
      }
    }
  }
  return 0;
}

struct EdgeStatsArgs {
  InputOptions in;
  std::string format = "human";
};

int run_edge_stats(const EdgeStatsArgs& args) {
  Format format = format_from_name(args.format);
  std::vector<std::string> lines = gather_graph_lines(args.in);
  if (format == Format::csv) std::cout << "graph6,u,v,detours\n";
  for (const std::string& line : lines) {
    Graph g = detour::g6_decode(line);
    auto counts = detour::edge_detour_counts(g);
    switch (format) {
      case Format::human:
        if (lines.size() > 1) std::cout << "# " << line << "\n";
        for (const auto& [e, c] : counts)
          std::cout << e.u << ' ' << e.v << ' ' << c << "\n";
        break;
      case Format::csv:
        for (const auto& [e, c] : counts)
          std::cout << line << ',' << e.u << ',' << e.v << ',' << c << "\n";
        break;
      case Format::jsonl: {
        ordered_json j = detour::record_to_json(detour::compute_record(line));
        ordered_json arr = ordered_json::array();
        for (const auto& [e, c] : counts) arr.push_back({e.u, e.v, c});
        j["edge_counts"] = std::move(arr);
        std::cout << j.dump() << "\n";
        break;
      }
    }
  }
  return 0;
}

struct FamiliesArgs {
  std::string name;
  int order = 0;
  bool order_given = false;
  std::string emit = "report";
  std::string base;
  std::string via;
};

Graph load_base_graph(const std::string& spec) {
  std::ifstream file(spec);
  if (file) {
    std::string line;
    std::size_t no = 0;
    if (!detour::next_graph6_line(file, line, no))
      throw std::runtime_error("no graph6 line in " + spec);
    return detour::g6_decode(line);
  }
  return detour::g6_decode(spec);
}

int run_families(FamiliesArgs& args) {
  detour::Family family = detour::family_from_name(args.name);
  if (!args.order_given) {
    if (family == detour::Family::bowtie) args.order = 5;
    else if (family == detour::Family::h9) args.order = 9;
    else throw std::runtime_error("family '" + args.name + "' needs an explicit order");
  }

  Graph g;
  if (family == detour::Family::h_extended) {
    if (args.base.empty())
      throw std::runtime_error("H-extended requires --base (graph6 string or file)");
    Graph base = load_base_graph(args.base);
    std::optional<Edge> via;
    if (!args.via.empty()) {
      auto uv = parse_int_list(args.via, "--via-edge");
      if (uv.size() != 2) throw std::runtime_error("--via-edge wants u,v");
      via = Edge(uv[0], uv[1]);
    }
    g = detour::build_h_extended(base, args.order, via);
  } else {
    g = detour::build({family, args.order});
  }

  std::string g6 = detour::g6_encode(g);
  if (args.emit == "g6") {
    std::cout << g6 << "\n";
  } else if (args.emit == "dot") {
    std::cout << "graph " << detour::family_name(family) << args.order << " {\n";
    for (const Edge& e : g.edges()) std::cout << "  " << e.u << " -- " << e.v << ";\n";
    std::cout << "}\n";
  } else if (args.emit == "report") {
    ScanRecord rec = detour::compute_record(g6);
    std::cout << "family=" << detour::family_name(family) << " order=" << args.order
              << " graph6=" << g6 << "\n"
              << detour::record_to_human(rec) << "\n";
  } else {
    throw std::runtime_error("--emit expects g6|report|dot");
  }
  return 0;
}

struct PsiArgs {
  std::string path;
  int i = 0;
  int j = 0;
  std::string graph;
  std::string format = "human";
};

int run_psi(const PsiArgs& args) {
  Format format = format_from_name(args.format);
  Path p(parse_int_list(args.path, "--path"));
  std::vector<Path> out = detour::psi_detours(p, args.i, args.j);

  if (!args.graph.empty()) {
    Graph g = detour::g6_decode(args.graph);
    Edge head(p[0], p[args.i - 1]);
    Edge tail(p[p.order() - 1], p[args.j - 1]);
    if (!p.is_valid_in(g)) throw std::domain_error("--path is not a path of --graph");
    if (!g.has_edge(head)) throw std::domain_error("chord " + to_string(head) + " is not an edge");
    if (!g.has_edge(tail)) throw std::domain_error("chord " + to_string(tail) + " is not an edge");
    int L = detour::detour_order(g);
    for (const Path& d : out) {
      if (!d.is_valid_in(g) || d.order() != L)
        throw std::domain_error("generated path " + detour::to_string(d) +
                                " is not a detour of --graph");
    }
    std::cerr << out.size() << " paths, all verified as detours (L=" << L << ")\n";
  }

  switch (format) {
    case Format::human:
      for (const Path& d : out) std::cout << detour::to_string(d) << "\n";
      break;
    case Format::csv: {
      std::cout << "index,detour\n";
      for (std::size_t idx = 0; idx < out.size(); ++idx)
        std::cout << idx << ",\"" << detour::to_string(out[idx]) << "\"\n";
      break;
    }
    case Format::jsonl: {
      ordered_json j;
      j["path"] = path_to_json(p);
      j["i"] = args.i;
      j["j"] = args.j;
      ordered_json arr = ordered_json::array();
      for (const Path& d : out) arr.push_back(path_to_json(d));
      j["detours"] = std::move(arr);
      std::cout << j.dump() << "\n";
      break;
    }
  }
  return 0;
}

struct ScanArgs {
  InputOptions in;
  std::string format = "jsonl";
  std::string engine = "auto";
  std::string filter;
  std::string degree_mode = "atleast";
  int jobs = 0;
  double audit = 0.01;
  std::string resume_log;
  std::string on_decode_error = "skip";
  std::uint64_t limit = 0;
};

detour::ScanOptions make_scan_options(const ScanArgs& args) {
  detour::ScanOptions opt;
  opt.filter.degree_mode = detour::degree_mode_from_name(args.degree_mode);
  if (!args.filter.empty()) apply_filter_string(opt.filter, args.filter);
  opt.engine = detour::engine_from_name(args.engine);
  opt.jobs = args.jobs > 0 ? args.jobs
                           : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  opt.audit_fraction = args.audit;
  opt.resume_log = args.resume_log;
  if (opt.resume_log.empty()) {
    if (const char* env = std::getenv("DETOUR_RESUME_LOG")) opt.resume_log = env;
  }
  if (args.on_decode_error == "abort") opt.abort_on_decode_error = true;
  else if (args.on_decode_error != "skip")
    throw std::runtime_error("--on-decode-error expects skip|abort");
  opt.limit = args.limit;
  return opt;
}

int run_scan(const ScanArgs& args) {
  Format format = format_from_name(args.format);
  detour::ScanOptions opt = make_scan_options(args);
  std::unique_ptr<std::ifstream> file;
  detour::LineSource source = make_line_source(args.in, file);

  if (format == Format::csv) std::cout << detour::record_csv_header() << "\n";
  detour::ScanStats stats = detour::scan_lines(
      source, opt,
      [&](const ScanRecord& rec) {
        switch (format) {
          case Format::human: std::cout << rec.graph6 << ": " << detour::record_to_human(rec) << "\n"; break;
          case Format::csv: std::cout << detour::record_to_csv(rec) << "\n"; break;
          case Format::jsonl: std::cout << detour::record_to_json(rec).dump() << "\n"; break;
        }
      },
      [](const std::string& diag) { std::cerr << "scan: " << diag << "\n"; });

  std::cerr << "scan: lines=" << stats.lines << " emitted=" << stats.emitted
            << " filtered=" << stats.filtered << " decode_errors=" << stats.decode_errors
            << " resumed=" << stats.resumed << " audited=" << stats.audited << "\n";
  return 0;
}

// Shared record intake for tabulate / witness-search / verify: either
// precomputed jsonl records (--records) or a graph6 scan.
struct RecordsInput {
  std::string records_path;
  ScanArgs scan;
};

template <typename Fn>
void feed_records(const RecordsInput& in, Fn&& fn) {
  if (!in.records_path.empty()) {
    std::ifstream file;
    std::istream* stream = &std::cin;
    if (in.records_path != "-") {
      file.open(in.records_path);
      if (!file) throw std::runtime_error("cannot open records file " + in.records_path);
      stream = &file;
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(*stream, line)) {
      ++line_no;
      if (line.empty() || line[0] == '#') continue;
      try {
        fn(detour::record_from_json(nlohmann::json::parse(line)));
      } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("records line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    return;
  }
  detour::ScanOptions opt = make_scan_options(in.scan);
  std::unique_ptr<std::ifstream> file;
  detour::LineSource source = make_line_source(in.scan.in, file);
  detour::scan_lines(source, opt, fn,
                     [](const std::string& diag) { std::cerr << "scan: " << diag << "\n"; });
}

struct TabulateArgs {
  RecordsInput input;
  int k = 2;
  int n = 0;
  bool complete = false;
  int witness_cap = detour::kDefaultWitnessCap;
  std::string format = "human";
};

int run_tabulate(const TabulateArgs& args) {
  Format format = format_from_name(args.format);
  detour::DegreeMode mode = detour::degree_mode_from_name(args.input.scan.degree_mode);
  detour::Tabulator tab(args.k, args.n, mode, args.complete, args.witness_cap);
  feed_records(args.input, [&](const ScanRecord& rec) { tab.add(rec); });
  detour::SearchSummary s = tab.finish();

  auto opt_str = [](const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string("none");
  };
  switch (format) {
    case Format::human: {
      const char* qual = s.complete ? "exact minimum" : "upper bound (partial corpus)";
      std::cout << "a(" << s.k << "," << s.n << ") "
                << (s.mode == detour::DegreeMode::exact ? "[delta exactly k] " : "[delta >= k] ")
                << (s.a_value ? "= " + std::to_string(*s.a_value) + "  (" + qual + ")"
                              : "undefined (empty domain)")
                << "\n";
      std::cout << "b(" << s.k << "," << s.n << ") "
                << (s.b_value ? "= " + std::to_string(*s.b_value) + "  (" + qual + ")"
                              : "undefined (no odd f seen)")
                << "\n";
      std::cout << "graphs=" << s.graphs << "\n";
      for (const auto& [f, count] : s.spectrum)
        std::cout << "f=" << f << ": " << count << " graphs\n";
      for (const std::string& w : s.a_witnesses) std::cout << "a-witness " << w << "\n";
      for (const std::string& w : s.b_witnesses) std::cout << "b-witness " << w << "\n";
      break;
    }
    case Format::csv:
      std::cout << "k,n,mode,complete,graphs,a,b\n"
                << s.k << ',' << s.n << ',' << detour::degree_mode_name(s.mode) << ','
                << (s.complete ? 1 : 0) << ',' << s.graphs << ',' << opt_str(s.a_value) << ','
                << opt_str(s.b_value) << "\n";
      break;
    case Format::jsonl: {
      ordered_json j;
      j["k"] = s.k;
      j["n"] = s.n;
      j["mode"] = detour::degree_mode_name(s.mode);
      j["complete"] = s.complete;
      j["graphs"] = s.graphs;
      j["a"] = s.a_value ? ordered_json(*s.a_value) : ordered_json(nullptr);
      j["b"] = s.b_value ? ordered_json(*s.b_value) : ordered_json(nullptr);
      j["a_witnesses"] = s.a_witnesses;
      j["b_witnesses"] = s.b_witnesses;
      ordered_json spectrum = ordered_json::object();
      for (const auto& [f, count] : s.spectrum) spectrum[std::to_string(f)] = count;
      j["spectrum"] = std::move(spectrum);
      std::cout << j.dump() << "\n";
      break;
    }
  }
  return 0;
}

struct WitnessArgs {
  RecordsInput input;
  std::uint64_t f_target = 0;
  bool f_given = false;
  int cap = detour::kDefaultWitnessCap;
  std::string format = "human";
};

int run_witness_search(const WitnessArgs& args) {
  if (!args.f_given) throw std::runtime_error("witness-search requires --f TARGET");
  Format format = format_from_name(args.format);
  detour::WitnessCollector collector(args.f_target, args.cap);
  feed_records(args.input, [&](const ScanRecord& rec) { collector.add(rec); });

  if (format == Format::csv) std::cout << detour::record_csv_header() << "\n";
  for (const ScanRecord& rec : collector.witnesses()) {
    switch (format) {
      case Format::human: std::cout << rec.graph6 << ": " << detour::record_to_human(rec) << "\n"; break;
      case Format::csv: std::cout << detour::record_to_csv(rec) << "\n"; break;
      case Format::jsonl: std::cout << detour::record_to_json(rec).dump() << "\n"; break;
    }
  }
  std::cerr << "witness-search: matches=" << collector.matches()
            << " kept=" << collector.witnesses().size() << "\n";
  return 0;
}

struct VerifyArgs {
  RecordsInput input;
  std::string check;
  std::optional<int> order;
  bool complete = false;
};

int run_verify(const VerifyArgs& args) {
  bool theorem1 = args.check == "theorem1";
  bool theorem2 = args.check == "theorem2";
  if (!theorem1 && !theorem2)
    throw std::runtime_error("verify expects a check name: theorem1|theorem2");

  detour::Theorem1Verifier v1;
  detour::Theorem2Verifier v2;
  feed_records(args.input, [&](const ScanRecord& rec) {
    if (args.order && rec.n != *args.order) return;
    if (theorem1) v1.add(rec);
    else v2.add(rec);
  });
  detour::VerifyResult result = theorem1 ? v1.finish(args.complete) : v2.finish();

  std::cout << args.check << ": checked=" << result.checked
            << " violations=" << result.violation_count << "\n";
  for (const auto& [order, min_f] : result.min_f_by_order)
    std::cout << (theorem1 ? "min f" : "min odd f") << " at order " << order << ": " << min_f
              << "\n";
  if (!result.note.empty()) std::cout << result.note << "\n";
  for (const ScanRecord& rec : result.counterexamples)
    std::cout << "counterexample: " << detour::record_to_csv(rec) << "\n";
  std::cout << (result.pass ? "PASS" : "FAIL") << "\n";
  return result.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"detour: exact counting, enumeration and catalog search for longest paths"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand(
      "count", "Compute n, minimum degree, connectivity, detour order L and detour count f(G)");
  count->add_option("graphs", count_args.in.graphs, "graph6 strings");
  add_stream_input(count, count_args.in, false);
  count->add_option("--format", count_args.format, "human|csv|jsonl");
  count->add_option("--engine", count_args.engine,
                    "dp|dfs|auto (subset DP under the order cap, exhaustive DFS otherwise)");

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand(
      "enumerate", "List every detour once, smaller endpoint first, lexicographically");
  enumerate->add_option("graphs", enum_args.in.graphs, "graph6 strings");
  add_stream_input(enumerate, enum_args.in, false);
  enumerate->add_option("--format", enum_args.format, "human|csv|jsonl");
  enumerate->add_option("--limit", enum_args.limit, "emission limit (error beyond)");

  EdgeStatsArgs edge_args;
  auto* edge_stats = app.add_subcommand(
      "edge-stats", "Per-edge detour counts: on how many detours does each edge appear");
  edge_stats->add_option("graphs", edge_args.in.graphs, "graph6 strings");
  add_stream_input(edge_stats, edge_args.in, false);
  edge_stats->add_option("--format", edge_args.format, "human|csv|jsonl");

  FamiliesArgs fam_args;
  auto* families = app.add_subcommand(
      "families",
      "Build the minimum-detour families (cycle, bowtie, triangle-cycle, H9, M, H-extended)");
  families->add_option("name", fam_args.name, "family name")->required();
  auto* order_opt = families->add_option("order", fam_args.order, "target order");
  families->add_option("--emit", fam_args.emit, "g6|report|dot (default report)");
  families->add_option("--base", fam_args.base,
                       "order-10 base graph for H-extended (graph6 string or file)");
  families->add_option("--via-edge", fam_args.via,
                       "u,v edge of the base to subdivide (must lie on all nine detours)");
  families->callback([&] { fam_args.order_given = order_opt->count() > 0; });

  PsiArgs psi_args;
  auto* psi = app.add_subcommand(
      "psi", "Rebuild the 4 (i<=j) or 6 (i>j) detours produced by one boundary chord at each "
             "end of a path");
  psi->add_option("--path", psi_args.path, "comma-separated vertex labels of the path")
      ->required();
  psi->add_option("--i", psi_args.i, "1-based index with x_1 x_i a chord (3 <= i <= k-1)")
      ->required();
  psi->add_option("--j", psi_args.j, "1-based index with x_k x_j a chord (2 <= j <= k-2)")
      ->required();
  psi->add_option("--graph", psi_args.graph,
                  "optional host graph6; every output is then verified as a detour");
  psi->add_option("--format", psi_args.format, "human|csv|jsonl");

  auto add_scan_flags = [](CLI::App* cmd, ScanArgs& args, bool with_labeled) {
    add_stream_input(cmd, args.in, with_labeled);
    cmd->add_option("--filter", args.filter,
                    "k=INT,n=INT,kappa=INT,kappa>=INT,parity=odd|even,f=INT,connected,traceable");
    cmd->add_option("--min-degree-mode", args.degree_mode,
                    "exact|atleast: reading of 'minimum degree k' (default atleast)");
    cmd->add_option("--engine", args.engine, "dp|dfs|auto");
    cmd->add_option("--jobs", args.jobs, "worker threads (default: cores)");
    cmd->add_option("--audit", args.audit,
                    "fraction of graphs recomputed on the other engine (default 0.01)");
    cmd->add_option("--resume-log", args.resume_log,
                    "append-only jsonl log; reruns skip logged graphs (env DETOUR_RESUME_LOG)");
    cmd->add_option("--on-decode-error", args.on_decode_error, "skip|abort (default skip)");
    cmd->add_option("--limit", args.limit, "stop after N records");
  };

  ScanArgs scan_args;
  auto* scan = app.add_subcommand(
      "scan", "Filter a graph6 catalog and stream one record (n, delta, kappa, L, f) per graph");
  add_scan_flags(scan, scan_args, true);
  scan->add_option("--format", scan_args.format, "human|csv|jsonl (default jsonl)");

  TabulateArgs tab_args;
  auto* tabulate = app.add_subcommand(
      "tabulate",
      "Aggregate a (k,n) cell: a(k,n) = min f, b(k,n) = min odd f, witnesses and f-spectrum");
  tabulate->add_option("--records", tab_args.input.records_path,
                       "precomputed jsonl records (- for stdin) instead of scanning");
  add_scan_flags(tabulate, tab_args.input.scan, true);
  tabulate->add_option("--k", tab_args.k, "minimum degree parameter k")->required();
  tabulate->add_option("--n", tab_args.n, "order n")->required();
  tabulate->add_flag("--complete", tab_args.complete,
                     "corpus covers the whole (k,n) class; minima are exact, not upper bounds");
  tabulate->add_option("--witness-cap", tab_args.witness_cap, "witnesses kept per minimum");
  tabulate->add_option("--format", tab_args.format, "human|csv|jsonl");

  WitnessArgs wit_args;
  auto* witness = app.add_subcommand(
      "witness-search", "Collect graphs whose detour count hits an exact target f");
  witness->add_option("--records", wit_args.input.records_path,
                      "precomputed jsonl records (- for stdin) instead of scanning");
  add_scan_flags(witness, wit_args.input.scan, true);
  auto* f_opt = witness->add_option("--f", wit_args.f_target, "target detour count");
  witness->add_option("--witness-cap", wit_args.cap, "maximum witnesses kept");
  witness->add_option("--format", wit_args.format, "human|csv|jsonl");
  witness->callback([&] { wit_args.f_given = f_opt->count() > 0; });

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify",
      "Check a statement against a corpus; exit 2 when a counterexample turns up.\n"
      "  theorem1: every connected graph with delta>=2 and n>=4 has f>=4 (min exactly 4 on a "
      "complete corpus)\n"
      "  theorem2: no connected graph with delta>=2 and n>=9 has an odd f below 9");
  verify->add_option("check", verify_args.check, "theorem1|theorem2")->required();
  verify->add_option("--records", verify_args.input.records_path,
                     "precomputed jsonl records (- for stdin) instead of scanning");
  add_scan_flags(verify, verify_args.input.scan, true);
  int order_flag = 0;
  auto* verify_order =
      verify->add_option("--order", order_flag, "restrict the check to one order");
  verify->add_flag("--complete", verify_args.complete,
                   "corpus is complete per order; theorem1 also checks min f == 4");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count) return run_count(count_args);
    if (*enumerate) return run_enumerate(enum_args);
    if (*edge_stats) return run_edge_stats(edge_args);
    if (*families) return run_families(fam_args);
    if (*psi) return run_psi(psi_args);
    if (*scan) return run_scan(scan_args);
    if (*tabulate) return run_tabulate(tab_args);
    if (*witness) return run_witness_search(wit_args);
    if (*verify) {
      if (verify_order->count() > 0) verify_args.order = order_flag;
      return run_verify(verify_args);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
