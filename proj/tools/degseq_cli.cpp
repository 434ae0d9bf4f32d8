// degseq: command-line front end for the degree-sequence toolkit.
//
// Exit codes: 0 success or affirmative verdict, 1 negative verdict,
// 2 input error, 3 size limit exceeded, 4 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "degseq/analysis.hpp"
#include "degseq/construction.hpp"
#include "degseq/error.hpp"
#include "degseq/gaps.hpp"
#include "degseq/io.hpp"
#include "degseq/oracle.hpp"

namespace {

using namespace degseq;

enum Exit : int { kOk = 0, kNegative = 1, kInput = 2, kLimit = 3, kInternal = 4 };

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::LimitExceeded: return kLimit;
    case ErrorCode::NotConnected:
    case ErrorCode::NotConnectedSequence:
    case ErrorCode::NotGraphic:
    case ErrorCode::CannotMerge:
    case ErrorCode::InvalidStep: return kNegative;
    default: return kInput;
  }
}

// Writes to `path` when given, otherwise to stdout.
void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
  out << text;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return in;
}

struct CheckArgs {
  std::string sequence;
  std::string format = "text";
  bool oracle = false;
};

int run_check(const CheckArgs& a) {
  const ParsedSequence parsed = parse_sequence(a.sequence);
  const DegreeSequence& s = parsed.sequence;
  const SequenceVerdict v = analyze(s);
  std::optional<bool> forced;
  if (a.oracle && v.graphic) forced = is_forcibly_connected(s);

  if (a.format == "json") {
    auto j = nlohmann::ordered_json::parse(verdict_to_json(s, v));
    j["reordered"] = parsed.reordered;
    if (forced) j["oracle_forcibly_connected"] = *forced;
    std::cout << j.dump() << "\n";
  } else {
    if (parsed.reordered) std::cout << "note=input reordered to non-increasing order\n";
    std::cout << verdict_to_text(s, v);
    if (forced) std::cout << "oracle_forcibly_connected=" << (*forced ? "true" : "false") << "\n";
  }
  return v.exact_connected ? kOk : kNegative;
}

struct RealizeArgs {
  std::string sequence;
  std::string format = "edges";
  std::string output;
  std::string trace_out;
};

int run_realize(const RealizeArgs& a) {
  const ParsedSequence parsed = parse_sequence(a.sequence);
  const RealizationResult r = realize_connected(parsed.sequence);
  emit(a.format == "dot" ? format_dot(r.graph) : format_edge_list(r.graph), a.output);
  if (!a.trace_out.empty()) emit(format_trace(r.trace), a.trace_out);
  return kOk;
}

struct TraceArgs {
  std::string replay;
  std::string from_graph;
  std::string output;
  std::string format = "edges";
};

int run_trace(const TraceArgs& a) {
  if (!a.replay.empty()) {
    auto in = open_input(a.replay);
    const ConstructionTrace t = read_trace(in);
    const SimpleGraph g = replay_trace(t);
    std::cout << "valid, " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges, connected at every step\n";
    if (!a.output.empty()) emit(a.format == "dot" ? format_dot(g) : format_edge_list(g), a.output);
    return kOk;
  }
  auto in = open_input(a.from_graph);
  const SimpleGraph g = read_edge_list(in);
  emit(format_trace(canonical_trace(g)), a.output);
  return kOk;
}

struct EnumerateArgs {
  std::size_t n = 0;
  std::size_t min_degree = 0;
  bool connected = false;
  bool dedup = false;
  bool list = false;
};

int run_enumerate(const EnumerateArgs& a) {
  std::uint64_t count = 0;
  std::set<CanonicalForm> classes;
  std::string listing;
  for_each_code(a.n, a.min_degree, [&](std::uint64_t code) {
    const BitGraph g = BitGraph::from_code(a.n, code);
    if (a.connected && !g.connected()) return;
    if (a.dedup) {
      classes.insert(canonical_form(g));
      return;
    }
    ++count;
    if (a.list) listing += format_edge_list(g.to_graph()) + "\n";
  });
  if (a.dedup) {
    count = classes.size();
    if (a.list)
      for (const CanonicalForm& f : classes) listing += format_edge_list(graph_from_code(f.vertex_count, f.code)) + "\n";
  }
  std::cout << listing << "count=" << count << "\n";
  return kOk;
}

struct MatrixArgs {
  std::size_t max_vertices = 0;
  std::string format = "text";
  std::string output;
  std::string cache_dir;
  bool representatives = false;
  std::size_t jobs = 0;
};

int run_matrix(const MatrixArgs& a) {
  std::optional<CellCensus> census;
  std::filesystem::path cache_file;
  if (!a.cache_dir.empty()) {
    cache_file = std::filesystem::path(a.cache_dir) / census_cache_filename(a.max_vertices, a.representatives);
    census = load_census_cache(cache_file, a.max_vertices, a.representatives);
  }
  if (!census) {
    census = cell_census(a.max_vertices, {a.jobs, a.representatives});
    if (!cache_file.empty()) save_census_cache(cache_file, *census, a.representatives);
  }
  std::string text;
  if (a.format == "json") text = census_to_json(*census);
  else if (a.format == "csv") text = census_to_csv(*census);
  else text = census_to_text(*census);
  emit(text, a.output);
  return kOk;
}

struct GapsArgs {
  std::string kind = "both";
  std::size_t sufficiency_max = 5;
  std::size_t threshold_max = 6;
  std::string format = "text";
  std::size_t jobs = 0;
};

int run_gaps(const GapsArgs& a) {
  std::vector<DegreeSequence> sufficiency, threshold;
  const bool want_s = a.kind != "threshold";
  const bool want_t = a.kind != "sufficiency";
  if (want_s) sufficiency = find_sufficiency_gaps(a.sufficiency_max);
  if (want_t) threshold = find_threshold_gaps(a.threshold_max, a.jobs);

  if (a.format == "json") {
    nlohmann::ordered_json j;
    auto list = [](const std::vector<DegreeSequence>& v) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& s : v) arr.push_back(s.terms());
      return arr;
    };
    if (want_s) j["sufficiency"] = {{"max_n", a.sufficiency_max}, {"sequences", list(sufficiency)}};
    if (want_t) j["threshold"] = {{"max_n", a.threshold_max}, {"sequences", list(threshold)}};
    std::cout << j.dump() << "\n";
  } else {
    if (want_s) {
      std::cout << "# sufficiency gaps (pass the four clauses, no connected realization), length <= "
                << a.sufficiency_max << ": " << sufficiency.size() << "\n";
      for (const auto& s : sufficiency) std::cout << "sufficiency " << s.to_string() << "\n";
    }
    if (want_t) {
      std::cout << "# threshold gaps (forcibly connected, at or below the edge threshold), length <= "
                << a.threshold_max << ": " << threshold.size() << "\n";
      for (const auto& s : threshold) std::cout << "threshold " << s.to_string() << "\n";
    }
  }
  return kOk;
}

int run_threshold(std::size_t n) {
  std::cout << connectivity_edge_threshold(n) << " (assumes minimum degree >= 1)\n";
  if (n >= 4) {
    std::cout << "max_disconnected_edges=" << max_disconnected_edges(n) << " (K_" << n - 2 << " + K_2)\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree sequences, connected realizations and the partition matrix of connected graphs"};
  app.require_subcommand(1);

  const std::size_t default_job_count = default_jobs();

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Graphicness and connectivity verdicts for a sequence");
  c->add_option("sequence", check.sequence, "Comma-separated positive integers, e.g. 3,2,2,1")->required();
  c->add_option("--format", check.format)->check(CLI::IsMember({"text", "json"}));
  c->add_flag("--oracle", check.oracle, "Also decide forcible connectivity by exhaustive enumeration (n <= 8)");

  RealizeArgs realize;
  auto* r = app.add_subcommand("realize", "Build a connected realization of a sequence");
  r->add_option("sequence", realize.sequence)->required();
  r->add_option("--format", realize.format)->check(CLI::IsMember({"edges", "dot"}));
  r->add_option("-o,--output", realize.output, "Graph output file (default stdout)");
  r->add_option("--trace-out", realize.trace_out, "Write the open/closed construction trace here");

  TraceArgs trace;
  auto* t = app.add_subcommand("trace", "Replay a construction trace or derive one from a graph");
  auto* replay_opt = t->add_option("--replay", trace.replay, "Trace file with O/C lines");
  auto* from_opt = t->add_option("--from-graph", trace.from_graph, "Edge-list file of a connected graph");
  replay_opt->excludes(from_opt);
  t->add_option("-o,--output", trace.output, "Output file");
  t->add_option("--format", trace.format, "Graph format for --replay output")->check(CLI::IsMember({"edges", "dot"}));
  t->callback([&] {
    if (trace.replay.empty() && trace.from_graph.empty()) throw CLI::RequiredError("--replay or --from-graph");
  });

  EnumerateArgs enumerate;
  auto* e = app.add_subcommand("enumerate", "Enumerate all simple graphs on n vertices");
  e->add_option("n", enumerate.n)->required();
  e->add_option("--min-degree", enumerate.min_degree);
  e->add_flag("--connected", enumerate.connected);
  e->add_flag("--dedup", enumerate.dedup, "Count isomorphism classes instead of labeled graphs");
  e->add_flag("--list", enumerate.list, "Print each graph as an edge list");

  MatrixArgs matrix;
  matrix.jobs = default_job_count;
  auto* m = app.add_subcommand("matrix", "Census of connected graphs per partition-matrix cell");
  m->add_option("--max-vertices", matrix.max_vertices)->required();
  m->add_option("--format", matrix.format)->check(CLI::IsMember({"text", "json", "csv"}));
  m->add_option("-o,--output", matrix.output);
  m->add_option("--cache-dir", matrix.cache_dir, "Reuse or store census results in this directory");
  m->add_flag("--representatives", matrix.representatives, "Include canonical codes per cell (json)");
  m->add_option("--jobs", matrix.jobs)->check(CLI::PositiveNumber);

  GapsArgs gaps;
  gaps.jobs = default_job_count;
  auto* g = app.add_subcommand("gaps", "Search for sequences where the stated conditions and ground truth disagree");
  g->add_option("--kind", gaps.kind)->check(CLI::IsMember({"sufficiency", "threshold", "both"}));
  g->add_option("--sufficiency-max", gaps.sufficiency_max);
  g->add_option("--threshold-max", gaps.threshold_max);
  g->add_option("--format", gaps.format)->check(CLI::IsMember({"text", "json"}));
  g->add_option("--jobs", gaps.jobs)->check(CLI::PositiveNumber);

  std::size_t threshold_n = 0;
  auto* th = app.add_subcommand("threshold", "Edge count that forces connectivity on n vertices");
  th->add_option("n", threshold_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (c->parsed()) return run_check(check);
    if (r->parsed()) return run_realize(realize);
    if (t->parsed()) return run_trace(trace);
    if (e->parsed()) return run_enumerate(enumerate);
    if (m->parsed()) return run_matrix(matrix);
    if (g->parsed()) return run_gaps(gaps);
    if (th->parsed()) return run_threshold(threshold_n);
  } catch (const degseq::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_code_for(err.code());
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
