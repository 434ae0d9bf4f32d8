#include "degseq/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "degseq/error.hpp"

namespace degseq {

using ordered_json = nlohmann::ordered_json;

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Splits a line into whitespace-separated tokens along with their 1-based columns.
std::vector<std::pair<std::string, std::size_t>> tokenize(const std::string& line) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    out.emplace_back(line.substr(start, i - start), start + 1);
  }
  return out;
}

bool skippable(const std::vector<std::pair<std::string, std::size_t>>& tokens) {
  return tokens.empty() || tokens.front().first.starts_with('#');
}

std::uint64_t parse_number(const std::string& text, std::size_t line, std::size_t column) {
  std::uint64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) throw ParseError(line, column, "number out of range: '" + text + "'");
  if (ec != std::errc() || ptr != last) throw ParseError(line, column, "expected a non-negative integer, got '" + text + "'");
  return value;
}

}  // namespace

ParsedSequence parse_sequence(std::string_view text) {
  std::vector<DegreeSequence::Term> terms;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = text.find(',', pos);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    std::size_t b = pos, e = end;
    while (b < e && is_space(text[b])) ++b;
    while (e > b && is_space(text[e - 1])) --e;
    if (b == e) throw ParseError(0, b + 1, "empty term");
    const std::string token(text.substr(b, e - b));
    const std::uint64_t value = parse_number(token, 0, b + 1);
    if (value == 0) throw ParseError(0, b + 1, "terms must be positive");
    if (value > 0xFFFFFFFFull) throw ParseError(0, b + 1, "term too large: '" + token + "'");
    terms.push_back(static_cast<DegreeSequence::Term>(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  const bool sorted = std::is_sorted(terms.begin(), terms.end(), std::greater<>());
  return {DegreeSequence::from_unsorted(std::move(terms)), !sorted};
}

SimpleGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (skippable(tokens)) continue;
    if (!n) {
      if (tokens.size() != 2 || tokens[0].first != "n") {
        throw ParseError(line_no, tokens[0].second, "expected header 'n <vertex_count>'");
      }
      n = parse_number(tokens[1].first, line_no, tokens[1].second);
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, tokens[0].second, "expected 'u v'");
    const std::uint64_t u = parse_number(tokens[0].first, line_no, tokens[0].second);
    const std::uint64_t v = parse_number(tokens[1].first, line_no, tokens[1].second);
    if (u >= v) throw ParseError(line_no, tokens[0].second, "edge endpoints must satisfy u < v");
    if (v >= *n) throw ParseError(line_no, tokens[1].second, "vertex " + std::to_string(v) + " out of range");
    const Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!seen.insert(e).second) throw ParseError(line_no, tokens[0].second, "duplicate edge");
    edges.push_back(e);
  }
  if (!n) throw ParseError(line_no, 1, "missing 'n <vertex_count>' header");
  return SimpleGraph(*n, edges);
}

std::string format_edge_list(const SimpleGraph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string format_dot(const SimpleGraph& g) {
  std::string out = "graph {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const Edge& e : g.edges()) out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  out += "}\n";
  return out;
}

ConstructionTrace read_trace(std::istream& in) {
  ConstructionTrace t;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (skippable(tokens)) continue;
    const std::string& tag = tokens[0].first;
    if (tag == "L") {
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        t.vertex_labels.push_back(
            static_cast<Vertex>(parse_number(tokens[k].first, line_no, tokens[k].second)));
      }
      continue;
    }
    if (tag != "O" && tag != "C") throw ParseError(line_no, tokens[0].second, "expected 'O', 'C' or 'L'");
    if (tokens.size() != 3) throw ParseError(line_no, tokens[0].second, "expected '" + tag + " a b'");
    const auto a = static_cast<Vertex>(parse_number(tokens[1].first, line_no, tokens[1].second));
    const auto b = static_cast<Vertex>(parse_number(tokens[2].first, line_no, tokens[2].second));
    t.steps.push_back(tag == "O" ? TraceStep::open(a, b) : TraceStep::closed(a, b));
  }
  return t;
}

std::string format_trace(const ConstructionTrace& t) {
  std::string out;
  for (const TraceStep& s : t.steps) {
    out += s.kind == StepKind::Open ? "O " : "C ";
    out += std::to_string(s.a) + " " + std::to_string(s.b) + "\n";
  }
  if (!t.vertex_labels.empty()) {
    out += "L";
    for (Vertex l : t.vertex_labels) out += " " + std::to_string(l);
    out += "\n";
  }
  return out;
}

namespace {

std::string reasons_csv(const SequenceVerdict& v) {
  std::string out;
  for (std::size_t i = 0; i < v.failure_reasons.size(); ++i) {
    if (i) out += ',';
    out += to_string(v.failure_reasons[i]);
  }
  return out;
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string verdict_to_text(const DegreeSequence& s, const SequenceVerdict& v) {
  std::string out;
  out += "sequence=" + s.to_string() + "\n";
  out += std::string("graphic=") + flag(v.graphic) + "\n";
  out += std::string("paper_connected=") + flag(v.paper_connected) + "\n";
  out += std::string("exact_connected=") + flag(v.exact_connected) + "\n";
  out += std::string("paper_necessarily_connected=") + flag(v.paper_necessarily_connected) + "\n";
  out += "failure_reasons=" + reasons_csv(v) + "\n";
  return out;
}

std::string verdict_to_json(const DegreeSequence& s, const SequenceVerdict& v) {
  ordered_json j;
  j["sequence"] = s.terms();
  j["graphic"] = v.graphic;
  j["paper_connected"] = v.paper_connected;
  j["exact_connected"] = v.exact_connected;
  j["paper_necessarily_connected"] = v.paper_necessarily_connected;
  j["failure_reasons"] = ordered_json::array();
  for (Condition c : v.failure_reasons) j["failure_reasons"].push_back(std::string(to_string(c)));
  return j.dump() + "\n";
}

namespace {

ordered_json census_json(const CellCensus& c, bool with_representatives) {
  ordered_json cells = ordered_json::array();
  for (const auto& [cell, count] : c.counts) {
    ordered_json entry;
    entry["i"] = cell.i;
    entry["j"] = cell.j;
    entry["count"] = count;
    if (with_representatives) {
      ordered_json reps = ordered_json::array();
      if (auto it = c.representatives.find(cell); it != c.representatives.end())
        for (const CanonicalForm& f : it->second) reps.push_back(f.code);
      entry["representatives"] = std::move(reps);
    }
    cells.push_back(std::move(entry));
  }
  ordered_json j;
  j["cells"] = std::move(cells);
  j["max_vertices"] = c.max_vertices;
  return j;
}

}  // namespace

std::string census_to_json(const CellCensus& c) { return census_json(c, !c.representatives.empty()).dump() + "\n"; }

std::string census_to_csv(const CellCensus& c) {
  std::string out;
  for (const auto& [cell, count] : c.counts) {
    out += std::to_string(cell.i) + "," + std::to_string(cell.j) + "," + std::to_string(count) + "\n";
  }
  return out;
}

std::string census_to_text(const CellCensus& c) {
  const std::uint64_t columns = c.max_vertices;
  const std::uint64_t rows = column_row_bounds(columns - 1).second + 1;
  std::ostringstream out;
  out << "     ";
  for (std::uint64_t j = 0; j < columns; ++j) out << " j=" << j << std::string(j < 10 ? 5 : 4, ' ');
  out << "\n";
  for (std::uint64_t i = 0; i < rows; ++i) {
    std::string label = "i=" + std::to_string(i);
    out << label << std::string(label.size() < 5 ? 5 - label.size() : 0, ' ');
    for (std::uint64_t j = 0; j < columns; ++j) {
      auto it = c.counts.find({i, j});
      std::string cell = it == c.counts.end() ? "." : std::to_string(it->second);
      out << " " << cell << std::string(cell.size() < 8 ? 8 - cell.size() : 0, ' ');
    }
    out << "\n";
  }
  return out.str();
}

std::string census_cache_filename(std::size_t max_vertices, bool representatives) {
  return "census-v" + std::to_string(kCensusCacheSchema) + "-n" + std::to_string(max_vertices) +
         (representatives ? "-reps" : "-counts") + ".json";
}

std::optional<CellCensus> load_census_cache(const std::filesystem::path& file, std::size_t max_vertices,
                                            bool representatives) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("schema_version").get<int>() != kCensusCacheSchema) return std::nullopt;
    if (j.at("dedup").get<std::string>() != "isomorphism") return std::nullopt;
    if (j.at("max_vertices").get<std::size_t>() != max_vertices) return std::nullopt;
    if (j.at("with_representatives").get<bool>() != representatives) return std::nullopt;
    CellCensus c;
    c.max_vertices = max_vertices;
    for (const auto& entry : j.at("cells")) {
      const PartitionCell cell{entry.at("i").get<std::uint64_t>(), entry.at("j").get<std::uint64_t>()};
      c.counts[cell] = entry.at("count").get<std::uint64_t>();
      if (representatives) {
        auto& list = c.representatives[cell];
        for (const auto& code : entry.at("representatives")) list.push_back({cell.j + 1, code.get<std::uint64_t>()});
      }
    }
    return c;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void save_census_cache(const std::filesystem::path& file, const CellCensus& c, bool representatives) {
  ordered_json j = census_json(c, representatives);
  j["schema_version"] = kCensusCacheSchema;
  j["dedup"] = "isomorphism";
  j["with_representatives"] = representatives;
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::Io, "cannot write cache file " + tmp);
    out << j.dump() << "\n";
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace degseq
