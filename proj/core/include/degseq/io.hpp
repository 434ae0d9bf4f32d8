#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "degseq/analysis.hpp"
#include "degseq/graph.hpp"
#include "degseq/oracle.hpp"
#include "degseq/sequence.hpp"
#include "degseq/trace.hpp"

namespace degseq {

struct ParsedSequence {
  DegreeSequence sequence;
  bool reordered = false;
};

// "3,2,2,1" (whitespace around terms allowed). Terms must be positive; the
// result is sorted non-increasing. Throws ParseError with a 1-based column.
ParsedSequence parse_sequence(std::string_view text);

// Edge list: "n <count>" header, then "u v" lines with u < v; '#' starts a
// comment line. Throws ParseError with the 1-based line number.
SimpleGraph read_edge_list(std::istream& in);
std::string format_edge_list(const SimpleGraph& g);
std::string format_dot(const SimpleGraph& g);

// Trace lines: "O a b", "C u v", and an optional "L l0 l1 ..." label line.
ConstructionTrace read_trace(std::istream& in);
std::string format_trace(const ConstructionTrace& t);

std::string verdict_to_text(const DegreeSequence& s, const SequenceVerdict& v);
std::string verdict_to_json(const DegreeSequence& s, const SequenceVerdict& v);

std::string census_to_json(const CellCensus& c);
std::string census_to_csv(const CellCensus& c);
std::string census_to_text(const CellCensus& c);

inline constexpr int kCensusCacheSchema = 1;

std::string census_cache_filename(std::size_t max_vertices, bool representatives);
// Returns nullopt when the file is missing, unreadable, or carries another
// schema version or key.
std::optional<CellCensus> load_census_cache(const std::filesystem::path& file,
                                            std::size_t max_vertices, bool representatives);
void save_census_cache(const std::filesystem::path& file, const CellCensus& c, bool representatives);

}  // namespace degseq
