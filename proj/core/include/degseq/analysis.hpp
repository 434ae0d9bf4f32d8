#pragma once

#include <compare>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "degseq/sequence.hpp"

namespace degseq {

// Labeled conditions a sequence can fail. The first four are the clauses of the
// connectivity theorem; the rest come from the exact and threshold predicates.
enum class Condition {
  Parity,        // degree sum even
  LowerBound,    // epsilon >= varphi - 1
  UpperBound,    // epsilon <= varphi (varphi - 1) / 2
  MaxDegree,     // s_1 <= varphi - 1
  ErdosGallai,   // some prefix inequality fails
  EdgeThreshold, // epsilon > (varphi - 2)(varphi - 3)/2 + 1
};

std::string_view to_string(Condition c);

struct ConnectivityCheck {
  bool passed = false;
  std::vector<Condition> failures;
};

struct SequenceVerdict {
  bool graphic = false;
  bool paper_connected = false;
  bool exact_connected = false;
  bool paper_necessarily_connected = false;
  std::vector<Condition> failure_reasons;
};

/// Cell (i, j) of the partition matrix: connected graphs with j + 1 vertices
/// and i + j edges.
struct PartitionCell {
  std::uint64_t i = 0;
  std::uint64_t j = 0;

  friend bool operator==(const PartitionCell&, const PartitionCell&) = default;
  // Column-major: by j, then i.
  friend std::strong_ordering operator<=>(const PartitionCell& a, const PartitionCell& b) {
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.i <=> b.i;
  }
};

// Erdos-Gallai with a single prefix-sum sweep over the sorted terms.
bool is_graphic(const DegreeSequence& s);

// The four clauses: parity, varphi-1 <= epsilon <= C(varphi,2), s_1 <= varphi-1.
// Positivity of every term is guaranteed by DegreeSequence.
ConnectivityCheck paper_connected_check(const DegreeSequence& s);

// Ground truth: s has a connected realization iff it is graphic and
// epsilon >= varphi - 1.
bool is_connected_sequence(const DegreeSequence& s);

// paper_connected_check passes and 2*epsilon > (varphi-2)(varphi-3) + 2.
bool paper_necessarily_connected(const DegreeSequence& s);

SequenceVerdict analyze(const DegreeSequence& s);

// Throws NotConnectedSequence unless is_connected_sequence(s).
PartitionCell partition_cell(const DegreeSequence& s);

// Inclusive row range (0, j(j-1)/2) of the non-empty cells of column j.
std::pair<std::uint64_t, std::uint64_t> column_row_bounds(std::uint64_t j);

// (n^2 - 5n + 10)/2. Any graph on n vertices with minimum degree >= 1 and at
// least this many edges is connected. Throws DomainTooSmall for n < 2.
std::uint64_t connectivity_edge_threshold(std::uint64_t n);

// (n-2)(n-3)/2 + 1, the edge count of K_{n-2} + K_2. Throws DomainTooSmall for n < 4.
std::uint64_t max_disconnected_edges(std::uint64_t n);

}  // namespace degseq
