#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

#include "degseq/graph.hpp"

#ifndef DEGSEQ_MAX_ORACLE_VERTICES
#define DEGSEQ_MAX_ORACLE_VERTICES 8
#endif

namespace degseq {

// Exhaustive routines refuse inputs above this many vertices.
inline constexpr std::size_t kMaxOracleVertices = DEGSEQ_MAX_ORACLE_VERTICES;
static_assert(kMaxOracleVertices >= 1 && kMaxOracleVertices <= 11,
              "adjacency codes are stored in 64 bits");

constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Colex index of the pair (i, j), i < j: (0,1), (0,2), (1,2), (0,3), ...
constexpr std::size_t pair_index(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

/// Dense adjacency for graphs of at most kMaxOracleVertices vertices.
///
/// An edge code on n vertices stores pair k (colex order) at bit
/// pair_count(n) - 1 - k, so the first pair is the most significant bit and
/// numeric order on codes equals lexicographic order on the pair sequence.
/// Every integer in [0, 2^pair_count(n)) is exactly one labeled graph.
struct BitGraph {
  std::size_t n = 0;
  std::array<std::uint16_t, kMaxOracleVertices> rows{};

  static BitGraph from_code(std::size_t n, std::uint64_t code);
  static BitGraph from_graph(const SimpleGraph& g);

  std::uint64_t code() const;
  std::size_t degree(std::size_t v) const;
  bool connected() const;
  SimpleGraph to_graph() const;
};

inline SimpleGraph graph_from_code(std::size_t n, std::uint64_t code) {
  return BitGraph::from_code(n, code).to_graph();
}

// Code of g under its own labeling. Throws LimitExceeded above the cap.
std::uint64_t code_of(const SimpleGraph& g);

/// Minimal edge code over all vertex relabelings. Equal forms iff isomorphic.
struct CanonicalForm {
  std::size_t vertex_count = 0;
  std::uint64_t code = 0;

  std::string to_hex() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Branch-and-bound over labelings, fixing one position at a time and cutting
// any branch whose code prefix already exceeds the best found.
// Throws LimitExceeded above the cap.
CanonicalForm canonical_form(const SimpleGraph& g);
CanonicalForm canonical_form(const BitGraph& g);

// True iff `code` is already the minimum over all relabelings. Stops at the
// first relabeling that beats it, which is what makes whole-space scans cheap.
bool is_canonical_code(std::size_t n, std::uint64_t code);
bool is_canonical_code(const BitGraph& g, std::uint64_t code);

}  // namespace degseq
