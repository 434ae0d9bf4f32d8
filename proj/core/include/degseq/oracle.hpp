#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "degseq/analysis.hpp"
#include "degseq/canonical.hpp"
#include "degseq/graph.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

std::size_t default_jobs();

// Calls `visit` with every edge code on n vertices whose minimum degree is at
// least min_degree, in increasing code order. Throws LimitExceeded for n > cap.
void for_each_code(std::size_t n, std::size_t min_degree,
                   const std::function<void(std::uint64_t)>& visit);

// Same scan, materialized as graphs.
void enumerate_graphs(std::size_t n, std::size_t min_degree,
                      const std::function<void(const SimpleGraph&)>& visit);

struct CensusOptions {
  std::size_t jobs = 1;
  bool representatives = false;
};

struct CellCensus {
  std::size_t max_vertices = 0;
  // Isomorphism classes of connected graphs per cell, ordered by (j, i).
  std::map<PartitionCell, std::uint64_t> counts;
  // Filled only when requested; canonical forms sorted ascending.
  std::map<PartitionCell, std::vector<CanonicalForm>> representatives;

  std::uint64_t column_total(std::uint64_t j) const;

  friend bool operator==(const CellCensus&, const CellCensus&) = default;
};

// Throws LimitExceeded for max_vertices > cap or max_vertices == 0.
CellCensus cell_census(std::size_t max_vertices, const CensusOptions& options = {});

enum class RealizationMode { Labeled, UpToIsomorphism };

// Every simple graph whose sorted degree sequence is s. Labeled mode lists
// each labeled graph once; isomorphism mode returns one canonical
// representative per class, sorted by code. Throws LimitExceeded.
std::vector<SimpleGraph> all_realizations(const DegreeSequence& s,
                                          RealizationMode mode = RealizationMode::UpToIsomorphism);

// Throws NotGraphic when s has no realization, LimitExceeded above the cap.
bool is_forcibly_connected(const DegreeSequence& s);

struct RealizationTally {
  std::uint64_t labeled = 0;
  std::uint64_t connected = 0;

  std::uint64_t disconnected() const { return labeled - connected; }
  bool forcibly_connected() const { return labeled > 0 && connected == labeled; }

  friend bool operator==(const RealizationTally&, const RealizationTally&) = default;
};

// One pass over all graphs on n vertices with minimum degree >= 1, tallying
// labeled realizations per degree sequence.
std::map<DegreeSequence, RealizationTally> realization_tallies(std::size_t n, std::size_t jobs = 1);

}  // namespace degseq
