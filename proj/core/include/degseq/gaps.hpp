#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "degseq/sequence.hpp"

namespace degseq {

inline constexpr std::size_t kMaxSufficiencyScan = 9;
inline constexpr std::size_t kMaxThresholdScan = 8;

// Visits every non-increasing sequence of length n with terms in [1, max_term].
void for_each_sequence(std::size_t n, DegreeSequence::Term max_term,
                       const std::function<void(const DegreeSequence&)>& visit);

// Sequences of length <= max_n that pass the four-clause check but have no
// connected realization. Sorted by length, then lexicographically.
// Throws LimitExceeded for max_n > 9.
std::vector<DegreeSequence> find_sufficiency_gaps(std::size_t max_n);

// Sequences of length <= max_n that are forcibly connected by exhaustive
// enumeration yet fail paper_necessarily_connected. Same ordering.
// Throws LimitExceeded for max_n > 8.
std::vector<DegreeSequence> find_threshold_gaps(std::size_t max_n, std::size_t jobs = 1);

}  // namespace degseq
