#include "degseq/gaps.hpp"

#include <algorithm>
#include <string>

#include "degseq/analysis.hpp"
#include "degseq/error.hpp"
#include "degseq/oracle.hpp"

namespace degseq {

void for_each_sequence(std::size_t n, DegreeSequence::Term max_term,
                       const std::function<void(const DegreeSequence&)>& visit) {
  if (n == 0 || max_term == 0) return;
  std::vector<DegreeSequence::Term> terms(n, max_term);
  for (;;) {
    visit(DegreeSequence(terms));
    // Next non-increasing sequence in decreasing lexicographic order.
    std::size_t i = n;
    while (i > 0 && terms[i - 1] == 1) --i;
    if (i == 0) return;
    const DegreeSequence::Term value = terms[i - 1] - 1;
    std::fill(terms.begin() + static_cast<std::ptrdiff_t>(i - 1), terms.end(), value);
  }
}

std::vector<DegreeSequence> find_sufficiency_gaps(std::size_t max_n) {
  if (max_n > kMaxSufficiencyScan) {
    throw Error(ErrorCode::LimitExceeded, "sufficiency scan is capped at length " + std::to_string(kMaxSufficiencyScan));
  }
  std::vector<DegreeSequence> gaps;
  // Terms above n - 1 fail the max-degree clause, so they can never be gaps.
  for (std::size_t n = 2; n <= max_n; ++n) {
    for_each_sequence(n, static_cast<DegreeSequence::Term>(n - 1), [&](const DegreeSequence& s) {
      if (paper_connected_check(s).passed && !is_connected_sequence(s)) gaps.push_back(s);
    });
  }
  std::sort(gaps.begin(), gaps.end());
  return gaps;
}

std::vector<DegreeSequence> find_threshold_gaps(std::size_t max_n, std::size_t jobs) {
  if (max_n > kMaxThresholdScan) {
    throw Error(ErrorCode::LimitExceeded, "threshold scan is capped at length " + std::to_string(kMaxThresholdScan));
  }
  std::vector<DegreeSequence> gaps;
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (const auto& [s, tally] : realization_tallies(n, jobs)) {
      if (tally.forcibly_connected() && !paper_necessarily_connected(s)) gaps.push_back(s);
    }
  }
  std::sort(gaps.begin(), gaps.end());
  return gaps;
}

}  // namespace degseq
