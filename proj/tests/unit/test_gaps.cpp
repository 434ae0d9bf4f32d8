#include <doctest.h>

#include <algorithm>
#include <map>

#include "degseq/analysis.hpp"
#include "degseq/error.hpp"
#include "degseq/gaps.hpp"
#include "support/oracles.hpp"

using namespace degseq;

namespace {

bool contains(const std::vector<DegreeSequence>& list, const DegreeSequence& s) {
  return std::find(list.begin(), list.end(), s) != list.end();
}

// Sorted degree vector -> (labeled graphs, connected ones), from plain brute force.
std::map<std::vector<std::size_t>, std::pair<int, int>> brute_force_tallies(std::size_t n) {
  std::map<std::vector<std::size_t>, std::pair<int, int>> out;
  testing::brute_force_graphs(n, [&](const SimpleGraph& g) {
    if (g.min_degree() == 0) return;
    auto& t = out[testing::sorted_degrees(g)];
    ++t.first;
    if (is_connected(g)) ++t.second;
  });
  return out;
}

}  // namespace

TEST_CASE("for_each_sequence visits every non-increasing sequence once") {
  std::vector<DegreeSequence> seen;
  for_each_sequence(3, 3, [&](const DegreeSequence& s) { seen.push_back(s); });
  // Multisets of size 3 from {1,2,3}: C(5,3) = 10.
  CHECK(seen.size() == 10);
  CHECK(std::is_sorted(seen.rbegin(), seen.rend()));
  CHECK(seen.front() == DegreeSequence{3, 3, 3});
  CHECK(seen.back() == DegreeSequence{1, 1, 1});
}

TEST_CASE("find_sufficiency_gaps") {
  CHECK(find_sufficiency_gaps(1).empty());
  CHECK(find_sufficiency_gaps(3).empty());
  const auto four = find_sufficiency_gaps(4);
  CHECK(contains(four, {3, 3, 1, 1}));
  const auto five = find_sufficiency_gaps(5);
  CHECK(contains(five, {4, 4, 2, 1, 1}));
  CHECK(std::is_sorted(five.begin(), five.end()));
  CHECK_THROWS_AS(find_sufficiency_gaps(kMaxSufficiencyScan + 1), Error);
}

TEST_CASE("sufficiency gaps are exactly the clause-passing sequences brute force cannot realize connected") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto tallies = brute_force_tallies(n);
    const auto gaps = find_sufficiency_gaps(n);
    for_each_sequence(n, static_cast<DegreeSequence::Term>(n - 1), [&](const DegreeSequence& s) {
      const std::vector<std::size_t> key(s.terms().begin(), s.terms().end());
      const auto it = tallies.find(key);
      const bool connected_realizable = it != tallies.end() && it->second.second > 0;
      const bool expected_gap = paper_connected_check(s).passed && !connected_realizable;
      CAPTURE(s.to_string());
      CHECK(contains(gaps, s) == expected_gap);
    });
  }
}

TEST_CASE("find_threshold_gaps") {
  const auto six = find_threshold_gaps(6);
  CHECK(contains(six, {4, 2, 1, 1, 1, 1}));
  CHECK(std::is_sorted(six.begin(), six.end()));
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<DegreeSequence::Term> star(n, 1);
    star[0] = static_cast<DegreeSequence::Term>(n - 1);
    const auto phi = static_cast<std::int64_t>(n);
    const bool at_or_below = 2 * (phi - 1) <= (phi - 2) * (phi - 3) + 2;
    CAPTURE(n);
    CHECK(contains(six, DegreeSequence(star)) == at_or_below);
  }
  CHECK(find_threshold_gaps(6, 4) == six);
  CHECK_THROWS_AS(find_threshold_gaps(kMaxThresholdScan + 1), Error);
}

TEST_CASE("threshold gaps agree with brute force") {
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<DegreeSequence> expected;
    for (const auto& [degrees, tally] : brute_force_tallies(n)) {
      const DegreeSequence s(std::vector<DegreeSequence::Term>(degrees.begin(), degrees.end()));
      if (tally.first == tally.second && !paper_necessarily_connected(s)) expected.push_back(s);
    }
    std::vector<DegreeSequence> got;
    for (const auto& s : find_threshold_gaps(n))
      if (s.size() == n) got.push_back(s);
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
  }
}
