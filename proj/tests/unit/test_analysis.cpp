#include <doctest.h>

#include <random>

#include "degseq/analysis.hpp"
#include "degseq/error.hpp"
#include "degseq/gaps.hpp"
#include "support/oracles.hpp"

using namespace degseq;

namespace {

std::vector<Condition> reasons(const DegreeSequence& s) { return paper_connected_check(s).failures; }

bool brute_force_graphic(const DegreeSequence& s) {
  bool found = false;
  const std::vector<std::size_t> want(s.terms().begin(), s.terms().end());
  testing::brute_force_graphs(s.size(), [&](const SimpleGraph& g) {
    found = found || testing::sorted_degrees(g) == want;
  });
  return found;
}

}  // namespace

TEST_CASE("is_graphic examples") {
  CHECK(is_graphic({2, 2, 2}));
  CHECK(is_graphic({4, 1, 1, 1, 1}));
  CHECK_FALSE(is_graphic({3, 3, 1, 1}));
  // Independent check: no graph on 4 vertices has degrees {3,3,1,1}.
  CHECK_FALSE(brute_force_graphic({3, 3, 1, 1}));
  CHECK_FALSE(is_graphic({1}));
  CHECK_FALSE(is_graphic({1, 1, 1}));
}

TEST_CASE("is_graphic agrees with brute force for every sequence of length <= 5") {
  for (std::size_t n = 1; n <= 5; ++n)
    for_each_sequence(n, static_cast<DegreeSequence::Term>(n + 1), [&](const DegreeSequence& s) {
      CAPTURE(s.to_string());
      CHECK(is_graphic(s) == brute_force_graphic(s));
    });
}

TEST_CASE("is_graphic agrees with the quadratic formulation on random long sequences") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    std::vector<DegreeSequence::Term> terms(n);
    for (auto& t : terms) t = 1 + rng() % n;
    const auto s = DegreeSequence::from_unsorted(terms);
    CHECK(is_graphic(s) == testing::naive_erdos_gallai({s.terms().begin(), s.terms().end()}));
  }
}

TEST_CASE("paper_connected_check") {
  CHECK(paper_connected_check({2, 2, 1, 1}).passed);
  CHECK(paper_connected_check({3, 3, 1, 1}).passed);
  CHECK(reasons({1, 1, 1}) == std::vector<Condition>{Condition::Parity});
  CHECK(reasons({3, 1, 1}) == std::vector<Condition>{Condition::Parity, Condition::MaxDegree});
  CHECK(reasons({1, 1, 1, 1}) == std::vector<Condition>{Condition::LowerBound});
  CHECK(reasons({4, 4, 4, 4}) == std::vector<Condition>{Condition::UpperBound, Condition::MaxDegree});
  CHECK(reasons({3, 1}) == std::vector<Condition>{Condition::UpperBound, Condition::MaxDegree});
  CHECK(reasons({6, 2, 1, 1, 1, 1}) == std::vector<Condition>{Condition::MaxDegree});
}

TEST_CASE("is_connected_sequence") {
  CHECK(is_connected_sequence({2, 2, 1, 1}));
  CHECK_FALSE(is_connected_sequence({1, 1, 1, 1}));
  CHECK_FALSE(is_connected_sequence({3, 3, 1, 1}));
  CHECK(is_connected_sequence({1, 1}));
}

TEST_CASE("paper_necessarily_connected") {
  CHECK_FALSE(paper_necessarily_connected({3, 3, 3, 3, 1, 1}));
  CHECK(paper_necessarily_connected({2, 2, 2}));
  CHECK_FALSE(paper_necessarily_connected({1, 1, 1, 1}));
  CHECK(paper_necessarily_connected({2, 2, 1, 1}));
}

TEST_CASE("analyze keeps the four-clause and exact predicates side by side") {
  const SequenceVerdict v = analyze({3, 3, 1, 1});
  CHECK(v.paper_connected);
  CHECK_FALSE(v.graphic);
  CHECK_FALSE(v.exact_connected);
  CHECK(v.failure_reasons == std::vector<Condition>{Condition::ErdosGallai});
}

TEST_CASE("analyze: exact implies graphic and paper-connected") {
  for (std::size_t n = 1; n <= 7; ++n)
    for_each_sequence(n, static_cast<DegreeSequence::Term>(n + 1), [&](const DegreeSequence& s) {
      const SequenceVerdict v = analyze(s);
      if (v.exact_connected) {
        CHECK(v.graphic);
        CHECK(v.paper_connected);
      }
    });
}

TEST_CASE("partition_cell") {
  CHECK(partition_cell({2, 2, 1, 1}) == PartitionCell{0, 3});
  CHECK(partition_cell({3, 3, 3, 3}) == PartitionCell{3, 3});
  CHECK(partition_cell({2, 2, 2}) == PartitionCell{1, 2});
  try {
    partition_cell({3, 3, 1, 1});
    FAIL("expected NotConnectedSequence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotConnectedSequence);
  }
}

TEST_CASE("column_row_bounds") {
  CHECK(column_row_bounds(3) == std::pair<std::uint64_t, std::uint64_t>{0, 3});
  CHECK(column_row_bounds(0) == std::pair<std::uint64_t, std::uint64_t>{0, 0});
  CHECK(column_row_bounds(1) == std::pair<std::uint64_t, std::uint64_t>{0, 0});
  CHECK(column_row_bounds(6) == std::pair<std::uint64_t, std::uint64_t>{0, 15});
}

TEST_CASE("edge thresholds") {
  CHECK(connectivity_edge_threshold(6) == 8);
  CHECK(connectivity_edge_threshold(4) == 3);
  CHECK(connectivity_edge_threshold(5) == 5);
  CHECK(connectivity_edge_threshold(2) == 2);
  CHECK(max_disconnected_edges(6) == 7);
  CHECK(max_disconnected_edges(4) == 2);
  CHECK(max_disconnected_edges(7) == 11);
  CHECK_THROWS_AS(connectivity_edge_threshold(1), Error);
  CHECK_THROWS_AS(max_disconnected_edges(3), Error);
  for (std::uint64_t n = 4; n <= 64; ++n) CHECK(max_disconnected_edges(n) + 1 == connectivity_edge_threshold(n));
}

TEST_CASE("max_disconnected_edges matches brute force for 4 <= n <= 6") {
  for (std::size_t n = 4; n <= 6; ++n) {
    std::size_t best = 0;
    testing::brute_force_graphs(n, [&](const SimpleGraph& g) {
      if (g.min_degree() >= 1 && !is_connected(g)) best = std::max(best, g.edge_count());
    });
    CHECK(best == max_disconnected_edges(n));
  }
}
