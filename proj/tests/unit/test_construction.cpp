#include <doctest.h>

#include <random>

#include "degseq/analysis.hpp"
#include "degseq/canonical.hpp"
#include "degseq/construction.hpp"
#include "degseq/error.hpp"
#include "degseq/gaps.hpp"
#include "degseq/oracle.hpp"
#include "support/oracles.hpp"

using namespace degseq;

namespace {

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  return a.vertex_count() == b.vertex_count() && canonical_form(a) == canonical_form(b);
}

std::vector<std::size_t> sorted_degrees(const SimpleGraph& g) { return testing::sorted_degrees(g); }

}  // namespace

TEST_CASE("havel_hakimi realizes graphic sequences with vertex i of degree s[i]") {
  const SimpleGraph g = havel_hakimi({3, 3, 2, 2, 1, 1});
  CHECK(g.degrees() == std::vector<std::size_t>{3, 3, 2, 2, 1, 1});
  CHECK_THROWS_AS(havel_hakimi({3, 3, 1, 1}), Error);
}

TEST_CASE("realize_connected examples") {
  const auto c4 = realize_connected({2, 2, 2, 2});
  CHECK(isomorphic(c4.graph, SimpleGraph::cycle(4)));

  const auto star = realize_connected({4, 1, 1, 1, 1});
  CHECK(isomorphic(star.graph, SimpleGraph::star(5)));
  CHECK(star.swaps_used == 0);

  const auto p4 = realize_connected({2, 2, 1, 1});
  CHECK(isomorphic(p4.graph, SimpleGraph::path(4)));

  for (const auto* r : {&c4, &star, &p4}) {
    CHECK(is_connected(r->graph));
    CHECK(replay_trace(r->trace) == r->graph);
  }
}

TEST_CASE("realize_connected is deterministic") {
  const DegreeSequence s{3, 3, 2, 2, 2, 1, 1};
  const auto a = realize_connected(s);
  const auto b = realize_connected(s);
  CHECK(a.graph == b.graph);
  CHECK(a.trace == b.trace);
}

TEST_CASE("realize_connected rejects sequences without connected realizations") {
  for (const DegreeSequence& s : {DegreeSequence{3, 3, 1, 1}, DegreeSequence{1, 1, 1, 1}}) {
    try {
      realize_connected(s);
      FAIL("expected NotConnectedSequence");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotConnectedSequence);
    }
  }
}

TEST_CASE("realize_connected matches the degree multiset for every connected sequence of length <= 6") {
  for (std::size_t n = 2; n <= 6; ++n)
    for_each_sequence(n, static_cast<DegreeSequence::Term>(n - 1), [&](const DegreeSequence& s) {
      if (!is_connected_sequence(s)) return;
      const auto r = realize_connected(s);
      CAPTURE(s.to_string());
      CHECK(degree_sequence(r.graph) == s);
      CHECK(is_connected(r.graph));
    });
}

TEST_CASE("merge_components_by_swap") {
  SUBCASE("K3 + K2 becomes a connected graph with the same degrees") {
    const auto g = SimpleGraph::disjoint_union(SimpleGraph::complete(3), SimpleGraph::complete(2));
    const MergeOutcome m = merge_components(g);
    CHECK(is_connected(m.graph));
    CHECK(m.swaps == 1);
    CHECK(degree_sequence(m.graph) == DegreeSequence{2, 2, 2, 1, 1});
    CHECK(isomorphic(m.graph, SimpleGraph::path(5)));
  }
  SUBCASE("connected input is a fixpoint") {
    const SimpleGraph c5 = SimpleGraph::cycle(5);
    const MergeOutcome m = merge_components(c5);
    CHECK(m.graph == c5);
    CHECK(m.swaps == 0);
  }
  SUBCASE("K4 + K2") {
    const auto g = SimpleGraph::disjoint_union(SimpleGraph::complete(4), SimpleGraph::complete(2));
    const SimpleGraph merged = merge_components_by_swap(g);
    CHECK(is_connected(merged));
    CHECK(degree_sequence(merged) == DegreeSequence{3, 3, 3, 3, 1, 1});
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(merge_components(SimpleGraph(3, {{0, 1}})), Error);
    const auto two_k2 = SimpleGraph::disjoint_union(SimpleGraph::complete(2), SimpleGraph::complete(2));
    try {
      merge_components(two_k2);
      FAIL("expected CannotMerge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CannotMerge);
    }
  }
}

TEST_CASE("each swap strictly lowers the component count and keeps degrees") {
  std::mt19937 rng(3);
  int multi_swap_cases = 0;
  for (int trial = 0; trial < 300; ++trial) {
    // Disjoint cliques and paths, with enough edges overall to be mergeable.
    SimpleGraph g(0);
    while (g.vertex_count() < 12) {
      const std::size_t size = 2 + rng() % 4;
      g = SimpleGraph::disjoint_union(g, rng() % 2 ? SimpleGraph::complete(size) : SimpleGraph::path(size));
    }
    if (g.edge_count() + 1 < g.vertex_count()) continue;
    const auto before = sorted_degrees(g);
    std::size_t components = component_count(g);
    const MergeOutcome m = merge_components(g, [&](const SimpleGraph& step) {
      const std::size_t now = component_count(step);
      CHECK(now < components);
      components = now;
      CHECK(sorted_degrees(step) == before);
    });
    CHECK(is_connected(m.graph));
    if (m.swaps > 1) ++multi_swap_cases;
  }
  CHECK(multi_swap_cases > 0);
}

TEST_CASE("canonical_trace") {
  CHECK(canonical_trace(SimpleGraph(1)).steps.empty());

  const auto c4 = canonical_trace(SimpleGraph::cycle(4));
  REQUIRE(c4.steps.size() == 4);
  for (int k = 0; k < 3; ++k) CHECK(c4.steps[k].kind == StepKind::Open);
  CHECK(c4.steps[3].kind == StepKind::Closed);

  const auto k4 = canonical_trace(SimpleGraph::complete(4));
  CHECK(k4.open_count() == 3);
  CHECK(k4.closed_count() == 3);

  CHECK_THROWS_AS(canonical_trace(SimpleGraph(2)), Error);
}

TEST_CASE("canonical_trace relabels graphs whose indices are not a growth order") {
  // Path 0-2-1: vertex 1 is not adjacent to vertex 0.
  const SimpleGraph g(3, {{0, 2}, {1, 2}});
  const auto t = canonical_trace(g);
  CHECK(t.vertex_labels == std::vector<Vertex>{0, 2, 1});
  CHECK(replay_trace(t) == g);
}

TEST_CASE("replay_trace") {
  const ConstructionTrace triangle{{TraceStep::open(0, 1), TraceStep::open(1, 2), TraceStep::closed(0, 2)}, {}};
  CHECK(replay_trace(triangle) == SimpleGraph::complete(3));

  auto fault_of = [](const ConstructionTrace& t) {
    try {
      replay_trace(t);
    } catch (const InvalidStepError& e) {
      return std::pair{e.index(), e.fault()};
    }
    FAIL("expected InvalidStep");
    return std::pair{std::size_t{0}, StepFault::WrongKind};
  };
  CHECK(fault_of({{TraceStep::open(0, 1), TraceStep::closed(0, 1)}, {}}) ==
        std::pair{std::size_t{1}, StepFault::DuplicateEdge});
  CHECK(fault_of({{TraceStep::open(0, 1), TraceStep::closed(1, 2)}, {}}) ==
        std::pair{std::size_t{1}, StepFault::WrongKind});
  CHECK(fault_of({{TraceStep::open(0, 1), TraceStep::open(2, 3)}, {}}) ==
        std::pair{std::size_t{1}, StepFault::DanglingVertex});
  CHECK(fault_of({{TraceStep::open(0, 1), TraceStep::open(0, 1)}, {}}) ==
        std::pair{std::size_t{1}, StepFault::DuplicateEdge});
  CHECK(fault_of({{TraceStep::open(0, 1), TraceStep::open(1, 2), TraceStep::open(0, 2)}, {}}) ==
        std::pair{std::size_t{2}, StepFault::WrongKind});
  CHECK(fault_of({{TraceStep::open(0, 5)}, {}}) == std::pair{std::size_t{0}, StepFault::DanglingVertex});
  CHECK(fault_of({{TraceStep::open(0, 0)}, {}}) == std::pair{std::size_t{0}, StepFault::SelfLoop});
  CHECK(fault_of({{TraceStep::open(0, 1)}, {1, 1}}) == std::pair{std::size_t{1}, StepFault::BadLabels});
}

TEST_CASE("canonical traces round-trip for every connected graph on <= 5 vertices") {
  for (std::size_t n = 1; n <= 5; ++n)
    testing::brute_force_graphs(n, [&](const SimpleGraph& g) {
      if (!is_connected(g)) return;
      const auto t = canonical_trace(g);
      REQUIRE(t.steps.size() == g.edge_count());
      for (std::size_t k = 0; k < t.steps.size(); ++k)
        CHECK(t.steps[k].kind == (k + 1 < n ? StepKind::Open : StepKind::Closed));
      CHECK(replay_trace(t) == g);
    });
}

TEST_CASE("extremal_pair") {
  const auto [g1, g2] = extremal_pair(6);
  CHECK(g1.edge_count() == 7);
  CHECK_FALSE(is_connected(g1));
  CHECK(is_connected(g2));
  CHECK(degree_sequence(g2) == DegreeSequence{3, 3, 3, 3, 1, 1});

  const auto [h1, h2] = extremal_pair(5);
  CHECK(h1.edge_count() == 4);
  CHECK(degree_sequence(h2) == DegreeSequence{2, 2, 2, 1, 1});
  CHECK(is_connected(h2));

  for (std::size_t n = 5; n <= 10; ++n) {
    const auto [a, b] = extremal_pair(n);
    CHECK(degree_sequence(a) == degree_sequence(b));
    CHECK(a.edge_count() == max_disconnected_edges(n));
    CHECK(b.edge_count() == max_disconnected_edges(n));
    CHECK(a == SimpleGraph::disjoint_union(SimpleGraph::complete(n - 2), SimpleGraph::complete(2)));
  }
  CHECK_THROWS_AS(extremal_pair(4), Error);
}
