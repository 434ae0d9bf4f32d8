#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "degseq/canonical.hpp"
#include "degseq/error.hpp"
#include "support/oracles.hpp"

using namespace degseq;

namespace {

SimpleGraph random_graph(std::size_t n, std::mt19937& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng() % 2) edges.push_back({u, v});
  return SimpleGraph(n, edges);
}

SimpleGraph shuffled(const SimpleGraph& g, std::mt19937& rng) {
  std::vector<Vertex> labels(g.vertex_count());
  std::iota(labels.begin(), labels.end(), Vertex{0});
  std::shuffle(labels.begin(), labels.end(), rng);
  return g.relabeled(labels);
}

}  // namespace

TEST_CASE("edge codes put the first colex pair in the most significant bit") {
  // Pairs on 3 vertices: (0,1) (0,2) (1,2).
  CHECK(code_of(SimpleGraph(3, {{0, 1}})) == 0b100);
  CHECK(code_of(SimpleGraph(3, {{1, 2}})) == 0b001);
  CHECK(graph_from_code(3, 0b010) == SimpleGraph(3, {{0, 2}}));
  for (std::uint64_t c = 0; c < 64; ++c) CHECK(code_of(graph_from_code(4, c)) == c);
}

TEST_CASE("canonical_form examples") {
  CHECK(canonical_form(SimpleGraph(3, {{0, 1}, {0, 2}, {1, 2}})) == canonical_form(SimpleGraph::complete(3)));
  const SimpleGraph p4 = SimpleGraph::path(4);
  // 2-0-3-1
  const SimpleGraph p4b(4, {{0, 2}, {0, 3}, {1, 3}});
  CHECK(canonical_form(p4) == canonical_form(p4b));
  CHECK(canonical_form(p4) != canonical_form(SimpleGraph::star(4)));
  CHECK_THROWS_AS(canonical_form(SimpleGraph(kMaxOracleVertices + 1)), Error);
}

TEST_CASE("pruned search equals the unpruned minimum") {
  std::mt19937 rng(5);
  for (std::size_t n = 1; n <= 7; ++n) {
    const int trials = n <= 5 ? 200 : 30;
    for (int t = 0; t < trials; ++t) {
      const SimpleGraph g = random_graph(n, rng);
      const std::uint64_t expected = testing::bits_to_code(testing::brute_force_min_code(g));
      CHECK(canonical_form(g).code == expected);
      CHECK(is_canonical_code(n, expected));
      CHECK(is_canonical_code(n, code_of(g)) == (code_of(g) == expected));
    }
  }
}

TEST_CASE("canonical_form is invariant under relabeling") {
  std::mt19937 rng(9);
  for (std::size_t n = 1; n <= 7; ++n)
    for (int t = 0; t < 1000; ++t) {
      const SimpleGraph g = random_graph(n, rng);
      CHECK(canonical_form(g) == canonical_form(shuffled(g, rng)));
    }
}

TEST_CASE("graphs with different degree multisets get different forms") {
  std::mt19937 rng(13);
  int compared = 0;
  for (std::size_t n = 2; n <= 7; ++n)
    for (int t = 0; t < 1000; ++t) {
      const SimpleGraph a = random_graph(n, rng), b = random_graph(n, rng);
      if (testing::sorted_degrees(a) == testing::sorted_degrees(b)) continue;
      ++compared;
      CHECK(canonical_form(a) != canonical_form(b));
    }
  CHECK(compared > 1000);
}

TEST_CASE("exactly one labeling per class is canonical") {
  // Unlabeled graphs on n vertices, n = 1..5.
  const std::size_t known[] = {0, 1, 2, 4, 11, 34};
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::uint64_t> forms;
    std::size_t canonical_codes = 0;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << pair_count(n)); ++c) {
      forms.insert(canonical_form(BitGraph::from_code(n, c)).code);
      if (is_canonical_code(n, c)) ++canonical_codes;
    }
    CHECK(canonical_codes == forms.size());
    CHECK(forms.size() == known[n]);
  }
}
