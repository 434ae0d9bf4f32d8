#include "degseq/canonical.hpp"

#include <bit>
#include <cstdio>
#include <string>
#include <vector>

#include "degseq/error.hpp"

namespace degseq {

namespace {

constexpr std::size_t kMaxPairs = pair_count(kMaxOracleVertices);

struct PairTable {
  std::array<std::uint8_t, kMaxPairs + 1> lo{};
  std::array<std::uint8_t, kMaxPairs + 1> hi{};

  constexpr PairTable() {
    for (std::size_t j = 1; j < kMaxOracleVertices; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        lo[pair_index(i, j)] = static_cast<std::uint8_t>(i);
        hi[pair_index(i, j)] = static_cast<std::uint8_t>(j);
      }
  }
};

constexpr PairTable kPairs{};

// Number of code bits fixed once positions 0..p are assigned.
constexpr std::size_t bits_through(std::size_t p) { return p * (p + 1) / 2; }

void check_size(std::size_t n) {
  if (n > kMaxOracleVertices) {
    throw Error(ErrorCode::LimitExceeded, std::to_string(n) + " vertices exceeds the oracle cap of " +
                                              std::to_string(kMaxOracleVertices));
  }
}

// Column p of the relabeled code: adjacency of perm[0..p-1] to v, perm[0] first.
inline std::uint64_t column(const BitGraph& g, const std::array<std::uint8_t, kMaxOracleVertices>& perm,
                            std::size_t p, std::size_t v) {
  std::uint64_t col = 0;
  for (std::size_t i = 0; i < p; ++i) col = (col << 1) | ((g.rows[perm[i]] >> v) & 1u);
  return col;
}

class MinimalCodeSearch {
 public:
  explicit MinimalCodeSearch(const BitGraph& g) : g_(g), total_bits_(pair_count(g.n)) {}

  std::uint64_t run() {
    descend(0, 0, 0);
    return best_;
  }

 private:
  void descend(std::size_t p, std::uint32_t used, std::uint64_t prefix) {
    if (p == g_.n) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        have_best_ = true;
      }
      return;
    }
    const std::size_t shift = total_bits_ - bits_through(p);
    for (std::size_t v = 0; v < g_.n; ++v) {
      if (used >> v & 1u) continue;
      const std::uint64_t code = (prefix << p) | column(g_, perm_, p, v);
      if (have_best_ && code > (best_ >> shift)) continue;
      perm_[p] = static_cast<std::uint8_t>(v);
      descend(p + 1, used | (1u << v), code);
    }
  }

  const BitGraph& g_;
  std::size_t total_bits_;
  std::array<std::uint8_t, kMaxOracleVertices> perm_{};
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

class CanonicalTest {
 public:
  CanonicalTest(const BitGraph& g, std::uint64_t code) : g_(g), code_(code), total_bits_(pair_count(g.n)) {}

  // False as soon as a relabeling with a strictly smaller code is found.
  bool run() { return descend(0, 0); }

 private:
  bool descend(std::size_t p, std::uint32_t used) {
    if (p == g_.n) return true;
    const std::uint64_t target = (code_ >> (total_bits_ - bits_through(p))) & ((std::uint64_t{1} << p) - 1);
    for (std::size_t v = 0; v < g_.n; ++v) {
      if (used >> v & 1u) continue;
      const std::uint64_t col = column(g_, perm_, p, v);
      if (col < target) return false;
      if (col > target) continue;
      perm_[p] = static_cast<std::uint8_t>(v);
      if (!descend(p + 1, used | (1u << v))) return false;
    }
    return true;
  }

  const BitGraph& g_;
  std::uint64_t code_;
  std::size_t total_bits_;
  std::array<std::uint8_t, kMaxOracleVertices> perm_{};
};

}  // namespace

BitGraph BitGraph::from_code(std::size_t n, std::uint64_t code) {
  check_size(n);
  BitGraph g;
  g.n = n;
  const std::size_t m = pair_count(n);
  while (code) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(code));
    code &= code - 1;
    const std::size_t k = m - 1 - bit;
    g.rows[kPairs.lo[k]] |= static_cast<std::uint16_t>(1u << kPairs.hi[k]);
    g.rows[kPairs.hi[k]] |= static_cast<std::uint16_t>(1u << kPairs.lo[k]);
  }
  return g;
}

BitGraph BitGraph::from_graph(const SimpleGraph& g) {
  check_size(g.vertex_count());
  BitGraph out;
  out.n = g.vertex_count();
  for (const Edge& e : g.edges()) {
    out.rows[e.u] |= static_cast<std::uint16_t>(1u << e.v);
    out.rows[e.v] |= static_cast<std::uint16_t>(1u << e.u);
  }
  return out;
}

std::uint64_t BitGraph::code() const {
  std::uint64_t c = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) c = (c << 1) | ((rows[i] >> j) & 1u);
  return c;
}

std::size_t BitGraph::degree(std::size_t v) const { return static_cast<std::size_t>(std::popcount(rows[v])); }

bool BitGraph::connected() const {
  if (n == 0) return false;
  const std::uint32_t all = (1u << n) - 1;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    const auto v = static_cast<std::size_t>(std::countr_zero(frontier));
    frontier &= frontier - 1;
    const std::uint32_t fresh = rows[v] & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen == all;
}

SimpleGraph BitGraph::to_graph() const {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rows[u] >> v & 1u) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  return SimpleGraph(n, edges);
}

std::uint64_t code_of(const SimpleGraph& g) { return BitGraph::from_graph(g).code(); }

std::string CanonicalForm::to_hex() const {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%zu:%llx", vertex_count, static_cast<unsigned long long>(code));
  return buf;
}

CanonicalForm canonical_form(const BitGraph& g) {
  check_size(g.n);
  return {g.n, MinimalCodeSearch(g).run()};
}

CanonicalForm canonical_form(const SimpleGraph& g) { return canonical_form(BitGraph::from_graph(g)); }

bool is_canonical_code(std::size_t n, std::uint64_t code) {
  return is_canonical_code(BitGraph::from_code(n, code), code);
}

bool is_canonical_code(const BitGraph& g, std::uint64_t code) { return CanonicalTest(g, code).run(); }

}  // namespace degseq
