#include "degseq/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>

#include "degseq/error.hpp"

namespace degseq {

namespace {

void check_size(std::size_t n) {
  if (n > kMaxOracleVertices) {
    throw Error(ErrorCode::LimitExceeded, std::to_string(n) + " vertices exceeds the oracle cap of " +
                                              std::to_string(kMaxOracleVertices));
  }
}

// incidence[v] has the code bits of every pair touching v.
std::array<std::uint64_t, kMaxOracleVertices> incidence_masks(std::size_t n) {
  std::array<std::uint64_t, kMaxOracleVertices> inc{};
  const std::size_t m = pair_count(n);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << (m - 1 - pair_index(i, j));
      inc[i] |= bit;
      inc[j] |= bit;
    }
  return inc;
}

bool meets_min_degree(std::uint64_t code, std::size_t n, std::size_t min_degree,
                      const std::array<std::uint64_t, kMaxOracleVertices>& inc) {
  if (min_degree == 0) return true;
  for (std::size_t v = 0; v < n; ++v)
    if (static_cast<std::size_t>(std::popcount(code & inc[v])) < min_degree) return false;
  return true;
}

// Splits [0, total) into `jobs` contiguous ranges and runs work(worker, lo, hi)
// on separate threads. Results must be merged by the caller in worker order.
template <class Work>
void run_partitioned(std::uint64_t total, std::size_t jobs, Work&& work) {
  jobs = std::max<std::size_t>(1, std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(total, 1)));
  if (jobs == 1) {
    work(std::size_t{0}, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    const std::uint64_t lo = total * w / jobs;
    const std::uint64_t hi = total * (w + 1) / jobs;
    threads.emplace_back([&, w, lo, hi] {
      try {
        work(w, lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::uint64_t code_space(std::size_t n) { return std::uint64_t{1} << pair_count(n); }

}  // namespace

std::size_t default_jobs() {
  if (const char* env = std::getenv("DEGSEQ_JOBS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void for_each_code(std::size_t n, std::size_t min_degree, const std::function<void(std::uint64_t)>& visit) {
  check_size(n);
  const auto inc = incidence_masks(n);
  const std::uint64_t total = code_space(n);
  for (std::uint64_t code = 0; code < total; ++code)
    if (meets_min_degree(code, n, min_degree, inc)) visit(code);
}

void enumerate_graphs(std::size_t n, std::size_t min_degree, const std::function<void(const SimpleGraph&)>& visit) {
  for_each_code(n, min_degree, [&](std::uint64_t code) { visit(graph_from_code(n, code)); });
}

std::uint64_t CellCensus::column_total(std::uint64_t j) const {
  std::uint64_t total = 0;
  for (const auto& [cell, count] : counts)
    if (cell.j == j) total += count;
  return total;
}

CellCensus cell_census(std::size_t max_vertices, const CensusOptions& options) {
  check_size(max_vertices);
  if (max_vertices == 0) throw Error(ErrorCode::LimitExceeded, "census needs at least one vertex");

  CellCensus census;
  census.max_vertices = max_vertices;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    const auto inc = incidence_masks(n);
    const std::uint64_t min_edges = n - 1;
    // One edge-count histogram (and representative list) per worker.
    const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
    std::vector<std::vector<std::uint64_t>> counts(jobs, std::vector<std::uint64_t>(pair_count(n) + 1, 0));
    std::vector<std::vector<std::uint64_t>> reps(jobs);

    run_partitioned(code_space(n), jobs, [&](std::size_t w, std::uint64_t lo, std::uint64_t hi) {
      for (std::uint64_t code = lo; code < hi; ++code) {
        const auto edges = static_cast<std::uint64_t>(std::popcount(code));
        if (edges < min_edges || !meets_min_degree(code, n, n > 1 ? 1 : 0, inc)) continue;
        const BitGraph g = BitGraph::from_code(n, code);
        if (!g.connected() || !is_canonical_code(g, code)) continue;
        ++counts[w][edges];
        if (options.representatives) reps[w].push_back(code);
      }
    });

    for (std::uint64_t e = min_edges; e <= pair_count(n); ++e) {
      std::uint64_t total = 0;
      for (const auto& c : counts) total += c[e];
      if (total == 0) continue;
      const PartitionCell cell{e + 1 - n, n - 1};
      census.counts[cell] = total;
    }
    if (options.representatives) {
      for (const auto& worker : reps)
        for (std::uint64_t code : worker) {
          const auto edges = static_cast<std::uint64_t>(std::popcount(code));
          census.representatives[PartitionCell{edges + 1 - n, n - 1}].push_back({n, code});
        }
      for (auto& [cell, list] : census.representatives) std::sort(list.begin(), list.end());
    }
  }
  return census;
}

namespace {

class RealizationSearch {
 public:
  RealizationSearch(std::vector<std::int64_t> target, const std::function<void(const BitGraph&)>& emit)
      : n_(target.size()), residual_(std::move(target)), emit_(emit) {
    graph_.n = n_;
  }

  void run() { descend(0, 1); }

 private:
  // Decides pair (u, v); rows are filled in row-major order so vertex u is
  // finished once v passes n - 1.
  void descend(std::size_t u, std::size_t v) {
    if (u + 1 >= n_) {
      if (n_ == 0 || residual_[n_ - 1] == 0) emit_(graph_);
      return;
    }
    if (v >= n_) {
      if (residual_[u] == 0) descend(u + 1, u + 2);
      return;
    }
    if (residual_[u] > static_cast<std::int64_t>(n_ - v)) return;
    if (residual_[u] > 0 && residual_[v] > 0) {
      --residual_[u];
      --residual_[v];
      graph_.rows[u] |= static_cast<std::uint16_t>(1u << v);
      graph_.rows[v] |= static_cast<std::uint16_t>(1u << u);
      descend(u, v + 1);
      graph_.rows[u] &= static_cast<std::uint16_t>(~(1u << v));
      graph_.rows[v] &= static_cast<std::uint16_t>(~(1u << u));
      ++residual_[u];
      ++residual_[v];
    }
    descend(u, v + 1);
  }

  std::size_t n_;
  std::vector<std::int64_t> residual_;
  const std::function<void(const BitGraph&)>& emit_;
  BitGraph graph_;
};

}  // namespace

std::vector<SimpleGraph> all_realizations(const DegreeSequence& s, RealizationMode mode) {
  check_size(s.size());
  const std::size_t n = s.size();
  if (s.degree_sum() % 2 != 0 || s.largest() >= n) return {};

  if (mode == RealizationMode::UpToIsomorphism) {
    // Every class has a labeling with degree s[i] at vertex i.
    std::set<CanonicalForm> classes;
    const std::function<void(const BitGraph&)> emit = [&](const BitGraph& g) { classes.insert(canonical_form(g)); };
    RealizationSearch(std::vector<std::int64_t>(s.terms().begin(), s.terms().end()), emit).run();
    std::vector<SimpleGraph> out;
    out.reserve(classes.size());
    for (const CanonicalForm& f : classes) out.push_back(graph_from_code(f.vertex_count, f.code));
    return out;
  }

  std::vector<SimpleGraph> out;
  const std::function<void(const BitGraph&)> emit = [&](const BitGraph& g) { out.push_back(g.to_graph()); };
  // Each labeled graph has exactly one degree vector, so distinct
  // arrangements of s give disjoint result sets.
  std::vector<std::int64_t> arrangement(s.terms().rbegin(), s.terms().rend());
  do {
    RealizationSearch(arrangement, emit).run();
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return out;
}

bool is_forcibly_connected(const DegreeSequence& s) {
  check_size(s.size());
  const auto classes = all_realizations(s, RealizationMode::UpToIsomorphism);
  if (classes.empty()) throw Error(ErrorCode::NotGraphic, "{" + s.to_string() + "} is not graphic");
  return std::all_of(classes.begin(), classes.end(), [](const SimpleGraph& g) { return is_connected(g); });
}

std::map<DegreeSequence, RealizationTally> realization_tallies(std::size_t n, std::size_t jobs) {
  check_size(n);
  std::map<DegreeSequence, RealizationTally> out;
  if (n < 2) return out;
  const auto inc = incidence_masks(n);
  jobs = std::max<std::size_t>(1, jobs);
  // Key: 4-bit count of vertices per degree value, equivalent to the sorted sequence.
  std::vector<std::unordered_map<std::uint64_t, RealizationTally>> partial(jobs);

  run_partitioned(code_space(n), jobs, [&](std::size_t w, std::uint64_t lo, std::uint64_t hi) {
    auto& tallies = partial[w];
    for (std::uint64_t code = lo; code < hi; ++code) {
      std::uint64_t key = 0;
      bool isolated = false;
      for (std::size_t v = 0; v < n && !isolated; ++v) {
        const int d = std::popcount(code & inc[v]);
        isolated = d == 0;
        key += std::uint64_t{1} << (4 * d);
      }
      if (isolated) continue;
      auto& t = tallies[key];
      ++t.labeled;
      if (BitGraph::from_code(n, code).connected()) ++t.connected;
    }
  });

  std::unordered_map<std::uint64_t, RealizationTally> merged;
  for (const auto& p : partial)
    for (const auto& [key, t] : p) {
      auto& m = merged[key];
      m.labeled += t.labeled;
      m.connected += t.connected;
    }
  for (const auto& [key, t] : merged) {
    std::vector<DegreeSequence::Term> terms;
    for (std::size_t d = n; d-- > 1;) {
      const auto count = (key >> (4 * d)) & 0xF;
      terms.insert(terms.end(), count, static_cast<DegreeSequence::Term>(d));
    }
    out.emplace(DegreeSequence(std::move(terms)), t);
  }
  return out;
}

}  // namespace degseq
