#include "degseq/analysis.hpp"

#include <string>

#include "degseq/error.hpp"

namespace degseq {

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::Parity: return "parity";
    case Condition::LowerBound: return "lower-bound";
    case Condition::UpperBound: return "upper-bound";
    case Condition::MaxDegree: return "max-degree";
    case Condition::ErdosGallai: return "erdos-gallai";
    case Condition::EdgeThreshold: return "edge-threshold";
  }
  return "unknown";
}

bool is_graphic(const DegreeSequence& s) {
  if (s.degree_sum() % 2 != 0) return false;
  const auto& d = s.terms();
  const std::size_t n = d.size();
  std::vector<std::uint64_t> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + d[i];

  // at_least = number of terms >= k; the terms form a prefix since d is sorted.
  std::size_t at_least = n;
  for (std::size_t k = 1; k <= n; ++k) {
    while (at_least > 0 && d[at_least - 1] < k) --at_least;
    const std::uint64_t capped = at_least > k ? static_cast<std::uint64_t>(at_least - k) * k : 0;
    const std::size_t tail_from = std::max(k, at_least);
    const std::uint64_t rhs = static_cast<std::uint64_t>(k) * (k - 1) + capped + (prefix[n] - prefix[tail_from]);
    if (prefix[k] > rhs) return false;
  }
  return true;
}

ConnectivityCheck paper_connected_check(const DegreeSequence& s) {
  const std::uint64_t phi = s.size();
  const std::uint64_t sum = s.degree_sum();
  ConnectivityCheck out;
  // The bound clauses are about epsilon itself, so they are only evaluated
  // once epsilon is a whole number. Doubled quantities avoid the halving.
  if (sum % 2 != 0) {
    out.failures.push_back(Condition::Parity);
  } else {
    if (sum < 2 * (phi - 1)) out.failures.push_back(Condition::LowerBound);
    if (sum > phi * (phi - 1)) out.failures.push_back(Condition::UpperBound);
  }
  if (s.largest() > phi - 1) out.failures.push_back(Condition::MaxDegree);
  out.passed = out.failures.empty();
  return out;
}

bool is_connected_sequence(const DegreeSequence& s) {
  return is_graphic(s) && s.degree_sum() >= 2 * (s.size() - 1);
}

namespace {

bool above_edge_threshold(const DegreeSequence& s) {
  const auto phi = static_cast<std::int64_t>(s.size());
  return static_cast<std::int64_t>(s.degree_sum()) > (phi - 2) * (phi - 3) + 2;
}

}  // namespace

bool paper_necessarily_connected(const DegreeSequence& s) {
  return paper_connected_check(s).passed && above_edge_threshold(s);
}

SequenceVerdict analyze(const DegreeSequence& s) {
  SequenceVerdict v;
  const ConnectivityCheck check = paper_connected_check(s);
  v.graphic = is_graphic(s);
  v.paper_connected = check.passed;
  v.exact_connected = is_connected_sequence(s);
  v.paper_necessarily_connected = paper_necessarily_connected(s);
  v.failure_reasons = check.failures;
  if (!v.graphic && s.degree_sum() % 2 == 0) v.failure_reasons.push_back(Condition::ErdosGallai);
  if (!above_edge_threshold(s)) v.failure_reasons.push_back(Condition::EdgeThreshold);
  return v;
}

PartitionCell partition_cell(const DegreeSequence& s) {
  if (!is_connected_sequence(s)) {
    throw Error(ErrorCode::NotConnectedSequence,
                "{" + s.to_string() + "} is not the degree sequence of a connected graph");
  }
  const std::uint64_t phi = s.size();
  const std::uint64_t eps = s.degree_sum() / 2;
  return {eps + 1 - phi, phi - 1};
}

std::pair<std::uint64_t, std::uint64_t> column_row_bounds(std::uint64_t j) {
  return {0, j * (j == 0 ? 0 : j - 1) / 2};
}

std::uint64_t connectivity_edge_threshold(std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::DomainTooSmall, "edge threshold needs n >= 2");
  // n^2 - 5n is always even; add 10 first so the unsigned arithmetic never goes negative.
  return (n * n + 10 - 5 * n) / 2;
}

std::uint64_t max_disconnected_edges(std::uint64_t n) {
  if (n < 4) {
    throw Error(ErrorCode::DomainTooSmall,
                "no disconnected graph without isolated vertices exists on fewer than 4 vertices");
  }
  return (n - 2) * (n - 3) / 2 + 1;
}

}  // namespace degseq
