#include "degseq/sequence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "degseq/error.hpp"
#include "degseq/trace.hpp"

namespace degseq {

DegreeSequence::DegreeSequence(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw Error(ErrorCode::InvalidSequence, "sequence must have at least one term");
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i] == 0) {
      throw Error(ErrorCode::InvalidSequence, "term " + std::to_string(i + 1) + " is zero; terms must be positive");
    }
    if (i > 0 && terms_[i] > terms_[i - 1]) {
      throw Error(ErrorCode::InvalidSequence, "terms must be non-increasing (term " + std::to_string(i + 1) + ")");
    }
  }
  degree_sum_ = std::accumulate(terms_.begin(), terms_.end(), std::uint64_t{0});
}

DegreeSequence::DegreeSequence(std::initializer_list<Term> terms) : DegreeSequence(std::vector<Term>(terms)) {}

DegreeSequence DegreeSequence::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), std::greater<>());
  return DegreeSequence(std::move(terms));
}

std::string DegreeSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(terms_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const DegreeSequence& a, const DegreeSequence& b) {
  if (auto c = a.terms_.size() <=> b.terms_.size(); c != 0) return c;
  return a.terms_ <=> b.terms_;
}

DegreeSequence degree_sequence(const SimpleGraph& g) {
  if (g.vertex_count() == 0) throw Error(ErrorCode::InvalidGraph, "graph has no vertices");
  const auto deg = g.degrees();
  std::vector<DegreeSequence::Term> terms;
  terms.reserve(deg.size());
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] == 0) throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(v) + " has degree 0");
    terms.push_back(static_cast<DegreeSequence::Term>(deg[v]));
  }
  return DegreeSequence::from_unsorted(std::move(terms));
}

AssociatedPair associated_pair(const DegreeSequence& s) { return {s.size(), s.degree_sum()}; }

std::size_t ConstructionTrace::open_count() const {
  return static_cast<std::size_t>(
      std::count_if(steps.begin(), steps.end(), [](const TraceStep& st) { return st.kind == StepKind::Open; }));
}

std::size_t ConstructionTrace::closed_count() const { return steps.size() - open_count(); }

}  // namespace degseq
