#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "degseq/graph.hpp"

namespace degseq {

/// Non-increasing sequence of positive integers, n >= 1.
///
/// The constructor validates ordering and positivity; use from_unsorted() when
/// the input order is arbitrary.
class DegreeSequence {
 public:
  using Term = std::uint32_t;

  explicit DegreeSequence(std::vector<Term> terms);
  DegreeSequence(std::initializer_list<Term> terms);

  static DegreeSequence from_unsorted(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  Term operator[](std::size_t i) const { return terms_[i]; }
  Term largest() const { return terms_.front(); }
  Term smallest() const { return terms_.back(); }
  std::uint64_t degree_sum() const noexcept { return degree_sum_; }

  // "3,3,1,1"
  std::string to_string() const;

  friend bool operator==(const DegreeSequence& a, const DegreeSequence& b) { return a.terms_ == b.terms_; }
  // Shorter first, then lexicographic.
  friend std::strong_ordering operator<=>(const DegreeSequence& a, const DegreeSequence& b);

 private:
  std::vector<Term> terms_;
  std::uint64_t degree_sum_ = 0;
};

// (varphi, epsilon) = (n, sum/2). epsilon is kept doubled so odd sums stay exact.
struct AssociatedPair {
  std::uint64_t varphi = 0;
  std::uint64_t epsilon_numerator = 0;

  bool epsilon_defined() const noexcept { return epsilon_numerator % 2 == 0; }
  std::optional<std::uint64_t> epsilon() const {
    if (!epsilon_defined()) return std::nullopt;
    return epsilon_numerator / 2;
  }

  friend bool operator==(const AssociatedPair&, const AssociatedPair&) = default;
};

// Throws IsolatedVertex on a zero-degree vertex and InvalidGraph on an empty graph.
DegreeSequence degree_sequence(const SimpleGraph& g);

AssociatedPair associated_pair(const DegreeSequence& s);

}  // namespace degseq
