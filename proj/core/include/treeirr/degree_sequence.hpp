#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "treeirr/error.hpp"

namespace treeirr {

/// Non-increasing sequence of the degrees of a tree's internal (non-leaf)
/// vertices. Every entry is >= 2; a degree-1 vertex is a leaf, not internal.
class InternalDegreeSequence {
 public:
  /// Parses comma-separated integers, whitespace tolerated; the order in the
  /// text is not significant. Throws EmptySequence, MalformedInput,
  /// NonPositiveEntry, or EntryBelowTwo.
  static InternalDegreeSequence parse(std::string_view text);

  /// Sorts and validates an explicit degree list.
  static InternalDegreeSequence of(std::vector<int> degrees);

  const std::vector<int>& degrees() const noexcept { return degrees_; }
  int length() const noexcept { return static_cast<int>(degrees_.size()); }

  std::string to_string() const;  // "8,5,4,2"

  friend bool operator==(const InternalDegreeSequence&, const InternalDegreeSequence&) = default;

 private:
  explicit InternalDegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {}
  std::vector<int> degrees_;
};

struct RealizationCounts {
  long long total_vertices = 0;
  long long leaf_count = 0;
  friend bool operator==(const RealizationCounts&, const RealizationCounts&) = default;
};

/// The unique vertex and leaf counts of any tree realizing the sequence:
/// leaves = sum(d) - 2k + 2 and n = sum(d) - k + 2 by the handshake count.
RealizationCounts realization_counts(const InternalDegreeSequence& seq);

}  // namespace treeirr
