#pragma once

#include <span>
#include <vector>

#include "treeirr/enumeration.hpp"
#include "treeirr/indices.hpp"

namespace treeirr {

/// Exact extrema of one index over every realization of a sequence, with all
/// witnesses in canonical order.
struct ExtremalResult {
  IndexKind kind = IndexKind::albertson;
  long long min_value = 0;
  long long max_value = 0;
  std::vector<Realization> min_witnesses;
  std::vector<Realization> max_witnesses;
};

ExtremalResult extremal_search(const InternalDegreeSequence& seq, IndexKind kind,
                               const EnumerationOptions& options = {});

/// Which of the three degrees sits in the middle of a k=3 caterpillar.
enum class K3Middle { a, b, c };

/// Albertson index of the k=3 caterpillar with the chosen middle degree:
/// |m-p| + |m-q| + (m-1)(m-2) + (p-1)^2 + (q-1)^2.
long long k3_arrangement_irr(int a, int b, int c, K3Middle middle);

/// Sigma analogue: (m-p)^2 + (m-q)^2 + (m-1)^2(m-2) + (p-1)^3 + (q-1)^3.
long long k3_arrangement_sigma(int a, int b, int c, K3Middle middle);

/// The published maximum formula evaluated verbatim, product term and all:
/// (a-1)^2 + (b-1)^2 + (c-1)(c-2)(a-c)(b-c). Disagrees with the enumeration
/// oracle (13 vs 16 already at (4,3,2)); kept available for the erratum
/// report.
long long k3_printed_irr_max(int a, int b, int c);

/// Additive correction that the oracle confirms as the true maximum:
/// (a-1)^2 + (b-1)^2 + (c-1)(c-2) + (a-c) + (b-c); equals middle = c.
long long k3_corrected_irr_max(int a, int b, int c);

/// (a-1)^2 + (c-1)^2 + (b-1)(b-2) + (a-c); equals middle = b and is the
/// oracle minimum.
long long k3_irr_min_formula(int a, int b, int c);

/// Albertson index of the k=4 star placement with center degree d and arm
/// degrees a, b, c. Difference terms use absolute values so any center
/// qualifies, not only the maximum degree.
long long k4_star_irr(int d, int a, int b, int c);

/// Index of the caterpillar with the given internal path order: ends
/// contribute (p-1)^2, interiors (p-1)(p-2), plus consecutive |differences|
/// (cubes, squares and squared differences for sigma). Agrees with the
/// indices module on the built tree.
long long caterpillar_irr(std::span<const int> internal_path);
long long caterpillar_irr(std::initializer_list<int> internal_path);
long long caterpillar_sigma(std::span<const int> internal_path);
long long caterpillar_sigma(std::initializer_list<int> internal_path);

/// Predicted vs oracle gap irr_max - irr_min for a length-3 sequence, where
/// the prediction is 2(d2 - d3).
struct ConjectureReport {
  InternalDegreeSequence sequence;
  long long predicted_gap = 0;
  long long oracle_gap = 0;
  bool confirmed() const noexcept { return predicted_gap == oracle_gap; }
};

ConjectureReport check_gap_identity(const InternalDegreeSequence& seq,
                                  const EnumerationOptions& options = {});

/// One report for every sequence 2 <= d3 <= d2 <= d1 <= max_degree, in
/// lexicographic (d1, d2, d3) order.
std::vector<ConjectureReport> sweep_gap_identity(int max_degree,
                                               const EnumerationOptions& options = {});

}  // namespace treeirr
