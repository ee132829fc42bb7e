#include "treeirr/extremal.hpp"

#include <cstdlib>

namespace treeirr {

namespace {

void require_degrees(std::initializer_list<int> degrees) {
  for (int d : degrees)
    if (d < 2) raise(errc::degree_below_two, "degree " + std::to_string(d) + " is below 2");
}

long long sq(long long x) { return x * x; }

}  // namespace

ExtremalResult extremal_search(const InternalDegreeSequence& seq, IndexKind kind,
                               const EnumerationOptions& options) {
  std::vector<Realization> realizations = enumerate_realizations(seq, options);
  ExtremalResult result;
  result.kind = kind;
  bool first = true;
  for (const Realization& r : realizations) {
    long long value = tree_index(r.tree, kind);
    if (first || value < result.min_value) result.min_value = value;
    if (first || value > result.max_value) result.max_value = value;
    first = false;
  }
  for (Realization& r : realizations) {
    long long value = tree_index(r.tree, kind);
    if (value == result.min_value) result.min_witnesses.push_back(r);
    if (value == result.max_value) result.max_witnesses.push_back(std::move(r));
  }
  return result;
}

long long k3_arrangement_irr(int a, int b, int c, K3Middle middle) {
  require_degrees({a, b, c});
  long long m = middle == K3Middle::a ? a : middle == K3Middle::b ? b : c;
  long long p = middle == K3Middle::a ? b : a;
  long long q = middle == K3Middle::c ? b : c;
  return std::abs(m - p) + std::abs(m - q) + (m - 1) * (m - 2) + sq(p - 1) + sq(q - 1);
}

long long k3_arrangement_sigma(int a, int b, int c, K3Middle middle) {
  require_degrees({a, b, c});
  long long m = middle == K3Middle::a ? a : middle == K3Middle::b ? b : c;
  long long p = middle == K3Middle::a ? b : a;
  long long q = middle == K3Middle::c ? b : c;
  return sq(m - p) + sq(m - q) + sq(m - 1) * (m - 2) + sq(p - 1) * (p - 1) + sq(q - 1) * (q - 1);
}

long long k3_printed_irr_max(int a, int b, int c) {
  require_degrees({a, b, c});
  long long la = a, lb = b, lc = c;
  return sq(la - 1) + sq(lb - 1) + (lc - 1) * (lc - 2) * (la - lc) * (lb - lc);
}

long long k3_corrected_irr_max(int a, int b, int c) {
  require_degrees({a, b, c});
  long long la = a, lb = b, lc = c;
  return sq(la - 1) + sq(lb - 1) + (lc - 1) * (lc - 2) + (la - lc) + (lb - lc);
}

long long k3_irr_min_formula(int a, int b, int c) {
  require_degrees({a, b, c});
  long long la = a, lb = b, lc = c;
  return sq(la - 1) + sq(lc - 1) + (lb - 1) * (lb - 2) + (la - lc);
}

long long k4_star_irr(int d, int a, int b, int c) {
  require_degrees({a, b, c});
  if (d < 3)
    raise(errc::center_degree_too_small,
          "star center degree " + std::to_string(d) + " needs 3 internal neighbors");
  long long ld = d;
  return sq(static_cast<long long>(a) - 1) + sq(static_cast<long long>(b) - 1) +
         sq(static_cast<long long>(c) - 1) + std::abs(ld - a) + std::abs(ld - b) +
         std::abs(ld - c) + (ld - 1) * (ld - 3);
}

namespace {

long long caterpillar_index(std::span<const int> path, bool squared) {
  if (path.empty()) raise(errc::empty_sequence, "internal path has no vertices");
  for (int d : path)
    if (d < 2) raise(errc::degree_below_two, "internal degree " + std::to_string(d) + " is below 2");

  auto leaf_term = [&](long long d, long long leaves) {
    return squared ? leaves * sq(d - 1) : leaves * (d - 1);
  };
  int k = static_cast<int>(path.size());
  if (k == 1) return leaf_term(path[0], path[0]);

  long long total = leaf_term(path[0], path[0] - 1) + leaf_term(path[k - 1], path[k - 1] - 1);
  for (int i = 1; i + 1 < k; ++i) total += leaf_term(path[i], path[i] - 2);
  for (int i = 0; i + 1 < k; ++i) {
    long long diff = std::abs(static_cast<long long>(path[i]) - path[i + 1]);
    total += squared ? sq(diff) : diff;
  }
  return total;
}

}  // namespace

long long caterpillar_irr(std::span<const int> internal_path) {
  return caterpillar_index(internal_path, false);
}

long long caterpillar_irr(std::initializer_list<int> internal_path) {
  return caterpillar_irr(std::span<const int>(internal_path.begin(), internal_path.size()));
}

long long caterpillar_sigma(std::span<const int> internal_path) {
  return caterpillar_index(internal_path, true);
}

long long caterpillar_sigma(std::initializer_list<int> internal_path) {
  return caterpillar_sigma(std::span<const int>(internal_path.begin(), internal_path.size()));
}

ConjectureReport check_gap_identity(const InternalDegreeSequence& seq,
                                  const EnumerationOptions& options) {
  if (seq.length() != 3)
    raise(errc::wrong_arity,
          "gap identity check needs exactly 3 internal degrees, got " + std::to_string(seq.length()));
  ExtremalResult extrema = extremal_search(seq, IndexKind::albertson, options);
  ConjectureReport report{seq, 2LL * (seq.degrees()[1] - seq.degrees()[2]),
                          extrema.max_value - extrema.min_value};
  return report;
}

std::vector<ConjectureReport> sweep_gap_identity(int max_degree, const EnumerationOptions& options) {
  std::vector<ConjectureReport> reports;
  for (int a = 2; a <= max_degree; ++a)
    for (int b = 2; b <= a; ++b)
      for (int c = 2; c <= b; ++c)
        reports.push_back(check_gap_identity(InternalDegreeSequence::of({a, b, c}), options));
  return reports;
}

}  // namespace treeirr
