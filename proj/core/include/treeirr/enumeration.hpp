#pragma once

#include <span>
#include <string>
#include <vector>

#include "treeirr/degree_sequence.hpp"
#include "treeirr/tree.hpp"

namespace treeirr {

/// One tree realizing an internal degree sequence. Vertices 0..k-1 of `tree`
/// are the internal vertices (in sequence order) and carry the degrees in
/// `placement`; vertices k..n-1 are leaves. `skeleton` is the induced tree on
/// the internal vertices, on the same ids 0..k-1.
struct Realization {
  Tree tree;
  Tree skeleton;
  std::vector<int> placement;
  CanonicalCode code;
};

struct EnumerationOptions {
  /// Guardrail: labeled skeleton count grows as k^(k-2), so long sequences
  /// are rejected rather than silently churning.
  int max_internal = 12;
};

/// All non-isomorphic realizations of the sequence, one representative per
/// isomorphism class, sorted by canonical code. Enumerates labeled skeleton
/// trees on k nodes Prufer-style with the per-node degree caps, attaches
/// placement(v) - skeleton_degree(v) leaves to each internal node, and dedups
/// by canonical code. Never empty for a valid sequence: the path skeleton is
/// always feasible since every entry is >= 2.
std::vector<Realization> enumerate_realizations(const InternalDegreeSequence& seq,
                                                const EnumerationOptions& options = {});

/// Number of isomorphism classes, without keeping the realizations around.
long long count_realizations(const InternalDegreeSequence& seq,
                             const EnumerationOptions& options = {});

/// Short human-readable descriptor of the internal arrangement, e.g.
/// "path:8-4-2-5", "star:8(5-4-2)", or a nested form for larger skeletons.
/// Comma-free so it can sit unquoted in a CSV cell.
std::string describe_arrangement(const Realization& realization);

/// Tree whose internal vertices form a path with the given degrees, in that
/// order. A single entry yields a star.
Tree build_caterpillar(std::span<const int> internal_path);
Tree build_caterpillar(std::initializer_list<int> internal_path);

/// Tree whose skeleton is a star: the center (with `center_degree`) is
/// adjacent to one internal vertex per arm degree, everything topped up with
/// leaves. An empty arm list yields the k=1 star.
Tree build_star(int center_degree, std::span<const int> arm_degrees);
Tree build_star(int center_degree, std::initializer_list<int> arm_degrees);

}  // namespace treeirr
