#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "treeirr/error.hpp"

namespace treeirr {

/// Unordered pair of vertex ids, normalized so that a < b.
struct Edge {
  int a = 0;
  int b = 0;
  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Undirected labeled tree on vertices 0..n-1. Immutable after construction,
/// so values can be shared across threads freely.
class Tree {
 public:
  /// Empty placeholder; every populated Tree comes from build().
  Tree() = default;

  /// Validates and builds. Throws NotATree (wrong edge count, self loop,
  /// cycle or disconnection), InvalidVertexId, or DuplicateEdge.
  static Tree build(int vertex_count, std::span<const Edge> edges);
  static Tree build(int vertex_count, std::initializer_list<Edge> edges);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;

  /// Normalized edges in sorted order; the deterministic edge order used by
  /// every report.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// All vertex degrees, non-increasing.
  std::vector<int> degree_multiset() const;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<Edge> edges_;
};

/// Order-invariant encoding of an unlabeled tree: two trees get equal codes
/// iff they are isomorphic. Encoded as a balanced parenthesis bit sequence
/// (2n entries of 1/0) of the tree rooted at its center.
struct CanonicalCode {
  std::vector<std::uint8_t> bits;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

  /// Compact rendering for reports; preserves the code ordering between
  /// trees of equal vertex count.
  std::string to_hex() const;
};

/// The 1 or 2 middle vertices of a longest path.
std::vector<int> tree_centers(const Tree& tree);

/// AHU-style encoding rooted at the center; with two centers, the smaller of
/// the two rooted codes.
CanonicalCode canonical_code(const Tree& tree);

}  // namespace treeirr
