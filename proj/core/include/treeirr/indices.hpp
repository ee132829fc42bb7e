#pragma once

#include <vector>

#include "treeirr/tree.hpp"

namespace treeirr {

enum class IndexKind { albertson, sigma };

const char* index_kind_name(IndexKind kind) noexcept;  // "irr" / "sigma"

struct EdgeContribution {
  Edge edge;
  long long abs_diff = 0;      // |d(u) - d(v)|
  long long squared_diff = 0;  // (d(u) - d(v))^2
};

/// Both indices plus the per-edge breakdown, listed in sorted edge order so
/// reports are byte-reproducible. All values are exact integers; degrees and
/// vertex counts up to 2^20 stay well inside 64-bit accumulation.
struct IndexReport {
  long long albertson = 0;
  long long sigma = 0;
  std::vector<EdgeContribution> per_edge;
};

IndexReport index_report(const Tree& tree);

/// Sum over edges of |d(u) - d(v)|. Always even for a tree.
long long albertson_index(const Tree& tree);

/// Sum over edges of (d(u) - d(v))^2. At least the Albertson index.
long long sigma_index(const Tree& tree);

long long tree_index(const Tree& tree, IndexKind kind);

/// True iff every edge joins vertices of equal degree; equivalently iff both
/// indices vanish.
bool is_adjacency_regular(const Tree& tree);

}  // namespace treeirr
