#include "treeirr/indices.hpp"

#include <cstdlib>

namespace treeirr {

const char* index_kind_name(IndexKind kind) noexcept {
  return kind == IndexKind::albertson ? "irr" : "sigma";
}

IndexReport index_report(const Tree& tree) {
  IndexReport report;
  report.per_edge.reserve(tree.edges().size());
  for (const Edge& e : tree.edges()) {
    long long diff = std::abs(static_cast<long long>(tree.degree(e.a)) - tree.degree(e.b));
    report.per_edge.push_back({e, diff, diff * diff});
    report.albertson += diff;
    report.sigma += diff * diff;
  }
  return report;
}

long long albertson_index(const Tree& tree) {
  long long sum = 0;
  for (const Edge& e : tree.edges())
    sum += std::abs(static_cast<long long>(tree.degree(e.a)) - tree.degree(e.b));
  return sum;
}

long long sigma_index(const Tree& tree) {
  long long sum = 0;
  for (const Edge& e : tree.edges()) {
    long long diff = static_cast<long long>(tree.degree(e.a)) - tree.degree(e.b);
    sum += diff * diff;
  }
  return sum;
}

long long tree_index(const Tree& tree, IndexKind kind) {
  return kind == IndexKind::albertson ? albertson_index(tree) : sigma_index(tree);
}

bool is_adjacency_regular(const Tree& tree) {
  for (const Edge& e : tree.edges())
    if (tree.degree(e.a) != tree.degree(e.b)) return false;
  return true;
}

}  // namespace treeirr
