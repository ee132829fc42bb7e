#include "prufer_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace treeirr::oracles {

namespace {

Tree decode(const std::vector<int>& code, int n) {
  std::vector<int> deg(n, 1);
  for (int x : code) ++deg[x];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int x : code) {
    int leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    edges.push_back(make_edge(leaf, x));
    deg[leaf] = 0;
    --deg[x];
  }
  int u = -1, v = -1;
  for (int i = 0; i < n; ++i)
    if (deg[i] == 1) (u < 0 ? u : v) = i;
  edges.push_back(make_edge(u, v));
  return Tree::build(n, edges);
}

}  // namespace

void for_each_labeled_tree(int n, const std::function<void(const Tree&)>& visit) {
  if (n == 2) {
    visit(Tree::build(2, {Edge{0, 1}}));
    return;
  }
  std::vector<int> code(n - 2, 0);
  while (true) {
    visit(decode(code, n));
    int pos = static_cast<int>(code.size()) - 1;
    while (pos >= 0 && code[pos] == n - 1) code[pos--] = 0;
    if (pos < 0) break;
    ++code[pos];
  }
}

long long prufer_filter_count(const std::vector<int>& target) {
  long long degree_sum = std::accumulate(target.begin(), target.end(), 0LL);
  int k = static_cast<int>(target.size());
  int n = static_cast<int>(degree_sum - k + 2);
  if (n == 2) return target.empty() ? 1 : 0;

  // In a Prufer code vertex v appears deg(v) - 1 times, so the internal
  // degree multiset is readable off the symbol counts; only matching codes
  // are worth decoding.
  std::set<CanonicalCode> classes;
  std::vector<int> code(n - 2, 0), counts(n, 0), internal;
  counts[0] = n - 2;
  internal.reserve(n);
  while (true) {
    internal.clear();
    for (int v = 0; v < n; ++v)
      if (counts[v] > 0) internal.push_back(counts[v] + 1);
    std::sort(internal.begin(), internal.end(), std::greater<>());
    if (internal == target) classes.insert(canonical_code(decode(code, n)));

    int pos = static_cast<int>(code.size()) - 1;
    while (pos >= 0 && code[pos] == n - 1) {
      --counts[n - 1];
      ++counts[0];
      code[pos--] = 0;
    }
    if (pos < 0) break;
    --counts[code[pos]];
    ++code[pos];
    ++counts[code[pos]];
  }
  return static_cast<long long>(classes.size());
}

}  // namespace treeirr::oracles
