#include "treeirr/tree.hpp"

#include <algorithm>
#include <numeric>

namespace treeirr {

Tree Tree::build(int vertex_count, std::span<const Edge> edges) {
  if (vertex_count <= 0) raise(errc::not_a_tree, "vertex count must be positive");
  if (static_cast<long long>(edges.size()) != vertex_count - 1)
    raise(errc::not_a_tree, "a tree on " + std::to_string(vertex_count) + " vertices has exactly " +
                                std::to_string(vertex_count - 1) + " edges, got " +
                                std::to_string(edges.size()));

  Tree t;
  t.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.a < 0 || e.a >= vertex_count || e.b < 0 || e.b >= vertex_count)
      raise(errc::invalid_vertex_id, "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                         ") out of range 0.." + std::to_string(vertex_count - 1));
    if (e.a == e.b)
      raise(errc::not_a_tree, "self loop at vertex " + std::to_string(e.a));
    t.edges_.push_back(make_edge(e.a, e.b));
  }
  std::sort(t.edges_.begin(), t.edges_.end());
  if (auto dup = std::adjacent_find(t.edges_.begin(), t.edges_.end()); dup != t.edges_.end())
    raise(errc::duplicate_edge,
          "edge (" + std::to_string(dup->a) + "," + std::to_string(dup->b) + ") repeats");

  t.adjacency_.assign(vertex_count, {});
  for (const Edge& e : t.edges_) {
    t.adjacency_[e.a].push_back(e.b);
    t.adjacency_[e.b].push_back(e.a);
  }
  for (auto& nbrs : t.adjacency_) std::sort(nbrs.begin(), nbrs.end());

  // Edge count is n-1, so connectivity alone rules out cycles.
  std::vector<char> seen(vertex_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : t.adjacency_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != vertex_count)
    raise(errc::not_a_tree, "graph is disconnected (" + std::to_string(reached) + " of " +
                                std::to_string(vertex_count) + " vertices reachable)");
  return t;
}

Tree Tree::build(int vertex_count, std::initializer_list<Edge> edges) {
  return build(vertex_count, std::span<const Edge>(edges.begin(), edges.size()));
}

int Tree::degree(int v) const {
  if (v < 0 || v >= vertex_count())
    raise(errc::invalid_vertex_id, "vertex " + std::to_string(v) + " out of range");
  return static_cast<int>(adjacency_[v].size());
}

const std::vector<int>& Tree::neighbors(int v) const {
  if (v < 0 || v >= vertex_count())
    raise(errc::invalid_vertex_id, "vertex " + std::to_string(v) + " out of range");
  return adjacency_[v];
}

std::vector<int> Tree::degree_multiset() const {
  std::vector<int> degrees(vertex_count());
  for (int v = 0; v < vertex_count(); ++v) degrees[v] = static_cast<int>(adjacency_[v].size());
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

std::vector<int> tree_centers(const Tree& tree) {
  int n = tree.vertex_count();
  if (n == 1) return {0};
  if (n == 2) return {0, 1};

  std::vector<int> remaining_degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    remaining_degree[v] = tree.degree(v);
    if (remaining_degree[v] == 1) layer.push_back(v);
  }
  int alive = n;
  while (alive > 2) {
    std::vector<int> next;
    alive -= static_cast<int>(layer.size());
    for (int v : layer)
      for (int w : tree.neighbors(v))
        if (--remaining_degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

namespace {

std::vector<std::uint8_t> rooted_code(const Tree& tree, int root) {
  int n = tree.vertex_count();
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  order.push_back(root);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int w : tree.neighbors(v))
      if (parent[w] == -1) {
        parent[w] = v;
        order.push_back(w);
      }
  }

  // Bottom-up over reverse BFS order: every child is coded before its parent.
  std::vector<std::vector<std::vector<std::uint8_t>>> pending(n);
  std::vector<std::uint8_t> root_code;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    auto& children = pending[v];
    std::sort(children.begin(), children.end(), std::greater<>());
    std::vector<std::uint8_t> code;
    std::size_t total = 2;
    for (const auto& c : children) total += c.size();
    code.reserve(total);
    code.push_back(1);
    for (auto& c : children) code.insert(code.end(), c.begin(), c.end());
    code.push_back(0);
    pending[v].clear();
    pending[v].shrink_to_fit();
    if (v == root)
      root_code = std::move(code);
    else
      pending[parent[v]].push_back(std::move(code));
  }
  return root_code;
}

}  // namespace

CanonicalCode canonical_code(const Tree& tree) {
  std::vector<int> centers = tree_centers(tree);
  CanonicalCode best{rooted_code(tree, centers[0])};
  if (centers.size() == 2) {
    CanonicalCode other{rooted_code(tree, centers[1])};
    if (other < best) best = std::move(other);
  }
  return best;
}

std::string CanonicalCode::to_hex() const {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve((bits.size() + 3) / 4);
  int nibble = 0, filled = 0;
  for (std::uint8_t bit : bits) {
    nibble = nibble * 2 + (bit ? 1 : 0);
    if (++filled == 4) {
      out.push_back(digits[nibble]);
      nibble = 0;
      filled = 0;
    }
  }
  if (filled > 0) out.push_back(digits[nibble << (4 - filled)]);
  return out;
}

}  // namespace treeirr
