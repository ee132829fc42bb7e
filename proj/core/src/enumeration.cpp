#include "treeirr/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace treeirr {

namespace {

// Standard Prufer decode on k >= 2 labeled nodes; O(k^2) is plenty for the
// skeleton sizes the guardrail admits.
std::vector<Edge> decode_prufer(std::span<const int> code, int k) {
  std::vector<int> deg(k, 1);
  for (int x : code) ++deg[x];
  std::vector<Edge> edges;
  edges.reserve(k - 1);
  for (int x : code) {
    int leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    edges.push_back(make_edge(leaf, x));
    deg[leaf] = 0;
    --deg[x];
  }
  int u = -1, v = -1;
  for (int i = 0; i < k; ++i)
    if (deg[i] == 1) (u < 0 ? u : v) = i;
  edges.push_back(make_edge(u, v));
  return edges;
}

// Visits every labeled skeleton tree on k nodes in which node i has degree at
// most degrees[i]. Node i carries the i-th sequence entry, so ranging over
// all labeled trees covers every placement of the degree multiset.
void for_each_labeled_skeleton(std::span<const int> degrees,
                               const std::function<void(const std::vector<Edge>&)>& visit) {
  int k = static_cast<int>(degrees.size());
  if (k == 1) {
    visit({});
    return;
  }
  std::vector<int> code(k - 2), occurrences(k, 0);
  std::function<void(int)> extend = [&](int pos) {
    if (pos == k - 2) {
      visit(decode_prufer(code, k));
      return;
    }
    for (int node = 0; node < k; ++node) {
      // occurrences + 1 = skeleton degree, capped by the assigned degree
      if (occurrences[node] + 1 > degrees[node] - 1) continue;
      code[pos] = node;
      ++occurrences[node];
      extend(pos + 1);
      --occurrences[node];
    }
  };
  extend(0);
}

Realization assemble(std::span<const int> degrees, const std::vector<Edge>& skeleton_edges) {
  int k = static_cast<int>(degrees.size());
  std::vector<int> skeleton_degree(k, 0);
  for (const Edge& e : skeleton_edges) {
    ++skeleton_degree[e.a];
    ++skeleton_degree[e.b];
  }
  long long degree_sum = std::accumulate(degrees.begin(), degrees.end(), 0LL);
  int n = static_cast<int>(degree_sum - k + 2);

  std::vector<Edge> edges(skeleton_edges);
  edges.reserve(n - 1);
  int next_leaf = k;
  for (int v = 0; v < k; ++v)
    for (int extra = degrees[v] - skeleton_degree[v]; extra > 0; --extra)
      edges.push_back(Edge{v, next_leaf++});

  Realization r;
  r.tree = Tree::build(n, edges);
  r.skeleton = Tree::build(k, skeleton_edges);
  r.placement.assign(degrees.begin(), degrees.end());
  r.code = canonical_code(r.tree);
  return r;
}

void check_guardrail(const InternalDegreeSequence& seq, const EnumerationOptions& options) {
  if (seq.length() > options.max_internal)
    raise(errc::sequence_too_long,
          "sequence has k=" + std::to_string(seq.length()) + " internal degrees, guardrail is " +
              std::to_string(options.max_internal) + " (raise max_internal to override)");
}

}  // namespace

std::vector<Realization> enumerate_realizations(const InternalDegreeSequence& seq,
                                                const EnumerationOptions& options) {
  check_guardrail(seq, options);
  std::map<CanonicalCode, Realization> classes;
  for_each_labeled_skeleton(seq.degrees(), [&](const std::vector<Edge>& skeleton_edges) {
    Realization r = assemble(seq.degrees(), skeleton_edges);
    CanonicalCode key = r.code;
    classes.try_emplace(std::move(key), std::move(r));
  });
  if (classes.empty()) raise(errc::not_realizable, "no skeleton satisfies the degree caps");

  std::vector<Realization> out;
  out.reserve(classes.size());
  for (auto& [code, realization] : classes) out.push_back(std::move(realization));
  return out;
}

long long count_realizations(const InternalDegreeSequence& seq, const EnumerationOptions& options) {
  check_guardrail(seq, options);
  std::set<CanonicalCode> codes;
  for_each_labeled_skeleton(seq.degrees(), [&](const std::vector<Edge>& skeleton_edges) {
    codes.insert(assemble(seq.degrees(), skeleton_edges).code);
  });
  return static_cast<long long>(codes.size());
}

namespace {

std::string join(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out.push_back(sep);
    out += std::to_string(values[i]);
  }
  return out;
}

std::string render_rooted(const Realization& r, int v, int parent) {
  std::vector<std::string> parts;
  for (int w : r.skeleton.neighbors(v))
    if (w != parent) parts.push_back(render_rooted(r, w, v));
  std::sort(parts.begin(), parts.end(), std::greater<>());
  std::string out = std::to_string(r.placement[v]);
  if (!parts.empty()) {
    out.push_back('(');
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out.push_back('-');
      out += parts[i];
    }
    out.push_back(')');
  }
  return out;
}

}  // namespace

std::string describe_arrangement(const Realization& r) {
  int k = r.skeleton.vertex_count();
  if (k == 1) return "star:" + std::to_string(r.placement[0]);

  bool is_path = true;
  for (int v = 0; v < k; ++v)
    if (r.skeleton.degree(v) > 2) is_path = false;
  if (is_path) {
    int end = 0;
    while (r.skeleton.degree(end) != 1) ++end;
    std::vector<int> walk;
    walk.reserve(k);
    int prev = -1, v = end;
    while (true) {
      walk.push_back(r.placement[v]);
      int next = -1;
      for (int w : r.skeleton.neighbors(v))
        if (w != prev) next = w;
      if (next < 0) break;
      prev = v;
      v = next;
    }
    std::vector<int> reversed(walk.rbegin(), walk.rend());
    if (reversed > walk) walk = std::move(reversed);
    return "path:" + join(walk, '-');
  }

  for (int v = 0; v < k; ++v)
    if (r.skeleton.degree(v) == k - 1) {
      std::vector<int> arms;
      for (int w = 0; w < k; ++w)
        if (w != v) arms.push_back(r.placement[w]);
      std::sort(arms.begin(), arms.end(), std::greater<>());
      return "star:" + std::to_string(r.placement[v]) + "(" + join(arms, '-') + ")";
    }

  std::vector<int> centers = tree_centers(r.skeleton);
  std::string best = render_rooted(r, centers[0], -1);
  if (centers.size() == 2) best = std::max(best, render_rooted(r, centers[1], -1));
  return "tree:" + best;
}

Tree build_caterpillar(std::span<const int> internal_path) {
  if (internal_path.empty()) raise(errc::empty_sequence, "internal path has no vertices");
  for (int d : internal_path)
    if (d < 2) raise(errc::degree_below_two, "internal degree " + std::to_string(d) + " is below 2");

  int k = static_cast<int>(internal_path.size());
  long long degree_sum = std::accumulate(internal_path.begin(), internal_path.end(), 0LL);
  int n = static_cast<int>(degree_sum - k + 2);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int i = 0; i + 1 < k; ++i) edges.push_back(Edge{i, i + 1});
  int next_leaf = k;
  for (int i = 0; i < k; ++i) {
    int internal_neighbors = (k == 1) ? 0 : (i == 0 || i == k - 1) ? 1 : 2;
    for (int extra = internal_path[i] - internal_neighbors; extra > 0; --extra)
      edges.push_back(Edge{i, next_leaf++});
  }
  return Tree::build(n, edges);
}

Tree build_caterpillar(std::initializer_list<int> internal_path) {
  return build_caterpillar(std::span<const int>(internal_path.begin(), internal_path.size()));
}

Tree build_star(int center_degree, std::span<const int> arm_degrees) {
  if (center_degree < 2)
    raise(errc::degree_below_two, "center degree " + std::to_string(center_degree) + " is below 2");
  int arms = static_cast<int>(arm_degrees.size());
  if (center_degree < arms)
    raise(errc::center_degree_too_small, "center degree " + std::to_string(center_degree) +
                                             " cannot host " + std::to_string(arms) +
                                             " internal neighbors");
  for (int d : arm_degrees)
    if (d < 2) raise(errc::degree_below_two, "arm degree " + std::to_string(d) + " is below 2");

  long long degree_sum = center_degree + std::accumulate(arm_degrees.begin(), arm_degrees.end(), 0LL);
  int k = arms + 1;
  int n = static_cast<int>(degree_sum - k + 2);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int i = 1; i <= arms; ++i) edges.push_back(Edge{0, i});
  int next_leaf = k;
  for (int extra = center_degree - arms; extra > 0; --extra) edges.push_back(Edge{0, next_leaf++});
  for (int i = 1; i <= arms; ++i)
    for (int extra = arm_degrees[i - 1] - 1; extra > 0; --extra) edges.push_back(Edge{i, next_leaf++});
  return Tree::build(n, edges);
}

Tree build_star(int center_degree, std::initializer_list<int> arm_degrees) {
  return build_star(center_degree, std::span<const int>(arm_degrees.begin(), arm_degrees.size()));
}

}  // namespace treeirr
