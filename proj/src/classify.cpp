#include "coxhecke/coxeter.hpp"

#include <algorithm>

namespace coxhecke {

const char* subset_type_name(SubsetType t) {
  switch (t) {
    case SubsetType::Spherical: return "spherical";
    case SubsetType::Affine: return "affine";
    case SubsetType::Indefinite: return "indefinite";
  }
  return "unknown";
}

namespace {

struct Diagram {
  int n = 0;
  // adjacency over local indices; label 0 = infinity
  std::vector<std::vector<std::pair<int, int>>> adj;
  int edges = 0;
  bool has_infinite = false;
  int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
};

Diagram build(const CoxeterMatrix& m, const std::vector<Gen>& comp) {
  Diagram d;
  d.n = static_cast<int>(comp.size());
  d.adj.resize(static_cast<std::size_t>(d.n));
  for (int a = 0; a < d.n; ++a) {
    for (int b = a + 1; b < d.n; ++b) {
      const int order = m.order(comp[static_cast<std::size_t>(a)], comp[static_cast<std::size_t>(b)]);
      if (order == 2) continue;
      d.adj[static_cast<std::size_t>(a)].push_back({b, order});
      d.adj[static_cast<std::size_t>(b)].push_back({a, order});
      ++d.edges;
      if (order == 0) d.has_infinite = true;
    }
  }
  return d;
}

// Label sequence of a path graph, walking from one leaf to the other.
std::vector<int> path_labels(const Diagram& d) {
  int leaf = -1;
  for (int v = 0; v < d.n; ++v)
    if (d.degree(v) == 1) { leaf = v; break; }
  std::vector<int> labels;
  int prev = -1, cur = leaf;
  for (int step = 0; step + 1 < d.n; ++step) {
    for (auto [next, lab] : d.adj[static_cast<std::size_t>(cur)]) {
      if (next != prev) {
        labels.push_back(lab);
        prev = cur;
        cur = next;
        break;
      }
    }
  }
  return labels;
}

SubsetType classify_path(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size()) + 1;
  std::vector<int> big;  // positions of labels >= 4
  for (int p = 0; p < static_cast<int>(labels.size()); ++p)
    if (labels[static_cast<std::size_t>(p)] >= 4) big.push_back(p);
  if (big.empty()) return SubsetType::Spherical;  // A_n
  if (big.size() == 1) {
    const int p = big[0];
    const int m = labels[static_cast<std::size_t>(p)];
    const bool at_end = (p == 0 || p == n - 2);
    const int from_end = std::min(p, n - 2 - p);
    if (m == 4) {
      if (at_end) return SubsetType::Spherical;                    // B_n
      if (n == 4) return SubsetType::Spherical;                    // F4
      if (n == 5 && from_end == 1) return SubsetType::Affine;      // F4 affine
      return SubsetType::Indefinite;
    }
    if (m == 5) {
      if (at_end && (n == 3 || n == 4)) return SubsetType::Spherical;  // H3, H4
      return SubsetType::Indefinite;
    }
    if (m == 6) {
      if (n == 3 && at_end) return SubsetType::Affine;             // G2 affine
      return SubsetType::Indefinite;
    }
    return SubsetType::Indefinite;
  }
  if (big.size() == 2 && labels[static_cast<std::size_t>(big[0])] == 4 &&
      labels[static_cast<std::size_t>(big[1])] == 4 && big[0] == 0 && big[1] == n - 2)
    return SubsetType::Affine;                                     // C affine
  return SubsetType::Indefinite;
}

SubsetType classify_one_branch(const Diagram& d, int branch) {
  // Arms from the branch node: per arm, edge count and whether every
  // label is 3 except possibly the leaf-end edge.
  struct Arm {
    int len = 0;
    int leaf_label = 3;
    bool interior_all_3 = true;
  };
  std::vector<Arm> arms;
  for (auto [first, lab0] : d.adj[static_cast<std::size_t>(branch)]) {
    Arm arm;
    int prev = branch, cur = first, lab = lab0;
    for (;;) {
      ++arm.len;
      const bool at_leaf = (d.degree(cur) == 1);
      if (at_leaf) {
        arm.leaf_label = lab;
        break;
      }
      if (lab != 3) arm.interior_all_3 = false;
      bool advanced = false;
      for (auto [next, lab2] : d.adj[static_cast<std::size_t>(cur)]) {
        if (next != prev) {
          prev = cur;
          cur = next;
          lab = lab2;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    arms.push_back(arm);
  }
  std::sort(arms.begin(), arms.end(), [](const Arm& x, const Arm& y) { return x.len < y.len; });
  const int a = arms[0].len, b = arms[1].len, c = arms[2].len;
  bool all_labels_3 = true;
  for (const Arm& arm : arms)
    if (!arm.interior_all_3 || arm.leaf_label != 3) all_labels_3 = false;
  if (all_labels_3) {
    if (a == 1 && b == 1) return SubsetType::Spherical;                 // D_n
    if (a == 1 && b == 2 && (c == 2 || c == 3 || c == 4))
      return SubsetType::Spherical;                                     // E6, E7, E8
    if (a == 2 && b == 2 && c == 2) return SubsetType::Affine;          // E6 affine
    if (a == 1 && b == 3 && c == 3) return SubsetType::Affine;          // E7 affine
    if (a == 1 && b == 2 && c == 5) return SubsetType::Affine;          // E8 affine
    return SubsetType::Indefinite;
  }
  // With a branch node, the only non-indefinite diagram with a larger
  // label is affine B: arms (1,1,k), all labels 3 except a single 4 on
  // the leaf end of a longest arm.
  if (a == 1 && b == 1) {
    int fours_at_long_leaf = 0;
    bool rest_ok = true;
    const int longest = c;
    for (const Arm& arm : arms) {
      if (!arm.interior_all_3) rest_ok = false;
      if (arm.leaf_label == 3) continue;
      if (arm.leaf_label == 4 && arm.len == longest)
        ++fours_at_long_leaf;
      else
        rest_ok = false;
    }
    if (rest_ok && fours_at_long_leaf == 1) return SubsetType::Affine;  // B affine
  }
  return SubsetType::Indefinite;
}

SubsetType classify_two_branches(const Diagram& d, const std::vector<int>& branches) {
  // Affine D: two degree-3 forks joined by a path, every label 3.
  if (branches.size() != 2) return SubsetType::Indefinite;
  for (int v = 0; v < d.n; ++v)
    for (auto [u, lab] : d.adj[static_cast<std::size_t>(v)])
      if (lab != 3) return SubsetType::Indefinite;
  for (int b : branches) {
    if (d.degree(b) != 3) return SubsetType::Indefinite;
    int leaf_neighbors = 0;
    for (auto [u, lab] : d.adj[static_cast<std::size_t>(b)])
      if (d.degree(u) == 1) ++leaf_neighbors;
    if (leaf_neighbors != 2) return SubsetType::Indefinite;
  }
  return SubsetType::Affine;
}

}  // namespace

SubsetType classify_connected_diagram(const CoxeterMatrix& m,
                                      const std::vector<Gen>& component) {
  const Diagram d = build(m, component);
  if (d.n == 1) return SubsetType::Spherical;
  if (d.n == 2) {
    if (d.edges == 0) return SubsetType::Spherical;  // disconnected pair, defensive
    return d.has_infinite ? SubsetType::Affine : SubsetType::Spherical;
  }
  if (d.has_infinite) return SubsetType::Indefinite;
  if (d.edges >= d.n) {
    if (d.edges > d.n) return SubsetType::Indefinite;
    for (int v = 0; v < d.n; ++v)
      if (d.degree(v) != 2) return SubsetType::Indefinite;
    for (int v = 0; v < d.n; ++v)
      for (auto [u, lab] : d.adj[static_cast<std::size_t>(v)])
        if (lab != 3) return SubsetType::Indefinite;
    return SubsetType::Affine;  // cycle, A affine
  }
  // Tree from here on.
  std::vector<int> branches;
  int maxdeg = 0;
  for (int v = 0; v < d.n; ++v) {
    maxdeg = std::max(maxdeg, d.degree(v));
    if (d.degree(v) >= 3) branches.push_back(v);
  }
  if (maxdeg >= 4) {
    // Affine D4: one degree-4 node, four leaves, all labels 3.
    if (d.n == 5 && branches.size() == 1 && d.degree(branches[0]) == 4) {
      for (auto [u, lab] : d.adj[static_cast<std::size_t>(branches[0])])
        if (lab != 3 || d.degree(u) != 1) return SubsetType::Indefinite;
      return SubsetType::Affine;
    }
    return SubsetType::Indefinite;
  }
  if (branches.empty()) return classify_path(path_labels(d));
  if (branches.size() == 1) return classify_one_branch(d, branches[0]);
  return classify_two_branches(d, branches);
}

}  // namespace coxhecke
