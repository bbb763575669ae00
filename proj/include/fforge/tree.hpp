#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fforge {

/// Undirected tree on vertices labeled 1..n, immutable after construction.
/// Neighbor lists are kept sorted so every traversal is deterministic.
class Tree {
 public:
  /// Builds a tree from an explicit edge list. Rejects out-of-range labels
  /// (BadLabel) and anything that is not a tree: wrong edge count, self
  /// loops, duplicate edges, cycles, disconnection (NotATree).
  static Tree from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }
  std::span<const int> neighbors(int v) const;
  int degree(int v) const;

  /// Edges as (u, v) pairs with u < v, sorted.
  std::vector<std::pair<int, int>> edge_list() const;

  /// Edge count of the unique u-v path (breadth-first).
  int distance(int u, int v) const;

  /// Max pairwise distance, by double breadth-first sweep (exact on trees).
  int diameter() const;

  /// All degree-1 vertices, ascending. A single isolated vertex counts as a leaf.
  std::vector<int> leaves() const;

  /// New tree with vertex n+1 attached to v.
  Tree add_pendant(int v) const;

  /// Removes leaf v; remaining vertices are relabeled 1..n-1 preserving order.
  Tree remove_leaf(int v) const;

  /// Label-invariant canonical form: AHU parenthesization rooted at the tree
  /// center (the lexicographically smaller of the two codes for bicentral
  /// trees). Equal codes iff isomorphic.
  std::string canonical_code() const;

 private:
  explicit Tree(std::vector<std::vector<int>> adj);
  int index(int v) const;  // validates a 1-based label, returns 0-based index

  int n_ = 0;
  std::vector<std::vector<int>> adj_;  // 0-based, each list sorted
};

/// Parameters of the three-parameter path/star hybrid R(s,t,p): a path on
/// s+t+1 vertices with a p-leaf star whose center attaches to path vertex s+1.
struct RoseParams {
  int s = 1;
  int t = 1;
  int p = 0;

  int vertex_count() const { return s + t + p + 2; }
  int center() const { return s + t + 2; }
};

Tree build_path(int n);
Tree build_star(int p);

/// Path vertices 1..s+t+1, center c = s+t+2 adjacent to vertex s+1,
/// star leaves s+t+3 .. s+t+p+2.
Tree build_rose(const RoseParams& rp);

/// Path on vertices 1..n+1 whose end n+1 carries p extra leaves
/// (n+1+p vertices total).
Tree build_starlike(int n, int p);

}  // namespace fforge
