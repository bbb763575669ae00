#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "fforge/tree.hpp"

namespace fforge::enumerate {

/// Depth list of a rooted tree in preorder: levels[0] = 1 (the root) and
/// every later entry is between 2 and its predecessor + 1. The parent of
/// position i is the nearest earlier position one level up.
using LevelSequence = std::vector<int>;

/// All canonical rooted trees on n vertices by the level-sequence successor
/// rule, from the path (1,2,...,n) down to the star (1,2,...,2) in reverse
/// lexicographic order. next() returns nullptr when exhausted; the pointer
/// stays valid until the following call.
class RootedTreeGen {
 public:
  explicit RootedTreeGen(int n);
  const LevelSequence* next();

 private:
  LevelSequence seq_;
  bool started_ = false;
  bool done_ = false;
};

/// Each isomorphism class of free trees on n vertices exactly once:
/// centroid-rooted canonical sequences (every principal subtree holds at
/// most floor((n-1)/2) vertices), then for even n the bicentroidal trees as
/// ordered joins of two rooted trees on n/2 vertices. Deterministic order.
class FreeTreeGen {
 public:
  explicit FreeTreeGen(int n);
  const LevelSequence* next();

 private:
  int n_;
  RootedTreeGen rooted_;
  bool unicentroid_phase_ = true;
  std::vector<LevelSequence> halves_;
  std::size_t half_i_ = 0, half_j_ = 0;
  LevelSequence joined_;
};

struct ShardSpec {
  int index = 0;
  int count = 1;
};

/// Deterministic partition of the free-tree stream: keeps the items whose
/// enumeration index is congruent to index mod count. The union over all
/// shards is the full stream and shards are pairwise disjoint.
class FreeTreeShardGen {
 public:
  FreeTreeShardGen(int n, ShardSpec shard);
  const LevelSequence* next();

 private:
  FreeTreeGen gen_;
  ShardSpec shard_;
  std::uint64_t at_ = 0;
};

/// Tree with vertex i+1 joined to the vertex at its parent position.
Tree decode(const LevelSequence& seq);

std::uint64_t count_free_trees(int n);

/// Materialized stream, for small n.
std::vector<LevelSequence> all_free_trees(int n);

/// Debug dump: one sequence per line, space-separated integers, in
/// generator order.
void write_level_sequences(int n, std::ostream& out);

}  // namespace fforge::enumerate
