#include "fforge/enumerate.hpp"

#include <numeric>
#include <ostream>

#include "fforge/errors.hpp"

namespace fforge::enumerate {

namespace {

constexpr int kMaxN = 24;  // practical bound; generation stays instant here

void check_n(int n) {
  if (n < 1 || n > kMaxN) {
    throw BadParam("vertex count must be in 1.." + std::to_string(kMaxN));
  }
}

// Largest principal-subtree size of the rooted tree encoded by seq.
// Root children sit at level 2; subtree extents are the gaps between them.
int max_principal_subtree(const LevelSequence& seq) {
  const int n = static_cast<int>(seq.size());
  int best = 0;
  int start = -1;
  for (int i = 1; i < n; ++i) {
    if (seq[i] == 2) {
      if (start >= 0) best = std::max(best, i - start);
      start = i;
    }
  }
  if (start >= 0) best = std::max(best, n - start);
  return best;
}

}  // namespace

RootedTreeGen::RootedTreeGen(int n) {
  check_n(n);
  seq_.resize(n);
  std::iota(seq_.begin(), seq_.end(), 1);  // the path: 1,2,...,n
}

const LevelSequence* RootedTreeGen::next() {
  if (done_) return nullptr;
  if (!started_) {
    started_ = true;
    return &seq_;
  }
  const int n = static_cast<int>(seq_.size());
  // Successor rule: chop the last entry deeper than 2 and tile the segment
  // from its parent onwards.
  int p = -1;
  for (int i = n - 1; i >= 0; --i) {
    if (seq_[i] > 2) {
      p = i;
      break;
    }
  }
  if (p < 0) {
    done_ = true;  // the star has no successor
    return nullptr;
  }
  int q = -1;
  for (int i = p - 1; i >= 0; --i) {
    if (seq_[i] == seq_[p] - 1) {
      q = i;
      break;
    }
  }
  const int shift = p - q;
  for (int i = p; i < n; ++i) seq_[i] = seq_[i - shift];
  return &seq_;
}

FreeTreeGen::FreeTreeGen(int n) : n_(n), rooted_(n) {
  check_n(n);
  if (n_ % 2 == 0) {
    RootedTreeGen halves(n_ / 2);
    while (const LevelSequence* s = halves.next()) halves_.push_back(*s);
  }
}

const LevelSequence* FreeTreeGen::next() {
  if (unicentroid_phase_) {
    const int cap = (n_ - 1) / 2;
    while (const LevelSequence* s = rooted_.next()) {
      if (max_principal_subtree(*s) <= cap) return s;
    }
    unicentroid_phase_ = false;
  }
  // Bicentroidal trees (even n): ordered pairs i <= j of rooted trees on
  // n/2 vertices, the second grafted under the first root. The generator
  // runs in decreasing lexicographic order, so i <= j puts the larger code
  // first and every unordered pair appears once.
  if (half_i_ >= halves_.size()) return nullptr;
  joined_ = halves_[half_i_];
  const LevelSequence& second = halves_[half_j_];
  joined_.reserve(n_);
  for (int lvl : second) joined_.push_back(lvl + 1);
  if (++half_j_ >= halves_.size()) {
    ++half_i_;
    half_j_ = half_i_;
  }
  return &joined_;
}

FreeTreeShardGen::FreeTreeShardGen(int n, ShardSpec shard) : gen_(n), shard_(shard) {
  if (shard.count < 1 || shard.index < 0 || shard.index >= shard.count) {
    throw BadParam("shard index must lie in [0, count)");
  }
}

const LevelSequence* FreeTreeShardGen::next() {
  while (const LevelSequence* s = gen_.next()) {
    const bool keep =
        static_cast<int>(at_ % static_cast<std::uint64_t>(shard_.count)) == shard_.index;
    ++at_;
    if (keep) return s;
  }
  return nullptr;
}

Tree decode(const LevelSequence& seq) {
  const int n = static_cast<int>(seq.size());
  if (n < 1 || seq[0] != 1) throw BadSequence("level sequence must start at level 1");
  std::vector<std::pair<int, int>> edges;
  std::vector<int> last_at_level(n + 2, 0);  // position+1 of latest vertex per level
  last_at_level[1] = 1;
  for (int i = 1; i < n; ++i) {
    const int lvl = seq[i];
    if (lvl < 2 || lvl > seq[i - 1] + 1) {
      throw BadSequence("level jump at position " + std::to_string(i));
    }
    edges.emplace_back(last_at_level[lvl - 1], i + 1);
    last_at_level[lvl] = i + 1;
  }
  return Tree::from_edge_list(n, edges);
}

std::uint64_t count_free_trees(int n) {
  FreeTreeGen gen(n);
  std::uint64_t count = 0;
  while (gen.next()) ++count;
  return count;
}

std::vector<LevelSequence> all_free_trees(int n) {
  FreeTreeGen gen(n);
  std::vector<LevelSequence> out;
  while (const LevelSequence* s = gen.next()) out.push_back(*s);
  return out;
}

void write_level_sequences(int n, std::ostream& out) {
  FreeTreeGen gen(n);
  while (const LevelSequence* s = gen.next()) {
    for (std::size_t i = 0; i < s->size(); ++i) {
      if (i) out << ' ';
      out << (*s)[i];
    }
    out << '\n';
  }
}

}  // namespace fforge::enumerate
