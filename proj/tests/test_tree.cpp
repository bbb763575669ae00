#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "fforge/enumerate.hpp"
#include "fforge/errors.hpp"
#include "fforge/tree.hpp"
#include "fforge/tree_io.hpp"

using namespace fforge;

namespace {

Tree relabel(const Tree& tree, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : tree.edge_list()) {
    edges.emplace_back(perm[u - 1], perm[v - 1]);
  }
  return Tree::from_edge_list(tree.size(), edges);
}

}  // namespace

TEST_CASE("from_edge_list accepts small trees and rejects non-trees") {
  const Tree p2 = Tree::from_edge_list(2, {{1, 2}});
  CHECK(p2.size() == 2);
  CHECK(p2.degree(1) == 1);

  const Tree star = Tree::from_edge_list(4, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(star.degree(1) == 3);
  CHECK(star.leaves() == std::vector<int>{2, 3, 4});

  CHECK_THROWS_AS(Tree::from_edge_list(4, {{1, 2}, {3, 4}}), NotATree);
  CHECK_THROWS_AS(Tree::from_edge_list(4, {{1, 2}, {2, 3}, {1, 3}}), NotATree);
  CHECK_THROWS_AS(Tree::from_edge_list(3, {{1, 2}, {2, 5}}), BadLabel);
  CHECK_THROWS_AS(Tree::from_edge_list(3, {{1, 2}, {2, 2}}), NotATree);
  CHECK_THROWS_AS(Tree::from_edge_list(3, {{1, 2}, {1, 2}}), NotATree);
}

TEST_CASE("path and star constructors") {
  CHECK(build_path(1).size() == 1);
  CHECK(build_path(5).diameter() == 4);
  CHECK(build_path(2).canonical_code() ==
        Tree::from_edge_list(2, {{1, 2}}).canonical_code());
  CHECK_THROWS_AS(build_path(0), BadParam);

  CHECK(build_star(1).canonical_code() == build_path(2).canonical_code());
  CHECK(build_star(3).diameter() == 2);
  const Tree s4 = build_star(4);
  CHECK(s4.degree(1) == 4);
  for (int v = 2; v <= 5; ++v) CHECK(s4.degree(v) == 1);
  CHECK_THROWS_AS(build_star(0), BadParam);
}

TEST_CASE("rose construction matches the labeling contract") {
  const Tree r334 = build_rose({3, 3, 4});
  CHECK(r334.size() == 12);
  CHECK(build_rose({3, 4, 2}).diameter() == 7);

  const Tree tiny = build_rose({1, 1, 0});
  CHECK(tiny.size() == 4);
  // path 1-2-3 plus pendant 4 on 2
  CHECK(tiny.degree(2) == 3);
  CHECK(tiny.distance(4, 2) == 1);

  CHECK(r334.distance(1, 7) == 6);
  for (int s = 3; s <= 8; ++s) {
    for (int t = 3; t <= 8; ++t) {
      for (int p = 0; p <= 10; ++p) {
        CHECK(build_rose({s, t, p}).diameter() == s + t);
      }
    }
  }
  CHECK_THROWS_AS(build_rose({0, 1, 0}), BadParam);
}

TEST_CASE("star-like construction") {
  CHECK(build_starlike(1, 1).canonical_code() == build_path(3).canonical_code());
  const Tree s34 = build_starlike(3, 4);
  CHECK(s34.size() == 8);
  CHECK(s34.degree(4) == 5);
  CHECK(build_starlike(2, 2).diameter() == 3);
  CHECK_THROWS_AS(build_starlike(0, 1), BadParam);
}

TEST_CASE("distance and diameter") {
  const Tree p5 = build_path(5);
  CHECK(p5.distance(1, 5) == 4);
  CHECK(p5.distance(3, 3) == 0);
  CHECK_THROWS_AS(p5.distance(0, 3), BadLabel);
  CHECK(build_star(5).diameter() == 2);
  CHECK(build_path(1).diameter() == 0);
}

TEST_CASE("leaves") {
  CHECK(build_path(4).leaves() == std::vector<int>{1, 4});
  CHECK(build_star(4).leaves() == std::vector<int>{2, 3, 4, 5});
  CHECK(build_rose({3, 3, 2}).leaves() == std::vector<int>{1, 7, 9, 10});
  CHECK(build_path(1).leaves() == std::vector<int>{1});
}

TEST_CASE("add_pendant and remove_leaf") {
  CHECK(build_path(2).add_pendant(2).canonical_code() == build_path(3).canonical_code());
  CHECK(build_star(3).add_pendant(1).canonical_code() == build_star(4).canonical_code());

  CHECK(build_path(3).remove_leaf(3).canonical_code() == build_path(2).canonical_code());
  CHECK(build_star(3).remove_leaf(2).canonical_code() == build_star(2).canonical_code());
  CHECK_THROWS_AS(build_path(4).remove_leaf(2), NotALeaf);
  CHECK_THROWS_AS(build_path(1).remove_leaf(1), TooSmall);

  // growing a pendant changes the leaf count by at most one
  for (const Tree& t : {build_path(6), build_star(4), build_rose({3, 3, 1})}) {
    for (int v = 1; v <= t.size(); ++v) {
      const auto diff = t.add_pendant(v).leaves().size() - t.leaves().size();
      CHECK((diff == 0 || diff == 1));
    }
  }

  // removing a leaf and growing it back at the old neighbor is the identity
  // up to isomorphism
  const Tree rose = build_rose({3, 4, 2});
  const int leaf = rose.leaves().front();
  const int anchor = rose.neighbors(leaf)[0];
  const Tree back = rose.remove_leaf(leaf).add_pendant(anchor < leaf ? anchor : anchor - 1);
  CHECK(back.canonical_code() == rose.canonical_code());
}

TEST_CASE("canonical code is label invariant and separates shapes") {
  CHECK(Tree::from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}}).canonical_code() ==
        Tree::from_edge_list(4, {{2, 4}, {4, 1}, {1, 3}}).canonical_code());
  CHECK(build_path(4).canonical_code() != build_star(3).canonical_code());

  std::vector<std::pair<int, int>> reversed;
  const auto edges = build_rose({3, 3, 4}).edge_list();
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) reversed.push_back(*it);
  CHECK(Tree::from_edge_list(12, reversed).canonical_code() ==
        build_rose({3, 3, 4}).canonical_code());

  // 100 random relabelings of a fixed tree all map to the same code
  std::mt19937 rng(20240811);
  const Tree fixed = build_rose({3, 4, 3});
  const std::string code = fixed.canonical_code();
  std::vector<int> perm(fixed.size());
  std::iota(perm.begin(), perm.end(), 1);
  for (int round = 0; round < 100; ++round) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(relabel(fixed, perm).canonical_code() == code);
  }

  // the 11 free trees on 7 vertices get 11 distinct codes
  std::set<std::string> codes;
  for (const auto& seq : enumerate::all_free_trees(7)) {
    codes.insert(enumerate::decode(seq).canonical_code());
  }
  CHECK(codes.size() == 11);
}

TEST_CASE("every constructor output satisfies the tree invariants") {
  const Tree trees[] = {build_path(9), build_star(7), build_rose({4, 6, 5}),
                        build_starlike(4, 3)};
  for (const Tree& t : trees) {
    CHECK(static_cast<int>(t.edge_list().size()) == t.size() - 1);
    int reached = 0;
    for (int v = 1; v <= t.size(); ++v) {
      if (t.distance(1, v) >= 0) ++reached;
      for (int w : t.neighbors(v)) {
        const auto nb = t.neighbors(w);
        CHECK(std::find(nb.begin(), nb.end(), v) != nb.end());
      }
    }
    CHECK(reached == t.size());
  }
}

TEST_CASE("edge-list round trip through the text format") {
  const Tree rose = build_rose({3, 3, 4});
  std::ostringstream out;
  write_edge_list(rose, out);
  std::istringstream in(out.str());
  CHECK(read_edge_list(in).canonical_code() == rose.canonical_code());

  std::istringstream commented("# comment\n\n3\n1 2\n# another\n2 3\n");
  CHECK(read_edge_list(commented).size() == 3);

  std::istringstream garbage("3\n1 x\n2 3\n");
  CHECK_THROWS_AS(read_edge_list(garbage), IOError);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_edge_list(empty), IOError);
}
