#include "fforge/tree.hpp"

#include <algorithm>

#include "fforge/errors.hpp"

namespace fforge {

namespace {

// Breadth-first distances from a 1-based source; -1 marks unreached.
// Adjacency lists hold 1-based labels, indexed by label-1.
std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int src) {
  std::vector<int> dist(adj.size(), -1);
  std::vector<int> queue;
  queue.reserve(adj.size());
  queue.push_back(src);
  dist[src - 1] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int w : adj[u - 1]) {
      if (dist[w - 1] < 0) {
        dist[w - 1] = dist[u - 1] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

Tree::Tree(std::vector<std::vector<int>> adj)
    : n_(static_cast<int>(adj.size())), adj_(std::move(adj)) {}

int Tree::index(int v) const {
  if (v < 1 || v > n_) {
    throw BadLabel("vertex label " + std::to_string(v) + " out of range 1.." +
                   std::to_string(n_));
  }
  return v - 1;
}

Tree Tree::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw BadParam("vertex count must be positive");
  if (static_cast<int>(edges.size()) != n - 1) {
    throw NotATree("a tree on " + std::to_string(n) + " vertices needs " +
                   std::to_string(n - 1) + " edges, got " +
                   std::to_string(edges.size()));
  }
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw BadLabel("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") has a label outside 1.." + std::to_string(n));
    }
    if (u == v) throw NotATree("self loop at vertex " + std::to_string(u));
    adj[u - 1].push_back(v);
    adj[v - 1].push_back(u);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw NotATree("duplicate edge");
    }
  }
  // n-1 edges and no duplicates: connected iff acyclic. One sweep decides.
  const auto dist = bfs_distances(adj, 1);
  if (std::find(dist.begin(), dist.end(), -1) != dist.end()) {
    throw NotATree("edge set is disconnected or cyclic");
  }
  return Tree(std::move(adj));
}

std::span<const int> Tree::neighbors(int v) const {
  const auto& list = adj_[index(v)];
  return {list.data(), list.size()};
}

int Tree::degree(int v) const { return static_cast<int>(adj_[index(v)].size()); }

std::vector<std::pair<int, int>> Tree::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(n_ > 0 ? n_ - 1 : 0);
  for (int u = 1; u <= n_; ++u) {
    for (int w : adj_[u - 1]) {
      if (u < w) out.emplace_back(u, w);
    }
  }
  return out;
}

int Tree::distance(int u, int v) const {
  index(u);
  index(v);
  if (u == v) return 0;
  return bfs_distances(adj_, u)[v - 1];
}

int Tree::diameter() const {
  if (n_ <= 1) return 0;
  const auto d0 = bfs_distances(adj_, 1);
  const int far = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin()) + 1;
  const auto d1 = bfs_distances(adj_, far);
  return *std::max_element(d1.begin(), d1.end());
}

std::vector<int> Tree::leaves() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v) {
    if (adj_[v - 1].size() == 1 || n_ == 1) out.push_back(v);
  }
  return out;
}

Tree Tree::add_pendant(int v) const {
  index(v);
  auto adj = adj_;
  adj.emplace_back();
  adj[v - 1].push_back(n_ + 1);  // the new label is the largest,
  adj[n_].push_back(v);          // so sortedness is preserved
  return Tree(std::move(adj));
}

Tree Tree::remove_leaf(int v) const {
  index(v);
  if (n_ < 2) throw TooSmall("cannot remove the last vertex");
  if (adj_[v - 1].size() != 1) {
    throw NotALeaf("vertex " + std::to_string(v) + " has degree " +
                   std::to_string(adj_[v - 1].size()));
  }
  std::vector<std::vector<int>> adj(n_ - 1);
  for (int u = 1; u <= n_; ++u) {
    if (u == v) continue;
    const int nu = u < v ? u : u - 1;
    for (int w : adj_[u - 1]) {
      if (w == v) continue;
      adj[nu - 1].push_back(w < v ? w : w - 1);
    }
  }
  return Tree(std::move(adj));
}

namespace {

// Sorted recursive parenthesization of the subtree rooted at v (AHU form).
// v and parent are 1-based; parent = 0 at the root.
std::string ahu_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> child_codes;
  for (int w : adj[v - 1]) {
    if (w != parent) child_codes.push_back(ahu_code(adj, w, v));
  }
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  for (const auto& c : child_codes) code += c;
  code += ")";
  return code;
}

// Peels leaves layer by layer; the last one or two vertices are the centers.
std::vector<int> find_centers(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n <= 2) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    return all;
  }
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 1; v <= n; ++v) {
    deg[v - 1] = static_cast<int>(adj[v - 1].size());
    if (deg[v - 1] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int w : adj[v - 1]) {
        if (--deg[w - 1] == 1) next.push_back(w);
      }
      deg[v - 1] = 0;
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string Tree::canonical_code() const {
  const auto centers = find_centers(adj_);
  std::string best = ahu_code(adj_, centers[0], 0);
  if (centers.size() == 2) {
    std::string other = ahu_code(adj_, centers[1], 0);
    if (other < best) best = std::move(other);
  }
  return best;
}

Tree build_path(int n) {
  if (n < 1) throw BadParam("path needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Tree::from_edge_list(n, edges);
}

Tree build_star(int p) {
  if (p < 1) throw BadParam("star needs at least one leaf");
  std::vector<std::pair<int, int>> edges;
  for (int i = 2; i <= p + 1; ++i) edges.emplace_back(1, i);
  return Tree::from_edge_list(p + 1, edges);
}

Tree build_rose(const RoseParams& rp) {
  if (rp.s < 1 || rp.t < 1 || rp.p < 0) {
    throw BadParam("rose tree needs s >= 1, t >= 1, p >= 0");
  }
  const int n = rp.vertex_count();
  const int c = rp.center();
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < rp.s + rp.t + 1; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(rp.s + 1, c);
  for (int i = c + 1; i <= n; ++i) edges.emplace_back(c, i);
  return Tree::from_edge_list(n, edges);
}

Tree build_starlike(int n, int p) {
  if (n < 1 || p < 1) throw BadParam("star-like tree needs n >= 1, p >= 1");
  const int total = n + 1 + p;
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(i, i + 1);
  for (int i = n + 2; i <= total; ++i) edges.emplace_back(n + 1, i);
  return Tree::from_edge_list(total, edges);
}

}  // namespace fforge
