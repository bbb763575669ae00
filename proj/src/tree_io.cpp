#include "fforge/tree_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "fforge/errors.hpp"

namespace fforge {

namespace {

bool significant(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return false;
    if (!std::isspace(static_cast<unsigned char>(ch))) return true;
  }
  return false;
}

}  // namespace

Tree read_edge_list(std::istream& in) {
  std::string line;
  long n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    if (!significant(line)) continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n < 1) throw IOError("expected a positive vertex count, got: " + line);
    } else {
      long u = 0, v = 0;
      if (!(fields >> u >> v)) throw IOError("expected an edge 'u v', got: " + line);
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    if (fields >> rest) throw IOError("trailing tokens on line: " + line);
  }
  if (n < 0) throw IOError("empty edge-list input");
  return Tree::from_edge_list(static_cast<int>(n), edges);
}

Tree read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(const Tree& tree, std::ostream& out) {
  out << tree.size() << "\n";
  for (const auto& [u, v] : tree.edge_list()) out << u << " " << v << "\n";
}

}  // namespace fforge
