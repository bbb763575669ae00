#pragma once

#include <iosfwd>
#include <string>

#include "fforge/tree.hpp"

namespace fforge {

// Edge-list text format: first significant line holds n, every following
// line one edge "u v" (1-based). Blank lines and lines starting with '#'
// are ignored.
Tree read_edge_list(std::istream& in);
Tree read_edge_list_file(const std::string& path);
void write_edge_list(const Tree& tree, std::ostream& out);

}  // namespace fforge
