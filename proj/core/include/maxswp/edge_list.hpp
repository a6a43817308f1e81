#ifndef MAXSWP_EDGE_LIST_HPP
#define MAXSWP_EDGE_LIST_HPP

#include <filesystem>
#include <iosfwd>

#include "maxswp/graph.hpp"

namespace maxswp {

// Edge-list text format:
//   n m
//   u v        (m lines, 0-based ids, whitespace separated)
// Lines whose first non-blank character is '#' are ignored, as are blank lines.

/// Throws FormatError on malformed text (with the offending line number) and
/// on edges the Graph constructor rejects.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace maxswp

#endif  // MAXSWP_EDGE_LIST_HPP
