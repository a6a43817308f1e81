#ifndef MAXSWP_GENERATORS_HPP
#define MAXSWP_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "maxswp/graph.hpp"

namespace maxswp {

// Named families. Vertex layouts are documented per function so tests can
// address specific positions.

/// P_n as 0-1-...-(n-1).
Graph make_path(std::size_t n);
/// K_{1,leaves}: center 0, leaves 1..leaves.
Graph make_star(std::size_t leaves);
Graph make_cycle(std::size_t n);
Graph make_complete(std::size_t n);

/// Diameter-3 double star: u1 = 0, u2 = 1, then k leaves on u1, then l leaves on u2.
Graph make_diameter3_tree(std::size_t k, std::size_t l);

/// Diameter-4 spider of stars: center 0, hubs 1..k, then each hub's leaves in
/// order. Requires k >= 2 and the first two hubs to carry at least one leaf.
Graph make_diameter4_tree(std::span<const std::size_t> leaf_counts);

/// The 5-vertex tree with adjacent centers carrying one and two leaves.
inline Graph make_t35() { return make_diameter3_tree(2, 1); }

/// Two triangles sharing edge {0,1}; apexes 2 and 3.
Graph make_double_triangle();
/// Three triangles sharing edge {0,1}; apexes 2, 3 and 4.
Graph make_triple_triangle();

/// Decodes a Prüfer sequence over 0..n-1 (length n-2) into its labeled tree.
Graph prufer_decode(std::span<const Vertex> sequence, std::size_t n);

/// Uniformly random labeled tree on n vertices from a random Prüfer sequence.
Tree random_tree(std::size_t n, std::uint64_t seed);

inline constexpr std::size_t kMaxEnumeratedTreeOrder = 9;

/// Calls `visit` once for each of the n^(n-2) labeled trees on n vertices.
/// Throws SizeLimitError for n > kMaxEnumeratedTreeOrder.
void for_each_labeled_tree(std::size_t n, const std::function<void(const Tree&)>& visit);

/// Convenience wrapper collecting for_each_labeled_tree output.
std::vector<Tree> enumerate_labeled_trees(std::size_t n);

}  // namespace maxswp

#endif  // MAXSWP_GENERATORS_HPP
