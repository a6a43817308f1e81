#ifndef MAXSWP_ORACLE_SOLVER_HPP
#define MAXSWP_ORACLE_SOLVER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "maxswp/graph.hpp"
#include "maxswp/welfare.hpp"

namespace maxswp {

/// Vertex subset of a graph with at most 32 vertices, bit i = vertex i.
using VertexMask = std::uint32_t;

inline constexpr std::size_t kMaxExactOrder = 20;
inline constexpr std::size_t kMaxUnrestrictedOrder = 12;

Coalition mask_to_coalition(VertexMask mask);
VertexMask coalition_to_mask(const Coalition& c);

/// Calls `visit` for every nonempty vertex set inducing a connected subgraph,
/// each exactly once. Sets are grown from their minimum vertex, only ever
/// adding larger neighbors. Requires g.order() <= 32.
void for_each_connected_subset(const Graph& g, const std::function<void(VertexMask)>& visit);

struct ExactOptions {
    /// Worker threads for the block-weight table; 0 means hardware concurrency.
    unsigned threads = 1;
};

/// Exact maximum-welfare partition of a connected graph with n <= 20.
///
/// Block weights are the welfare of every connected vertex set; a DP over
/// vertex subsets then chooses, for the smallest remaining vertex, the
/// connected block containing it. Weights are held as integers over a common
/// denominator so the DP is exact without per-step normalization.
/// Throws SizeLimitError for n > 20 and PreconditionError when disconnected.
Solution solve_exact(const Graph& g, ExactOptions options = {});

/// Exact optimum over all set partitions, disconnected blocks included, by
/// explicit enumeration. Used to cross-check that restricting to connected
/// blocks loses nothing. Throws SizeLimitError for n > 12.
Solution solve_exact_allow_disconnected_blocks(const Graph& g);

}  // namespace maxswp

#endif  // MAXSWP_ORACLE_SOLVER_HPP
