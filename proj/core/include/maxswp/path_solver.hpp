#ifndef MAXSWP_PATH_SOLVER_HPP
#define MAXSWP_PATH_SOLVER_HPP

#include <cstddef>

#include "maxswp/graph.hpp"
#include "maxswp/welfare.hpp"

namespace maxswp {

/// Optimal partition of P_n (vertices 0..n-1 in path order) in closed form.
///
/// Blocks are consecutive runs emitted left to right: all P3 when n = 0 mod 3,
/// a leading P4 when n = 1 mod 3, a leading P2 when n = 2 mod 3. n = 1 yields
/// the single isolated vertex. Throws PreconditionError for n = 0.
Solution solve_path(std::size_t n);

/// Same, for any graph that is a path; blocks are laid along path_order(g).
/// Throws PreconditionError if g is not a path.
Solution solve_path(const Graph& g);

}  // namespace maxswp

#endif  // MAXSWP_PATH_SOLVER_HPP
