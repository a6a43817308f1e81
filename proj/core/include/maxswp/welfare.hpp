#ifndef MAXSWP_WELFARE_HPP
#define MAXSWP_WELFARE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "maxswp/graph.hpp"
#include "maxswp/rational.hpp"

namespace maxswp {

/// A family of coalitions meant to cover 0..n-1 disjointly.
///
/// The type itself only normalizes each block; coverage is checked against a
/// concrete vertex count by validate(), which every welfare routine calls.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Coalition> blocks) : blocks_(std::move(blocks)) {}

    static Partition grand(std::size_t vertex_count);
    static Partition singletons(std::size_t vertex_count);

    [[nodiscard]] const std::vector<Coalition>& blocks() const noexcept { return blocks_; }
    [[nodiscard]] std::size_t block_count() const noexcept { return blocks_.size(); }

    /// Throws PreconditionError naming the first empty block, overlap or gap.
    void validate(std::size_t vertex_count) const;

    /// Same blocks ordered by smallest member.
    [[nodiscard]] Partition canonical() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<Coalition> blocks_;
};

/// An optimal (or candidate) partition together with its exact welfare.
struct Solution {
    Partition partition;
    Rational welfare;
};

/// U(v, C): the mean over C of 1/dist inside G[C], with v itself and
/// unreachable members contributing zero.
Rational utility(const Graph& g, Vertex v, const Coalition& c);

/// Sum of member utilities of a single coalition.
Rational coalition_welfare(const Graph& g, const Coalition& c);

/// Social welfare of a partition; validates the partition first.
Rational welfare(const Graph& g, const Partition& p);

/// welfare / n.
Rational average_welfare(const Graph& g, const Partition& p);

// Closed forms for the grand coalition of named families. All are evaluated
// in arbitrary precision and returned reduced.

/// K_{1,f}; f = 0 is a single vertex.
Rational star_welfare(std::size_t leaves);

/// P_n, via harmonic partial sums.
Rational path_welfare(std::size_t n);

/// Harmonic number H_m = 1 + 1/2 + ... + 1/m (H_0 = 0), by binary splitting.
Rational harmonic_number(std::size_t m);

/// The diameter-3 double star with k and l leaves (see make_diameter3_tree).
Rational diameter3_grand_welfare(std::size_t k, std::size_t l);

/// The diameter-4 tree with hub leaf counts l_1..l_k (see make_diameter4_tree).
/// Hubs beyond the second may have zero leaves.
Rational diameter4_grand_welfare(std::span<const std::size_t> leaf_counts);

struct HalfBoundCheck {
    Rational welfare;
    bool meets_half = false;  ///< welfare >= n/2
};

/// Welfare of the grand coalition of a tree, compared with n/2.
HalfBoundCheck grand_meets_half(const Tree& t);

/// Structural description of a tree by diameter, in the parametrization used
/// by the closed forms above.
struct TreeShape {
    enum class Kind { Star, Diameter3, Diameter4, Large };

    Kind kind = Kind::Star;
    std::size_t diameter = 0;
    std::size_t star_leaves = 0;               ///< Star
    std::size_t k = 0, l = 0;                  ///< Diameter3 leaf counts at the two centers
    std::vector<std::size_t> hub_leaf_counts;  ///< Diameter4, sorted non-increasing
};

TreeShape classify_tree_shape(const Tree& t);

/// Whether the grand coalition reaches n/2 according to the case analysis by
/// diameter: every star with n >= 2; diameter 3 outside the (k, l) exclusion
/// zone; diameter 4 only for (k, sum of leaves) in {(2,2), (2,3), (3,2), (4,2)};
/// never for diameter >= 5.
bool half_bound_predicted(const TreeShape& shape);

}  // namespace maxswp

#endif  // MAXSWP_WELFARE_HPP
