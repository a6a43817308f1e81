#ifndef MAXSWP_TREE_SOLVER_HPP
#define MAXSWP_TREE_SOLVER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "maxswp/graph.hpp"
#include "maxswp/rational.hpp"
#include "maxswp/welfare.hpp"

namespace maxswp {

/// Position of a vertex inside the coalition that contains it, restricted to
/// the vertex's rooted subtree. Optimal tree partitions only use stars, P4
/// and the 5-vertex diameter-3 tree T35, so these nine positions suffice.
///
/// T35 labels: the center carrying one leaf is the "short" center and that
/// leaf the "short" leaf; the center carrying two leaves is the "fork"
/// center with two "fork" leaves.
enum class StateTag : std::uint8_t {
    Isolated,
    StarMid,         ///< center of K_{1,f}, all f leaves below
    StarLeaf,        ///< leaf of K_{1,f} whose center is a child
    P4Leaf,          ///< end of a P4 hanging below
    P4Mid,           ///< inner vertex of a P4, one neighbor a lone child, the other a child with its own child
    T35ShortLeaf,    ///< leaf on the short center
    T35ForkLeaf,     ///< leaf on the fork center
    T35ShortCenter,  ///< short center; children are the fork center and the short leaf
    T35ForkCenter,   ///< fork center; children are the short center and both fork leaves
};

struct CoalitionState {
    StateTag tag = StateTag::Isolated;
    std::uint32_t leaves = 0;  ///< f for StarMid / StarLeaf, otherwise 0

    static constexpr CoalitionState isolated() { return {StateTag::Isolated, 0}; }
    static constexpr CoalitionState star_mid(std::uint32_t f) { return f == 0 ? isolated() : CoalitionState{StateTag::StarMid, f}; }
    static constexpr CoalitionState star_leaf(std::uint32_t f) { return {StateTag::StarLeaf, f}; }

    friend bool operator==(const CoalitionState&, const CoalitionState&) = default;
};

std::string to_string(CoalitionState state);

/// Best welfare of a subtree under a state; nullopt when the state cannot be
/// realized (e.g. StarMid(f) with fewer than f children).
using Score = std::optional<Rational>;

struct TreeSolverOptions {
    /// Keep every realizable (state, value) pair per vertex for inspection.
    /// Costs O(n) extra Rationals; meant for tests and diagnostics.
    bool record_states = false;
};

/// Bottom-up dynamic program over the rooted tree.
///
/// For every vertex v and state H the table holds the best welfare of a
/// partition of the subtree T_v in which v's coalition has shape H with v at
/// the given position; the optimum of the whole tree is the best state at the
/// root, and the partition is rebuilt top-down from per-vertex choices.
/// Work is O(sum over v of c(v) log c(v)) with exact arithmetic throughout.
class TreeSolver {
public:
    explicit TreeSolver(const Tree& tree, TreeSolverOptions options = {});

    [[nodiscard]] const Rational& optimum() const { return best_.front(); }
    [[nodiscard]] Partition partition() const;
    [[nodiscard]] Solution solution() const { return {partition(), optimum()}; }

    /// rho(v): best over all states.
    [[nodiscard]] const Rational& best_value(Vertex v) const { return best_[position(v)]; }
    [[nodiscard]] CoalitionState best_state(Vertex v) const { return hints_[position(v)].best; }

    /// rho(v, H). Requires record_states.
    [[nodiscard]] Score state_value(Vertex v, CoalitionState state) const;
    /// All realizable states of v with their values. Requires record_states.
    [[nodiscard]] const std::vector<std::pair<CoalitionState, Rational>>& recorded_states(Vertex v) const;

    [[nodiscard]] Vertex root() const { return order_.front(); }
    /// Parent of v; the root is its own parent.
    [[nodiscard]] Vertex parent(Vertex v) const { return order_[parent_[position(v)]]; }
    /// Children of v in ascending vertex order.
    [[nodiscard]] std::span<const Vertex> children(Vertex v) const {
        const Pos p = position(v);
        return {order_.data() + child_begin_[p], order_.data() + child_begin_[p + 1]};
    }

private:
    // Vertices are processed by BFS position so that children of a vertex are
    // a contiguous run of positions and the bottom-up pass walks memory in order.
    using Pos = std::uint32_t;
    static constexpr Pos kNone = ~Pos{0};

    struct Hints {
        CoalitionState best;
        Pos p4_leaf = kNone;
        Pos p4_mid[2] = {kNone, kNone};  // {StarLeaf(1) child, isolated child}
        Pos short_leaf = kNone;
        Pos fork_leaf = kNone;
        Pos short_center[2] = {kNone, kNone};        // {StarMid(2) child, isolated child}
        Pos fork_center[3] = {kNone, kNone, kNone};  // {StarLeaf(1) child, isolated, isolated}
    };

    [[nodiscard]] Pos position(Vertex v) const { return position_.at(v); }
    [[nodiscard]] std::size_t child_count(Pos p) const { return child_begin_[p + 1] - child_begin_[p]; }
    [[nodiscard]] std::size_t mid_index(Pos p, std::size_t f) const { return child_begin_[p] + p + f; }
    [[nodiscard]] const Rational& isolated_value(Pos p) const { return star_mid_[mid_index(p, 0)]; }

    void build_rooted_structure(const Graph& g, Vertex root);
    void solve_position(Pos p);
    void record(Pos p, CoalitionState state, const Rational& value);

    TreeSolverOptions options_;

    std::vector<Vertex> order_;  // BFS position -> vertex
    std::vector<Pos> position_;  // vertex -> BFS position
    std::vector<Pos> parent_;
    std::vector<Pos> child_begin_;            // children of p are positions [child_begin_[p], child_begin_[p + 1])
    std::vector<std::uint32_t> delta_order_;  // per position: child offsets sorted by delta ascending

    std::vector<Rational> best_;
    std::vector<Rational> star_mid_;                     // f = 0..c(p); f = 0 is Isolated
    std::vector<std::size_t> leaf_begin_;                // StarLeaf(f) for f = 1..F(p)
    std::vector<Pos> leaf_child_;
    std::vector<std::array<Score, 3>> star_leaf_small_;  // StarLeaf(1..3), consumed by the parent
    std::vector<Score> p4_mid_;
    std::vector<Hints> hints_;
    std::vector<Rational> star_table_;

    // Per-vertex scratch, reused across positions.
    std::vector<Rational> delta_;
    std::vector<Score> leaf_gain_;
    std::vector<Score> isolate_gain_;
    std::vector<Score> gain_;

    std::vector<std::vector<std::pair<CoalitionState, Rational>>> recorded_;
};

/// Optimal partition and welfare of a tree. Throws PreconditionError for
/// graphs that are not trees.
Solution solve_tree(const Tree& tree);
Solution solve_tree(const Graph& graph);

}  // namespace maxswp

#endif  // MAXSWP_TREE_SOLVER_HPP
