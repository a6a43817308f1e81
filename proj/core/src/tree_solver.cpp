#include "maxswp/tree_solver.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "maxswp/detail/selection.hpp"
#include "maxswp/errors.hpp"

namespace maxswp {

namespace {

// Grand-coalition welfare of the fixed shapes.
const Rational kP2(1);
const Rational kP3(5, 3);
const Rational kP4(13, 6);
const Rational kK13(9, 4);
const Rational kT35(8, 3);

}  // namespace

std::string to_string(CoalitionState state) {
    switch (state.tag) {
        case StateTag::Isolated: return "Isolated";
        case StateTag::StarMid: return "StarMid(" + std::to_string(state.leaves) + ")";
        case StateTag::StarLeaf: return "StarLeaf(" + std::to_string(state.leaves) + ")";
        case StateTag::P4Leaf: return "P4Leaf";
        case StateTag::P4Mid: return "P4Mid";
        case StateTag::T35ShortLeaf: return "T35ShortLeaf";
        case StateTag::T35ForkLeaf: return "T35ForkLeaf";
        case StateTag::T35ShortCenter: return "T35ShortCenter";
        case StateTag::T35ForkCenter: return "T35ForkCenter";
    }
    return "?";
}

TreeSolver::TreeSolver(const Tree& tree, TreeSolverOptions options) : options_(options) {
    build_rooted_structure(tree.graph(), tree.root());
    const std::size_t n = tree.order();

    std::size_t max_children = 0;
    for (Pos p = 0; p < n; ++p) max_children = std::max(max_children, child_count(p));
    star_table_.reserve(max_children + 2);
    for (std::size_t f = 0; f <= max_children + 1; ++f) {
        // (f)(f + 3) / (2(f + 1)), the grand coalition of K_{1,f}.
        star_table_.emplace_back(static_cast<Rational::Int>(f * (f + 3)), static_cast<Rational::Int>(2 * (f + 1)));
    }

    best_.resize(n);
    star_mid_.resize(child_begin_[n] + n + 1);
    star_leaf_small_.resize(n);
    p4_mid_.resize(n);
    hints_.resize(n);
    if (options_.record_states) recorded_.resize(n);

    for (Pos p = static_cast<Pos>(n); p-- > 0;) solve_position(p);

    delta_ = {};
    leaf_gain_ = {};
    isolate_gain_ = {};
    gain_ = {};
}

void TreeSolver::build_rooted_structure(const Graph& g, Vertex root) {
    const std::size_t n = g.order();
    order_.clear();
    order_.reserve(n);
    order_.push_back(root);
    position_.assign(n, kNone);
    position_[root] = 0;
    parent_.assign(n, 0);
    child_begin_.assign(n + 1, 0);
    // Children are appended in ascending vertex order, so each vertex's
    // children occupy consecutive positions right after those of the
    // previous position.
    for (Pos p = 0; p < order_.size(); ++p) {
        child_begin_[p] = static_cast<Pos>(order_.size());
        for (Vertex w : g.neighbors(order_[p])) {
            if (position_[w] != kNone) continue;
            position_[w] = static_cast<Pos>(order_.size());
            parent_[position_[w]] = p;
            order_.push_back(w);
        }
    }
    child_begin_[n] = static_cast<Pos>(n);
    delta_order_.resize(n);

    leaf_begin_.assign(n + 1, 0);
    for (Pos p = 0; p < n; ++p) {
        std::size_t families = 0;
        for (Pos w = child_begin_[p]; w < child_begin_[p + 1]; ++w) families = std::max(families, child_count(w) + 1);
        leaf_begin_[p + 1] = leaf_begin_[p] + families;
    }
    leaf_child_.assign(leaf_begin_[n], kNone);
}

void TreeSolver::record(Pos p, CoalitionState state, const Rational& value) {
    if (options_.record_states) recorded_[p].emplace_back(state, value);
}

void TreeSolver::solve_position(Pos p) {
    const Pos first_child = child_begin_[p];
    const std::size_t c = child_count(p);
    Hints& hint = hints_[p];

    Rational base;
    delta_.resize(c);
    for (std::size_t j = 0; j < c; ++j) {
        const Pos w = first_child + static_cast<Pos>(j);
        base += best_[w];
        delta_[j] = best_[w];
        delta_[j] -= isolated_value(w);
        assert(delta_[j].sign() >= 0);
    }

    Rational best = base;
    hint.best = CoalitionState::isolated();
    record(p, hint.best, base);
    auto consider = [&](CoalitionState state, const Rational& value) {
        record(p, state, value);
        if (value > best) {
            best = value;
            hint.best = state;
        }
    };

    // Star with v at the center: absorb the f children that are cheapest to isolate.
    std::uint32_t* order = delta_order_.data() + first_child;
    std::iota(order, order + c, 0U);
    std::stable_sort(order, order + c, [&](std::uint32_t a, std::uint32_t b) { return delta_[a] < delta_[b]; });
    star_mid_[mid_index(p, 0)] = base;
    Rational running = base;
    for (std::size_t f = 1; f <= c; ++f) {
        running -= delta_[order[f - 1]];
        Rational& slot = star_mid_[mid_index(p, f)];
        slot = star_table_[f];
        slot += running;
        consider(CoalitionState::star_mid(static_cast<std::uint32_t>(f)), slot);
    }

    // Star with v as a leaf: extend a child's StarMid(f - 1) by v.
    const std::size_t families = leaf_begin_[p + 1] - leaf_begin_[p];
    Pos* leaf_child = leaf_child_.data() + leaf_begin_[p];
    leaf_gain_.assign(families, std::nullopt);
    for (Pos w = first_child; w < child_begin_[p + 1]; ++w) {
        for (std::size_t f = 1; f <= child_count(w) + 1; ++f) {
            Rational gain = star_mid_[mid_index(w, f - 1)] - best_[w];
            if (!leaf_gain_[f - 1] || gain > *leaf_gain_[f - 1]) {
                leaf_gain_[f - 1] = std::move(gain);
                leaf_child[f - 1] = w;
            }
        }
    }
    for (std::size_t f = 1; f <= families; ++f) {
        Rational value = base + star_table_[f] - star_table_[f - 1] + *leaf_gain_[f - 1];
        consider(CoalitionState::star_leaf(static_cast<std::uint32_t>(f)), value);
        if (f <= 3) star_leaf_small_[p][f - 1] = std::move(value);
    }

    // Per-child gains relative to leaving the child's subtree at its optimum.
    isolate_gain_.resize(c);
    gain_.resize(c);
    for (std::size_t j = 0; j < c; ++j) isolate_gain_[j] = -delta_[j];
    auto fill_gain = [&](auto&& source) {
        for (std::size_t j = 0; j < c; ++j) {
            const Pos w = first_child + static_cast<Pos>(j);
            const Score& s = source(w);
            if (s) {
                gain_[j] = *s;
                *gain_[j] -= best_[w];
            } else {
                gain_[j].reset();
            }
        }
    };
    auto best_single = [&]() -> std::optional<std::uint32_t> {
        std::optional<std::uint32_t> pick;
        for (std::uint32_t j = 0; j < c; ++j) {
            if (gain_[j] && (!pick || *gain_[j] > *gain_[*pick])) pick = j;
        }
        return pick;
    };
    const std::span<const Score> gain_view(gain_);
    const std::span<const Score> isolate_view(isolate_gain_);

    // P4 with v at an end: a child is the leaf end of a P3 below it.
    fill_gain([&](Pos w) -> const Score& { return star_leaf_small_[w][1]; });
    if (auto j = best_single()) {
        hint.p4_leaf = first_child + *j;
        consider({StateTag::P4Leaf, 0}, base + kP4 - kP3 + *gain_[*j]);
    }

    // T35 with v on the short center's leaf: a child is a leaf of a K_{1,3}.
    fill_gain([&](Pos w) -> const Score& { return star_leaf_small_[w][2]; });
    if (auto j = best_single()) {
        hint.short_leaf = first_child + *j;
        consider({StateTag::T35ShortLeaf, 0}, base + kT35 - kK13 + *gain_[*j]);
    }

    // T35 with v on a fork leaf: a child is the inner P4 vertex that becomes the fork center.
    fill_gain([&](Pos w) -> const Score& { return p4_mid_[w]; });
    if (auto j = best_single()) {
        hint.fork_leaf = first_child + *j;
        consider({StateTag::T35ForkLeaf, 0}, base + kT35 - kP4 + *gain_[*j]);
    }

    // P4 with v inside: one child heads a P2 below, another child is alone.
    fill_gain([&](Pos w) -> const Score& { return star_leaf_small_[w][0]; });
    if (auto pick = detail::best_distinct_pair(gain_view, isolate_view)) {
        hint.p4_mid[0] = first_child + pick->first;
        hint.p4_mid[1] = first_child + pick->second;
        Rational value = base + kP4 - kP2 + pick->gain;
        consider({StateTag::P4Mid, 0}, value);
        p4_mid_[p] = std::move(value);
    }

    // T35 with v as the fork center: the same P2 child plus two lone children.
    if (auto pick = detail::best_distinct_triple(gain_view, isolate_view)) {
        hint.fork_center[0] = first_child + pick->first;
        hint.fork_center[1] = first_child + pick->second;
        hint.fork_center[2] = first_child + pick->third;
        consider({StateTag::T35ForkCenter, 0}, base + kT35 - kP2 + pick->gain);
    }

    // T35 with v as the short center: a child centers a P3 below, another child is alone.
    for (std::size_t j = 0; j < c; ++j) {
        const Pos w = first_child + static_cast<Pos>(j);
        if (child_count(w) >= 2) {
            gain_[j] = star_mid_[mid_index(w, 2)];
            *gain_[j] -= best_[w];
        } else {
            gain_[j].reset();
        }
    }
    if (auto pick = detail::best_distinct_pair(gain_view, isolate_view)) {
        hint.short_center[0] = first_child + pick->first;
        hint.short_center[1] = first_child + pick->second;
        consider({StateTag::T35ShortCenter, 0}, base + kT35 - kP3 + pick->gain);
    }

    best_[p] = std::move(best);
}

Score TreeSolver::state_value(Vertex v, CoalitionState state) const {
    for (const auto& [s, value] : recorded_states(v)) {
        if (s == state) return value;
    }
    return std::nullopt;
}

const std::vector<std::pair<CoalitionState, Rational>>& TreeSolver::recorded_states(Vertex v) const {
    if (!options_.record_states) throw PreconditionError("state values were not recorded");
    return recorded_.at(position(v));
}

Partition TreeSolver::partition() const {
    const std::size_t n = best_.size();
    std::vector<std::uint32_t> block_of(n, 0);  // by position
    std::uint32_t block_count = 0;

    struct Request {
        Pos p;
        CoalitionState state;
        std::uint32_t block;
    };
    std::vector<Request> stack{{0, hints_[0].best, block_count++}};
    std::vector<char> joined(n, 0);
    std::vector<Request> joins;

    while (!stack.empty()) {
        const Request req = stack.back();
        stack.pop_back();
        block_of[req.p] = req.block;
        const Pos first_child = child_begin_[req.p];
        const std::size_t c = child_count(req.p);

        joins.clear();
        auto join = [&](Pos w, CoalitionState s) { joins.push_back({w, s, req.block}); };
        const Hints& hint = hints_[req.p];
        switch (req.state.tag) {
            case StateTag::Isolated:
                break;
            case StateTag::StarMid: {
                const std::uint32_t* order = delta_order_.data() + first_child;
                for (std::size_t f = 0; f < req.state.leaves && f < c; ++f) {
                    join(first_child + order[f], CoalitionState::isolated());
                }
                break;
            }
            case StateTag::StarLeaf:
                join(leaf_child_[leaf_begin_[req.p] + req.state.leaves - 1],
                     CoalitionState::star_mid(req.state.leaves - 1));
                break;
            case StateTag::P4Leaf:
                join(hint.p4_leaf, CoalitionState::star_leaf(2));
                break;
            case StateTag::P4Mid:
                join(hint.p4_mid[0], CoalitionState::star_leaf(1));
                join(hint.p4_mid[1], CoalitionState::isolated());
                break;
            case StateTag::T35ShortLeaf:
                join(hint.short_leaf, CoalitionState::star_leaf(3));
                break;
            case StateTag::T35ForkLeaf:
                join(hint.fork_leaf, {StateTag::P4Mid, 0});
                break;
            case StateTag::T35ShortCenter:
                join(hint.short_center[0], CoalitionState::star_mid(2));
                join(hint.short_center[1], CoalitionState::isolated());
                break;
            case StateTag::T35ForkCenter:
                join(hint.fork_center[0], CoalitionState::star_leaf(1));
                join(hint.fork_center[1], CoalitionState::isolated());
                join(hint.fork_center[2], CoalitionState::isolated());
                break;
        }
        for (const Request& r : joins) joined[r.p] = 1;
        for (Pos w = first_child; w < child_begin_[req.p + 1]; ++w) {
            if (!joined[w]) stack.push_back({w, hints_[w].best, block_count++});
        }
        for (const Request& r : joins) {
            joined[r.p] = 0;
            stack.push_back(r);
        }
    }

    // Bucket vertices by block in ascending vertex order, so every block comes
    // out sorted and blocks are numbered by their smallest vertex.
    std::vector<std::uint32_t> rank(block_count, ~std::uint32_t{0});
    std::vector<std::uint32_t> sizes;
    std::vector<std::uint32_t> vertex_block(n);
    for (Vertex v = 0; v < n; ++v) {
        std::uint32_t& r = rank[block_of[position_[v]]];
        if (r == ~std::uint32_t{0}) {
            r = static_cast<std::uint32_t>(sizes.size());
            sizes.push_back(0);
        }
        vertex_block[v] = r;
        ++sizes[r];
    }
    std::vector<std::vector<Vertex>> members(block_count);
    for (std::uint32_t b = 0; b < block_count; ++b) members[b].reserve(sizes[b]);
    for (Vertex v = 0; v < n; ++v) members[vertex_block[v]].push_back(v);
    std::vector<Coalition> blocks;
    blocks.reserve(block_count);
    for (auto& m : members) blocks.emplace_back(std::move(m));
    return Partition(std::move(blocks));
}

Solution solve_tree(const Tree& tree) { return TreeSolver(tree).solution(); }

Solution solve_tree(const Graph& graph) { return solve_tree(Tree(graph)); }

}  // namespace maxswp
