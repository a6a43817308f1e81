#include "maxswp/oracle_solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <thread>

#include "maxswp/errors.hpp"

namespace maxswp {

namespace {

std::vector<VertexMask> adjacency_masks(const Graph& g) {
    std::vector<VertexMask> adj(g.order(), 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= VertexMask{1} << e.v;
        adj[e.v] |= VertexMask{1} << e.u;
    }
    return adj;
}

// Welfare of every block as an integer over the common denominator
// lcm(1..n-1) * lcm(1..n): distances are below n and block sizes at most n.
class ScaledWeights {
public:
    explicit ScaledWeights(const Graph& g) : adj_(adjacency_masks(g)), n_(g.order()) {
        std::int64_t distance_lcm = 1;
        std::int64_t size_lcm = 1;
        for (std::int64_t i = 1; i < static_cast<std::int64_t>(n_); ++i) distance_lcm = std::lcm(distance_lcm, i);
        for (std::int64_t i = 1; i <= static_cast<std::int64_t>(n_); ++i) size_lcm = std::lcm(size_lcm, i);
        distance_lcm_ = distance_lcm;
        size_lcm_ = size_lcm;
        std::int64_t bound = 0;
        // Total welfare is below n, so n * denominator bounds every DP value.
        if (__builtin_mul_overflow(distance_lcm, size_lcm, &denominator_) ||
            __builtin_mul_overflow(denominator_, static_cast<std::int64_t>(n_ + 1), &bound)) {
            throw SizeLimitError("exact solver common denominator overflows 64 bits");
        }
    }

    [[nodiscard]] std::int64_t denominator() const { return denominator_; }

    [[nodiscard]] std::int64_t weight(VertexMask block) const {
        const int size = std::popcount(block);
        if (size <= 1) return 0;
        std::int64_t harmonic = 0;  // sum over members of sum_u L / dist(v, u)
        for (VertexMask rest = block; rest != 0; rest &= rest - 1) {
            const VertexMask start = rest & (~rest + 1);
            VertexMask visited = start;
            VertexMask frontier = start;
            for (std::int64_t d = 1; frontier != 0; ++d) {
                VertexMask next = 0;
                for (VertexMask f = frontier; f != 0; f &= f - 1) next |= adj_[std::countr_zero(f)];
                next &= block & ~visited;
                harmonic += std::popcount(next) * (distance_lcm_ / d);
                visited |= next;
                frontier = next;
            }
        }
        return harmonic * (size_lcm_ / size);
    }

    [[nodiscard]] Rational to_rational(std::int64_t scaled) const {
        return Rational(static_cast<Rational::Int>(scaled), static_cast<Rational::Int>(denominator_));
    }

private:
    std::vector<VertexMask> adj_;
    std::size_t n_;
    std::int64_t distance_lcm_ = 1;
    std::int64_t size_lcm_ = 1;
    std::int64_t denominator_ = 1;
};

void connected_grow(const std::vector<VertexMask>& adj, VertexMask set, VertexMask extension, VertexMask banned,
                    const std::function<void(VertexMask)>& visit) {
    visit(set);
    // Branch on each extension vertex: include it now, or ban it for the
    // remaining branches. Every connected superset is reached exactly once.
    while (extension != 0) {
        const VertexMask pick = extension & (~extension + 1);
        extension ^= pick;
        const VertexMask grown = set | pick;
        const VertexMask fresh = adj[std::countr_zero(pick)] & ~grown & ~banned & ~extension;
        connected_grow(adj, grown, extension | fresh, banned, visit);
        banned |= pick;
    }
}

Partition masks_to_partition(const std::vector<VertexMask>& blocks) {
    std::vector<Coalition> coalitions;
    coalitions.reserve(blocks.size());
    for (VertexMask b : blocks) coalitions.push_back(mask_to_coalition(b));
    std::sort(coalitions.begin(), coalitions.end());
    return Partition(std::move(coalitions));
}

}  // namespace

Coalition mask_to_coalition(VertexMask mask) {
    std::vector<Vertex> members;
    for (; mask != 0; mask &= mask - 1) members.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    return Coalition(std::move(members));
}

VertexMask coalition_to_mask(const Coalition& c) {
    VertexMask mask = 0;
    for (Vertex v : c) {
        if (v >= 32) throw PreconditionError("vertex id too large for a 32-bit mask");
        mask |= VertexMask{1} << v;
    }
    return mask;
}

void for_each_connected_subset(const Graph& g, const std::function<void(VertexMask)>& visit) {
    if (g.order() > 32) throw SizeLimitError("connected-subset enumeration is limited to 32 vertices");
    const auto adj = adjacency_masks(g);
    for (Vertex seed = 0; seed < g.order(); ++seed) {
        const VertexMask below = (VertexMask{1} << seed) - 1;
        const VertexMask start = VertexMask{1} << seed;
        connected_grow(adj, start, adj[seed] & ~below, below, visit);
    }
}

Solution solve_exact(const Graph& g, ExactOptions options) {
    const std::size_t n = g.order();
    if (n == 0) throw PreconditionError("exact solver needs at least one vertex");
    if (n > kMaxExactOrder) {
        throw SizeLimitError("exact solver is limited to n <= " + std::to_string(kMaxExactOrder) + " (got " +
                             std::to_string(n) + ")");
    }
    if (!is_connected(g)) throw PreconditionError("exact solver requires a connected graph");

    const ScaledWeights scale(g);
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<VertexMask> connected;
    for_each_connected_subset(g, [&](VertexMask m) { connected.push_back(m); });

    constexpr std::int64_t kNotConnected = -1;
    std::vector<std::int64_t> weight(subsets, kNotConnected);
    unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, connected.size() / 4096)));
    auto fill = [&](std::size_t first, std::size_t last) {
        for (std::size_t i = first; i < last; ++i) weight[connected[i]] = scale.weight(connected[i]);
    };
    if (threads <= 1) {
        fill(0, connected.size());
    } else {
        std::vector<std::jthread> workers;
        const std::size_t chunk = (connected.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t first = std::min(connected.size(), t * chunk);
            const std::size_t last = std::min(connected.size(), first + chunk);
            workers.emplace_back(fill, first, last);
        }
    }

    // best[S]: optimum over partitions of S into connected blocks; the block
    // holding S's smallest vertex is enumerated among submasks of S.
    std::vector<std::int64_t> best(subsets, 0);
    std::vector<VertexMask> choice(subsets, 0);
    for (std::size_t s = 1; s < subsets; ++s) {
        const auto set = static_cast<VertexMask>(s);
        const VertexMask low = set & (~set + 1);
        const VertexMask rest = set ^ low;
        std::int64_t top = -1;
        VertexMask pick = 0;
        VertexMask sub = rest;
        while (true) {
            const VertexMask block = sub | low;
            const std::int64_t w = weight[block];
            if (w != kNotConnected) {
                const std::int64_t candidate = w + best[set ^ block];
                if (candidate > top) {
                    top = candidate;
                    pick = block;
                }
            }
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
        best[s] = top;
        choice[s] = pick;
    }

    std::vector<VertexMask> blocks;
    for (auto s = static_cast<VertexMask>(subsets - 1); s != 0; s ^= choice[s]) blocks.push_back(choice[s]);
    return {masks_to_partition(blocks), scale.to_rational(best[subsets - 1])};
}

Solution solve_exact_allow_disconnected_blocks(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) throw PreconditionError("exact solver needs at least one vertex");
    if (n > kMaxUnrestrictedOrder) {
        throw SizeLimitError("unrestricted exact solver is limited to n <= " + std::to_string(kMaxUnrestrictedOrder));
    }
    const ScaledWeights scale(g);
    std::vector<std::int64_t> weight(std::size_t{1} << n);
    for (std::size_t m = 1; m < weight.size(); ++m) weight[m] = scale.weight(static_cast<VertexMask>(m));

    // Restricted-growth enumeration of all set partitions of 0..n-1.
    std::vector<VertexMask> blocks;
    blocks.reserve(n);  // references into `blocks` must survive deeper push_backs
    std::vector<VertexMask> best_blocks;
    std::int64_t best = -1;
    auto assign = [&](auto&& self, std::size_t v) -> void {
        if (v == n) {
            std::int64_t total = 0;
            for (VertexMask b : blocks) total += weight[b];
            if (total > best) {
                best = total;
                best_blocks = blocks;
            }
            return;
        }
        const VertexMask bit = VertexMask{1} << v;
        for (VertexMask& b : blocks) {
            b |= bit;
            self(self, v + 1);
            b ^= bit;
        }
        blocks.push_back(bit);
        self(self, v + 1);
        blocks.pop_back();
    };
    assign(assign, 0);
    return {masks_to_partition(best_blocks), scale.to_rational(best)};
}

}  // namespace maxswp
