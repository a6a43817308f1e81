#include "maxswp/welfare.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "maxswp/errors.hpp"

namespace maxswp {

namespace {

// Local view of G[C]: members renumbered 0..|C|-1 with member-only adjacency.
class InducedView {
public:
    InducedView(const Graph& g, const Coalition& c) : offsets_(c.size() + 1, 0) {
        std::unordered_map<Vertex, std::uint32_t> local;
        local.reserve(c.size());
        for (Vertex v : c) {
            if (v >= g.order()) throw PreconditionError("coalition member " + std::to_string(v) + " out of range");
            local.emplace(v, static_cast<std::uint32_t>(local.size()));
        }
        std::uint32_t i = 0;
        for (Vertex v : c) {
            for (Vertex w : g.neighbors(v)) {
                if (auto it = local.find(w); it != local.end()) targets_.push_back(it->second);
            }
            offsets_[++i] = targets_.size();
        }
    }

    [[nodiscard]] std::size_t size() const { return offsets_.size() - 1; }

    /// counts[d] += number of members at distance d from `source` (d >= 1).
    void accumulate_distance_counts(std::uint32_t source, std::vector<std::uint64_t>& counts) const {
        dist_.assign(size(), kUnreachable);
        queue_.clear();
        dist_[source] = 0;
        queue_.push_back(source);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const std::uint32_t u = queue_[head];
            for (std::size_t e = offsets_[u]; e < offsets_[u + 1]; ++e) {
                const std::uint32_t w = targets_[e];
                if (dist_[w] != kUnreachable) continue;
                dist_[w] = dist_[u] + 1;
                if (counts.size() <= dist_[w]) counts.resize(dist_[w] + 1, 0);
                ++counts[dist_[w]];
                queue_.push_back(w);
            }
        }
    }

private:
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> targets_;
    mutable std::vector<std::uint32_t> dist_;
    mutable std::vector<std::uint32_t> queue_;
};

Rational harmonic_weighted_sum(const std::vector<std::uint64_t>& counts) {
    Rational sum;
    for (std::size_t d = 1; d < counts.size(); ++d) {
        if (counts[d] != 0) sum += Rational(static_cast<Rational::Int>(counts[d]), static_cast<Rational::Int>(d));
    }
    return sum;
}

}  // namespace

Partition Partition::grand(std::size_t vertex_count) { return Partition({Coalition::all(vertex_count)}); }

Partition Partition::singletons(std::size_t vertex_count) {
    std::vector<Coalition> blocks;
    blocks.reserve(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) blocks.push_back(Coalition{static_cast<Vertex>(v)});
    return Partition(std::move(blocks));
}

void Partition::validate(std::size_t vertex_count) const {
    std::vector<char> seen(vertex_count, 0);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].empty()) throw PreconditionError("partition block " + std::to_string(b) + " is empty");
        for (Vertex v : blocks_[b]) {
            if (v >= vertex_count) {
                throw PreconditionError("partition block " + std::to_string(b) + " contains vertex " +
                                        std::to_string(v) + " outside 0.." + std::to_string(vertex_count) + "-1");
            }
            if (seen[v]) throw PreconditionError("vertex " + std::to_string(v) + " appears in more than one block");
            seen[v] = 1;
        }
    }
    if (auto gap = std::find(seen.begin(), seen.end(), 0); gap != seen.end()) {
        throw PreconditionError("vertex " + std::to_string(gap - seen.begin()) + " is not covered by the partition");
    }
}

Partition Partition::canonical() const {
    std::vector<Coalition> blocks = blocks_;
    std::sort(blocks.begin(), blocks.end());
    return Partition(std::move(blocks));
}

Rational utility(const Graph& g, Vertex v, const Coalition& c) {
    if (!c.contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " is not in the coalition");
    if (c.size() == 1) return Rational(0);
    const InducedView view(g, c);
    std::vector<std::uint64_t> counts;
    const auto source = static_cast<std::uint32_t>(std::lower_bound(c.begin(), c.end(), v) - c.begin());
    view.accumulate_distance_counts(source, counts);
    return harmonic_weighted_sum(counts) / Rational(static_cast<long long>(c.size()));
}

Rational coalition_welfare(const Graph& g, const Coalition& c) {
    if (c.empty()) throw PreconditionError("welfare of an empty coalition");
    if (c.size() == 1) return Rational(0);
    const InducedView view(g, c);
    std::vector<std::uint64_t> counts;
    for (std::uint32_t s = 0; s < view.size(); ++s) view.accumulate_distance_counts(s, counts);
    return harmonic_weighted_sum(counts) / Rational(static_cast<long long>(c.size()));
}

Rational welfare(const Graph& g, const Partition& p) {
    p.validate(g.order());
    Rational total;
    for (const Coalition& block : p.blocks()) total += coalition_welfare(g, block);
    return total;
}

Rational average_welfare(const Graph& g, const Partition& p) {
    if (g.order() == 0) throw PreconditionError("average welfare of an empty graph");
    return welfare(g, p) / Rational(static_cast<long long>(g.order()));
}

}  // namespace maxswp
