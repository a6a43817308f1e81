#ifndef MAXSWP_TESTS_ORACLES_HPP
#define MAXSWP_TESTS_ORACLES_HPP

// Deliberately naive reference implementations used to cross-check the
// library. They share no code with it beyond the Graph container.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "maxswp/graph.hpp"
#include "maxswp/rational.hpp"

namespace maxswp::testing {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::rational<BigInt>;

inline Rational to_rational(const BigRational& q) {
    return Rational::parse(q.numerator().str() + "/" + q.denominator().str());
}

/// Welfare of one coalition by Floyd-Warshall on the induced subgraph.
inline BigRational naive_coalition_welfare(const Graph& g, const std::vector<Vertex>& members) {
    const std::size_t k = members.size();
    constexpr std::uint32_t kInf = 1U << 30;
    std::vector<std::vector<std::uint32_t>> dist(k, std::vector<std::uint32_t>(k, kInf));
    for (std::size_t i = 0; i < k; ++i) {
        dist[i][i] = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (i != j && g.has_edge(members[i], members[j])) dist[i][j] = 1;
        }
    }
    for (std::size_t m = 0; m < k; ++m) {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) dist[i][j] = std::min(dist[i][j], dist[i][m] + dist[m][j]);
        }
    }
    BigRational sum(0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (i != j && dist[i][j] < kInf) sum += BigRational(1, dist[i][j]);
        }
    }
    return k == 0 ? BigRational(0) : sum / BigRational(static_cast<long>(k));
}

inline BigRational naive_welfare(const Graph& g, const std::vector<std::vector<Vertex>>& blocks) {
    BigRational total(0);
    for (const auto& b : blocks) total += naive_coalition_welfare(g, b);
    return total;
}

/// Best welfare over every set partition (no connectivity assumption).
/// Bell(n) partitions, so only for n <= 9.
inline BigRational naive_optimum(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::vector<Vertex>> blocks;
    BigRational best(-1);
    auto assign = [&](auto&& self, Vertex v) -> void {
        if (v == n) {
            best = std::max(best, naive_welfare(g, blocks));
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(v);
            self(self, v + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({v});
        self(self, v + 1);
        blocks.pop_back();
    };
    assign(assign, 0);
    return best;
}

/// Degree sequence of the subgraph induced by `members`, sorted descending.
inline std::vector<std::size_t> induced_degrees(const Graph& g, const std::vector<Vertex>& members) {
    std::vector<std::size_t> degrees;
    for (Vertex u : members) {
        std::size_t d = 0;
        for (Vertex w : members) d += g.has_edge(u, w) ? 1 : 0;
        degrees.push_back(d);
    }
    std::sort(degrees.rbegin(), degrees.rend());
    return degrees;
}

inline std::size_t induced_edge_count(const Graph& g, const std::vector<Vertex>& members) {
    std::size_t total = 0;
    for (std::size_t d : induced_degrees(g, members)) total += d;
    return total / 2;
}

/// Random connected graph: a random tree plus `extra` random chords.
inline Graph random_connected_graph(std::size_t n, std::size_t extra, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        edges.push_back({static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng)), v});
    }
    for (std::size_t tries = 0; tries < 20 * extra && edges.size() < n - 1 + extra; ++tries) {
        const auto u = static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
        const auto v = static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
        if (u == v) continue;
        const Edge e{std::min(u, v), std::max(u, v)};
        if (std::find_if(edges.begin(), edges.end(), [&](const Edge& f) {
                return std::min(f.u, f.v) == e.u && std::max(f.u, f.v) == e.v;
            }) != edges.end()) {
            continue;
        }
        edges.push_back(e);
    }
    return Graph(n, edges);
}

}  // namespace maxswp::testing

#endif  // MAXSWP_TESTS_ORACLES_HPP
