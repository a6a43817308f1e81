#include "maxswp/generators.hpp"

#include <numeric>
#include <random>
#include <string>

#include "maxswp/errors.hpp"

namespace maxswp {

Graph make_path(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) edges.push_back({static_cast<Vertex>(v - 1), static_cast<Vertex>(v)});
    return Graph(n, edges);
}

Graph make_star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (std::size_t v = 1; v <= leaves; ++v) edges.push_back({0, static_cast<Vertex>(v)});
    return Graph(leaves + 1, edges);
}

Graph make_cycle(std::size_t n) {
    if (n < 3) throw PreconditionError("a cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < n; ++v) edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n)});
    return Graph(n, edges);
}

Graph make_complete(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    return Graph(n, edges);
}

Graph make_diameter3_tree(std::size_t k, std::size_t l) {
    if (k < 1 || l < 1) throw PreconditionError("diameter-3 tree needs k, l >= 1");
    std::vector<Edge> edges{{0, 1}};
    Vertex next = 2;
    for (std::size_t i = 0; i < k; ++i) edges.push_back({0, next++});
    for (std::size_t j = 0; j < l; ++j) edges.push_back({1, next++});
    return Graph(next, edges);
}

Graph make_diameter4_tree(std::span<const std::size_t> leaf_counts) {
    if (leaf_counts.size() < 2 || leaf_counts[0] < 1 || leaf_counts[1] < 1) {
        throw PreconditionError("diameter-4 tree needs k >= 2 hubs with l_1, l_2 >= 1");
    }
    const auto k = static_cast<Vertex>(leaf_counts.size());
    std::vector<Edge> edges;
    for (Vertex hub = 1; hub <= k; ++hub) edges.push_back({0, hub});
    Vertex next = k + 1;
    for (Vertex i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < leaf_counts[i]; ++j) edges.push_back({i + 1, next++});
    }
    return Graph(next, edges);
}

Graph make_double_triangle() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}); }

Graph make_triple_triangle() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}}); }

Graph prufer_decode(std::span<const Vertex> sequence, std::size_t n) {
    if (n == 0) throw PreconditionError("a tree needs at least one vertex");
    if (n == 1) return Graph(1, {});
    if (sequence.size() != n - 2) throw PreconditionError("Prüfer sequence must have length n - 2");
    std::vector<std::size_t> degree(n, 1);
    for (Vertex x : sequence) {
        if (x >= n) throw PreconditionError("Prüfer symbol out of range");
        ++degree[x];
    }
    // Linear-time decoding: walk a pointer to the smallest current leaf.
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    std::size_t ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    std::size_t leaf = ptr;
    for (Vertex x : sequence) {
        edges.push_back({static_cast<Vertex>(leaf), x});
        if (--degree[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.push_back({static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1)});
    return Graph(n, edges);
}

Tree random_tree(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw PreconditionError("a tree needs at least one vertex");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> sequence(n >= 2 ? n - 2 : 0);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    for (Vertex& x : sequence) x = pick(rng);
    return Tree(prufer_decode(sequence, n));
}

void for_each_labeled_tree(std::size_t n, const std::function<void(const Tree&)>& visit) {
    if (n == 0) throw PreconditionError("a tree needs at least one vertex");
    if (n > kMaxEnumeratedTreeOrder) {
        throw SizeLimitError("labeled-tree enumeration is limited to n <= " + std::to_string(kMaxEnumeratedTreeOrder));
    }
    if (n <= 2) {
        visit(Tree(n == 1 ? Graph(1, {}) : Graph(2, {{0, 1}})));
        return;
    }
    std::vector<Vertex> sequence(n - 2, 0);
    while (true) {
        visit(Tree(prufer_decode(sequence, n)));
        std::size_t i = sequence.size();
        while (i > 0 && sequence[i - 1] == n - 1) sequence[--i] = 0;
        if (i == 0) return;
        ++sequence[i - 1];
    }
}

std::vector<Tree> enumerate_labeled_trees(std::size_t n) {
    std::vector<Tree> trees;
    for_each_labeled_tree(n, [&](const Tree& t) { trees.push_back(t); });
    return trees;
}

}  // namespace maxswp
