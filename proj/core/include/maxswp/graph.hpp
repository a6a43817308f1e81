#ifndef MAXSWP_GRAPH_HPP
#define MAXSWP_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace maxswp {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Adjacency is stored in compressed-row form with each neighbor list sorted
/// ascending. Construction rejects self-loops, duplicate edges and
/// out-of-range endpoints with PreconditionError.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t vertex_count, std::span<const Edge> edges);
    Graph(std::size_t vertex_count, std::initializer_list<Edge> edges)
        : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

    [[nodiscard]] std::size_t order() const noexcept { return vertex_count_; }
    [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }

    /// Edges in insertion order, each normalized so that u < v.
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    [[nodiscard]] std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> targets_;
};

/// A connected acyclic graph with a designated root (vertex 0 unless given).
class Tree {
public:
    /// Throws PreconditionError unless `graph` is a tree with at least one vertex.
    explicit Tree(Graph graph, std::optional<Vertex> root = std::nullopt);

    [[nodiscard]] const Graph& graph() const noexcept { return graph_; }
    [[nodiscard]] std::size_t order() const noexcept { return graph_.order(); }
    [[nodiscard]] Vertex root() const noexcept { return root_; }

    [[nodiscard]] Tree rerooted(Vertex root) const { return Tree(graph_, root); }

private:
    Graph graph_;
    Vertex root_ = 0;
};

/// A set of vertex ids, kept sorted and free of duplicates.
class Coalition {
public:
    Coalition() = default;
    Coalition(std::initializer_list<Vertex> members) : Coalition(std::vector<Vertex>(members)) {}
    explicit Coalition(std::vector<Vertex> members);

    static Coalition all(std::size_t vertex_count);

    [[nodiscard]] const std::vector<Vertex>& members() const noexcept { return members_; }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] bool contains(Vertex v) const;

    [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
    [[nodiscard]] auto end() const noexcept { return members_.end(); }

    friend bool operator==(const Coalition&, const Coalition&) = default;
    friend auto operator<=>(const Coalition&, const Coalition&) = default;

private:
    std::vector<Vertex> members_;
};

/// Hop distances from a source; vertices absent from the map are unreachable.
using DistanceMap = std::unordered_map<Vertex, std::uint32_t>;

inline constexpr std::uint32_t kUnreachable = ~std::uint32_t{0};

/// Distances inside the subgraph induced by `within`. `source` must belong to it.
DistanceMap bfs_distances(const Graph& g, Vertex source, const Coalition& within);

/// Distances in the whole graph, kUnreachable for other components.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source);

[[nodiscard]] bool is_connected(const Graph& g);
[[nodiscard]] bool is_tree(const Graph& g);
[[nodiscard]] bool is_connected_induced(const Graph& g, const Coalition& c);

/// Exact diameter by BFS from every vertex. Throws on a disconnected or empty graph.
std::size_t diameter(const Graph& g);

/// Subgraph induced by `c`, relabeled 0..|c|-1 in the coalition's sorted order.
Graph induced_subgraph(const Graph& g, const Coalition& c);

/// For a graph that is a simple path, its vertices from one end to the other,
/// starting at the endpoint with the smaller id. Empty when g is not a path.
std::vector<Vertex> path_order(const Graph& g);

}  // namespace maxswp

#endif  // MAXSWP_GRAPH_HPP
