#include "maxswp/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "maxswp/errors.hpp"

namespace maxswp {

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : vertex_count_(vertex_count) {
    edges_.reserve(edges.size());
    std::vector<std::size_t> degree(vertex_count, 0);
    for (const Edge& e : edges) {
        if (e.u >= vertex_count || e.v >= vertex_count) {
            throw PreconditionError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                    ") references a vertex outside 0.." + std::to_string(vertex_count) + "-1");
        }
        if (e.u == e.v) throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
        edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
        ++degree[e.u];
        ++degree[e.v];
    }

    offsets_.assign(vertex_count + 1, 0);
    for (std::size_t v = 0; v < vertex_count; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
    targets_.resize(offsets_[vertex_count]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
        targets_[cursor[e.u]++] = e.v;
        targets_[cursor[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
        auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
        std::sort(first, last);
        if (auto dup = std::adjacent_find(first, last); dup != last) {
            throw PreconditionError("duplicate edge (" + std::to_string(v) + ", " + std::to_string(*dup) + ")");
        }
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= vertex_count_ || v >= vertex_count_) return false;
    const auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Tree::Tree(Graph graph, std::optional<Vertex> root) : graph_(std::move(graph)), root_(root.value_or(0)) {
    if (graph_.order() == 0) throw PreconditionError("a tree needs at least one vertex");
    if (root_ >= graph_.order()) throw PreconditionError("tree root out of range");
    if (!is_tree(graph_)) throw PreconditionError("graph is not a tree");
}

Coalition::Coalition(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Coalition Coalition::all(std::size_t vertex_count) {
    std::vector<Vertex> members(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) members[v] = static_cast<Vertex>(v);
    return Coalition(std::move(members));
}

bool Coalition::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

DistanceMap bfs_distances(const Graph& g, Vertex source, const Coalition& within) {
    if (!within.contains(source)) {
        throw PreconditionError("BFS source " + std::to_string(source) + " is not in the coalition");
    }
    DistanceMap dist;
    dist.reserve(within.size());
    dist.emplace(source, 0);
    std::deque<Vertex> queue{source};
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        const std::uint32_t du = dist.at(u);
        for (Vertex w : g.neighbors(u)) {
            if (!within.contains(w) || dist.contains(w)) continue;
            dist.emplace(w, du + 1);
            queue.push_back(w);
        }
    }
    return dist;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
    std::vector<std::uint32_t> dist(g.order(), kUnreachable);
    std::vector<Vertex> queue;
    queue.reserve(g.order());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] != kUnreachable) continue;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    const auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](std::uint32_t d) { return d == kUnreachable; });
}

bool is_tree(const Graph& g) { return g.order() > 0 && g.size() == g.order() - 1 && is_connected(g); }

bool is_connected_induced(const Graph& g, const Coalition& c) {
    if (c.empty()) throw PreconditionError("connectivity of an empty coalition is undefined");
    return bfs_distances(g, c.members().front(), c).size() == c.size();
}

std::size_t diameter(const Graph& g) {
    if (g.order() == 0) throw PreconditionError("diameter of an empty graph");
    std::size_t best = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        for (std::uint32_t d : bfs_distances(g, s)) {
            if (d == kUnreachable) throw PreconditionError("diameter of a disconnected graph");
            best = std::max<std::size_t>(best, d);
        }
    }
    return best;
}

Graph induced_subgraph(const Graph& g, const Coalition& c) {
    std::unordered_map<Vertex, Vertex> local;
    local.reserve(c.size());
    for (Vertex v : c) local.emplace(v, static_cast<Vertex>(local.size()));
    std::vector<Edge> edges;
    for (Vertex v : c) {
        for (Vertex w : g.neighbors(v)) {
            if (v < w) {
                if (auto it = local.find(w); it != local.end()) edges.push_back({local.at(v), it->second});
            }
        }
    }
    return Graph(c.size(), edges);
}

std::vector<Vertex> path_order(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0 || g.size() != n - 1) return {};
    if (n == 1) return {0};
    std::optional<Vertex> start;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) > 2 || g.degree(v) == 0) return {};
        if (g.degree(v) == 1 && !start) start = v;
    }
    if (!start) return {};
    std::vector<Vertex> order{*start};
    Vertex prev = *start;
    Vertex cur = g.neighbors(*start).front();
    while (true) {
        order.push_back(cur);
        const auto nbrs = g.neighbors(cur);
        if (nbrs.size() == 1) break;
        const Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = next;
    }
    return order.size() == n ? order : std::vector<Vertex>{};
}

}  // namespace maxswp
