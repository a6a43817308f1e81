#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "maxswp/edge_list.hpp"
#include "maxswp/errors.hpp"
#include "maxswp/generators.hpp"
#include "maxswp/graph.hpp"

using namespace maxswp;

TEST_SUITE("graph") {

TEST_CASE("construction and adjacency") {
    const Graph g(4, {{2, 0}, {1, 2}, {3, 2}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.edges().front() == Edge{0, 2});
    CHECK(g.degree(2) == 3);
    CHECK(std::vector<Vertex>(g.neighbors(2).begin(), g.neighbors(2).end()) == std::vector<Vertex>{0, 1, 3});
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("construction rejects malformed edge sets") {
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), PreconditionError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), PreconditionError);
}

TEST_CASE("empty and single-vertex graphs") {
    const Graph empty(0, {});
    CHECK(empty.order() == 0);
    CHECK_FALSE(is_tree(empty));
    CHECK_THROWS_AS(diameter(empty), PreconditionError);
    const Graph one(1, {});
    CHECK(is_tree(one));
    CHECK(is_connected(one));
    CHECK(diameter(one) == 0);
    CHECK(path_order(one) == std::vector<Vertex>{0});
}

TEST_CASE("tree validation") {
    CHECK_NOTHROW(Tree(make_star(4)));
    CHECK_THROWS_AS(Tree(make_cycle(4)), PreconditionError);
    CHECK_THROWS_AS(Tree(Graph(4, {{0, 1}, {2, 3}})), PreconditionError);
    CHECK_THROWS_AS(Tree(make_path(3), Vertex{3}), PreconditionError);
    CHECK(Tree(make_path(5), Vertex{2}).root() == 2);
}

TEST_CASE("bfs distances inside an induced subgraph") {
    const Graph c6 = make_cycle(6);
    const auto whole = bfs_distances(c6, 0);
    CHECK(whole[3] == 3);
    // Removing vertex 5 forces the long way round.
    const Coalition arc{0, 1, 2, 3, 4};
    const DistanceMap d = bfs_distances(c6, 0, arc);
    CHECK(d.at(4) == 4);
    const DistanceMap split = bfs_distances(c6, 0, Coalition{0, 1, 3});
    CHECK(split.count(3) == 0);
    CHECK_THROWS_AS(bfs_distances(c6, 5, arc), PreconditionError);
    CHECK(is_connected_induced(c6, arc));
    CHECK_FALSE(is_connected_induced(c6, Coalition{0, 2}));
    CHECK_THROWS_AS((void)is_connected_induced(c6, Coalition{}), PreconditionError);
}

TEST_CASE("diameter and induced subgraphs") {
    CHECK(diameter(make_path(7)) == 6);
    CHECK(diameter(make_diameter3_tree(3, 4)) == 3);
    const std::vector<std::size_t> counts{2, 1, 3};
    CHECK(diameter(make_diameter4_tree(counts)) == 4);
    CHECK_THROWS_AS(diameter(Graph(3, {{0, 1}})), PreconditionError);
    const Graph sub = induced_subgraph(make_cycle(5), Coalition{1, 2, 4});
    CHECK(sub.order() == 3);
    CHECK(sub.size() == 1);
    CHECK(sub.has_edge(0, 1));
}

TEST_CASE("path order") {
    const Graph p(5, {{3, 1}, {1, 4}, {4, 0}, {0, 2}});
    CHECK(path_order(p) == std::vector<Vertex>{2, 0, 4, 1, 3});
    CHECK(path_order(make_star(3)).empty());
    CHECK(path_order(make_cycle(4)).empty());
    CHECK(path_order(Graph(2, {})).empty());
}

}

TEST_SUITE("generators") {

TEST_CASE("named families") {
    CHECK(make_path(5).size() == 4);
    CHECK(make_star(4).degree(0) == 4);
    CHECK(make_complete(5).size() == 10);
    CHECK(make_cycle(5).size() == 5);
    const Graph t35 = make_t35();
    CHECK(t35.order() == 5);
    CHECK(diameter(t35) == 3);
    CHECK(make_double_triangle().size() == 5);
    CHECK(make_triple_triangle().order() == 5);
    CHECK(make_triple_triangle().size() == 7);
    CHECK_THROWS_AS(make_diameter3_tree(0, 2), PreconditionError);
    const std::vector<std::size_t> bad{1, 0};
    CHECK_THROWS_AS(make_diameter4_tree(bad), PreconditionError);
    const std::vector<std::size_t> one_hub{3};
    CHECK_THROWS_AS(make_diameter4_tree(one_hub), PreconditionError);
}

TEST_CASE("labeled tree counts follow n^(n-2)") {
    const std::map<std::size_t, std::size_t> expected{{1, 1}, {2, 1}, {3, 3}, {4, 16}, {5, 125}, {6, 1296}};
    for (const auto& [n, count] : expected) {
        std::set<std::vector<std::pair<Vertex, Vertex>>> distinct;
        for_each_labeled_tree(n, [&](const Tree& t) {
            std::vector<std::pair<Vertex, Vertex>> key;
            for (const Edge& e : t.graph().edges()) key.emplace_back(e.u, e.v);
            std::sort(key.begin(), key.end());
            distinct.insert(key);
        });
        CHECK_MESSAGE(distinct.size() == count, "n = " << n);
    }
    CHECK_THROWS_AS(for_each_labeled_tree(10, [](const Tree&) {}), SizeLimitError);
}

TEST_CASE("prufer decoding") {
    const std::vector<Vertex> seq{3, 3, 3, 4};
    const Graph g = prufer_decode(seq, 6);
    CHECK(is_tree(g));
    CHECK(g.degree(3) == 4);
    CHECK(g.degree(4) == 2);
    const std::vector<Vertex> bad{7};
    CHECK_THROWS_AS(prufer_decode(bad, 3), PreconditionError);
}

TEST_CASE("random trees are deterministic per seed") {
    const Tree a = random_tree(200, 7);
    const Tree b = random_tree(200, 7);
    CHECK(a.graph().edges() == b.graph().edges());
    CHECK(is_tree(a.graph()));
    CHECK(random_tree(1, 3).order() == 1);
}

}

TEST_SUITE("edge_list") {

TEST_CASE("round trip") {
    const Graph g = make_diameter3_tree(2, 3);
    std::stringstream buffer;
    write_edge_list(buffer, g);
    const Graph back = read_edge_list(buffer);
    CHECK(back.order() == g.order());
    CHECK(back.edges() == g.edges());
}

TEST_CASE("comments, blank lines and CRLF") {
    std::istringstream in("# a path\r\n3 2\r\n\r\n0 1\r\n# middle\r\n1 2\r\n");
    const Graph g = read_edge_list(in);
    CHECK(g.size() == 2);
}

TEST_CASE("malformed input is reported") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in);
    };
    CHECK_THROWS_AS(parse(""), FormatError);
    CHECK_THROWS_AS(parse("3\n"), FormatError);
    CHECK_THROWS_AS(parse("3 2\n0 1\n"), FormatError);
    CHECK_THROWS_AS(parse("3 1\n0 5\n"), FormatError);
    CHECK_THROWS_AS(parse("3 1\n0 x\n"), FormatError);
    CHECK_THROWS_AS(parse("3 1\n0 -1\n"), FormatError);
    CHECK_THROWS_AS(parse("3 1\n0 1\n1 2\n"), FormatError);
    CHECK_THROWS_AS(parse("3 2\n0 1\n1 0\n"), FormatError);
    CHECK_THROWS_AS(parse("3 1\n1 1\n"), FormatError);
    CHECK_THROWS_AS(read_edge_list(std::filesystem::path("/nonexistent/graph.txt")), FormatError);
}

}
