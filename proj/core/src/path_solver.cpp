#include "maxswp/path_solver.hpp"

#include "maxswp/errors.hpp"

namespace maxswp {

namespace {

Rational run_welfare(std::size_t length) {
    switch (length) {
        case 1: return Rational(0);
        case 2: return Rational(1);
        case 3: return Rational(5, 3);
        case 4: return Rational(13, 6);
        default: return path_welfare(length);
    }
}

}  // namespace

Solution solve_path(std::size_t n) {
    if (n == 0) throw PreconditionError("path needs at least one vertex");
    std::vector<std::size_t> runs;
    std::size_t rest = n;
    if (n == 1) {
        runs.push_back(1);
        rest = 0;
    } else if (n % 3 == 1) {
        runs.push_back(4);
        rest -= 4;
    } else if (n % 3 == 2) {
        runs.push_back(2);
        rest -= 2;
    }
    for (; rest > 0; rest -= 3) runs.push_back(3);

    Solution solution;
    std::vector<Coalition> blocks;
    blocks.reserve(runs.size());
    Vertex next = 0;
    for (std::size_t length : runs) {
        std::vector<Vertex> members(length);
        for (Vertex& v : members) v = next++;
        blocks.emplace_back(std::move(members));
        solution.welfare += run_welfare(length);
    }
    solution.partition = Partition(std::move(blocks));
    return solution;
}

Solution solve_path(const Graph& g) {
    const std::vector<Vertex> order = path_order(g);
    if (order.empty()) throw PreconditionError("graph is not a path");
    Solution by_position = solve_path(order.size());
    std::vector<Coalition> blocks;
    blocks.reserve(by_position.partition.block_count());
    for (const Coalition& positions : by_position.partition.blocks()) {
        std::vector<Vertex> members;
        members.reserve(positions.size());
        for (Vertex i : positions) members.push_back(order[i]);
        blocks.emplace_back(std::move(members));
    }
    return {Partition(std::move(blocks)), std::move(by_position.welfare)};
}

}  // namespace maxswp
