#include "maxswp_cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "maxswp/edge_list.hpp"
#include "maxswp/errors.hpp"
#include "maxswp/generators.hpp"
#include "maxswp/oracle_solver.hpp"
#include "maxswp/path_solver.hpp"
#include "maxswp/reduction.hpp"
#include "maxswp/tree_solver.hpp"
#include "maxswp/welfare.hpp"

namespace maxswp::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

json rational_json(const Rational& r) {
    return {{"num", r.numerator_string()}, {"den", r.denominator_string()}};
}

json blocks_json(const Partition& p) {
    json blocks = json::array();
    for (const Coalition& c : p.blocks()) blocks.push_back(std::vector<Vertex>(c.begin(), c.end()));
    return blocks;
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Partition parse_partition(const json& doc) {
    const json& blocks = doc.is_object() && doc.contains("blocks") ? doc.at("blocks") : doc;
    if (!blocks.is_array()) throw FormatError("partition must be an array of blocks or an object with \"blocks\"");
    std::vector<Coalition> coalitions;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (!blocks[b].is_array()) throw FormatError("partition block " + std::to_string(b) + " is not an array");
        std::vector<Vertex> members;
        std::set<Vertex> seen;
        for (const json& id : blocks[b]) {
            if (!id.is_number_unsigned()) {
                throw FormatError("partition block " + std::to_string(b) + " holds a non-vertex entry " + id.dump());
            }
            const auto v = id.get<std::uint64_t>();
            if (v > 0xFFFFFFFFULL) throw FormatError("vertex id " + std::to_string(v) + " out of range");
            if (!seen.insert(static_cast<Vertex>(v)).second) {
                throw PreconditionError("vertex " + std::to_string(v) + " is repeated in block " + std::to_string(b));
            }
            members.push_back(static_cast<Vertex>(v));
        }
        coalitions.emplace_back(std::move(members));
    }
    return Partition(std::move(coalitions));
}

struct SolveArgs {
    std::string input;
    std::string mode = "auto";
    unsigned threads = 0;
};

int cmd_solve(const SolveArgs& args, std::ostream& out) {
    const Graph g = read_edge_list(args.input);
    const auto start = Clock::now();
    std::string mode = args.mode;
    if (mode == "auto") {
        if (!path_order(g).empty()) {
            mode = "path";
        } else if (is_tree(g)) {
            mode = "tree";
        } else {
            mode = "exact";
        }
    }
    Solution solution;
    if (mode == "path") {
        solution = solve_path(g);
    } else if (mode == "tree") {
        solution = solve_tree(g);
    } else {
        solution = solve_exact(g, ExactOptions{args.threads});
    }
    json result;
    result["n"] = g.order();
    result["mode"] = mode;
    result["welfare"] = rational_json(solution.welfare);
    result["blocks"] = blocks_json(solution.partition);
    result["runtime_ms"] = elapsed_ms(start);
    out << result.dump() << '\n';
    return kOk;
}

int cmd_welfare(const std::string& graph_file, const std::string& partition_file, std::ostream& out) {
    const Graph g = read_edge_list(graph_file);
    std::ifstream in(partition_file);
    if (!in) throw FormatError("cannot open " + partition_file);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(partition_file + ": " + e.what());
    }
    const Partition p = parse_partition(doc);
    p.validate(g.order());

    json blocks = json::array();
    json utilities = json::array();
    Rational total;
    for (const Coalition& c : p.blocks()) {
        const Rational w = coalition_welfare(g, c);
        total += w;
        blocks.push_back({{"members", std::vector<Vertex>(c.begin(), c.end())}, {"welfare", rational_json(w)}});
    }
    std::vector<std::optional<Rational>> per_vertex(g.order());
    for (const Coalition& c : p.blocks()) {
        for (Vertex v : c) per_vertex[v] = utility(g, v, c);
    }
    for (Vertex v = 0; v < g.order(); ++v) utilities.push_back({{"vertex", v}, {"utility", rational_json(*per_vertex[v])}});

    json result;
    result["n"] = g.order();
    result["welfare"] = rational_json(total);
    result["average_welfare"] = rational_json(total / Rational(static_cast<long long>(g.order())));
    result["blocks"] = std::move(blocks);
    result["utilities"] = std::move(utilities);
    out << result.dump() << '\n';
    return kOk;
}

struct ReduceArgs {
    std::string input;
    std::string output;
    bool verify = false;
    unsigned threads = 0;
};

void write_gadget(const GadgetGraph& gadget, const std::string& prefix) {
    const std::string edges_path = prefix + ".edges";
    std::ofstream edges(edges_path);
    if (!edges) throw FormatError("cannot write " + edges_path);
    write_edge_list(edges, gadget.graph);

    json labels = json::object();
    json literals = json::array();
    for (std::size_t i = 0; i < gadget.literal_vertices.size(); ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            literals.push_back({{"vertex", gadget.literal_vertices[i][j]}, {"variable", i + 1}, {"occurrence", j + 1}});
        }
    }
    json clauses = json::array();
    for (std::size_t j = 0; j < gadget.clause_vertices.size(); ++j) {
        clauses.push_back({{"clause", j + 1},
                           {"vertices", gadget.clause_vertices[j]},
                           {"members", gadget.clause_members[j]}});
    }
    labels["literal_vertices"] = std::move(literals);
    labels["clause_vertices"] = std::move(clauses);
    const std::string labels_path = prefix + ".labels.json";
    std::ofstream label_file(labels_path);
    if (!label_file) throw FormatError("cannot write " + labels_path);
    label_file << labels.dump(2) << '\n';
}

int cmd_reduce(const ReduceArgs& args, std::ostream& out) {
    const XsatInstance instance = read_xsat(args.input);
    const GadgetGraph gadget = build_gadget(instance);
    if (!args.output.empty()) write_gadget(gadget, args.output);

    json result;
    result["variables"] = instance.variable_count;
    result["clauses"] = instance.clauses.size();
    result["vertices"] = gadget.graph.order();
    result["edges"] = gadget.graph.size();
    result["threshold"] = rational_json(threshold_welfare(instance.variable_count));
    if (!args.output.empty()) {
        result["files"] = {args.output + ".edges", args.output + ".labels.json"};
    }
    if (args.verify) {
        std::optional<Assignment> assignment;
        bool searched = false;
        try {
            assignment = find_exact_assignment(instance);
            searched = true;
        } catch (const SizeLimitError&) {
        }
        const ThresholdReport report = verify_threshold(gadget, assignment, ExactOptions{args.threads});
        result["verify_mode"] = report.mode == ThresholdReport::Mode::Exact ? "exact" : "forward";
        if (searched) {
            result["satisfiable"] = assignment.has_value();
        } else {
            result["satisfiable"] = nullptr;
        }
        if (assignment) {
            std::vector<std::size_t> true_variables;
            for (std::size_t i = 0; i < assignment->size(); ++i) {
                if ((*assignment)[i]) true_variables.push_back(i + 1);
            }
            result["true_variables"] = true_variables;
            result["certified_welfare"] = rational_json(*report.certified_welfare);
            result["certified_equals_threshold"] = *report.certified_welfare == report.threshold;
        }
        if (report.optimum) {
            result["optimum"] = rational_json(report.optimum->welfare);
            result["optimum_blocks"] = blocks_json(report.optimum->partition);
            result["optimum_equals_threshold"] = *report.optimum_equals_threshold;
        }
        if (!report.note.empty()) result["note"] = report.note;
    }
    out << result.dump() << '\n';
    return kOk;
}

struct BenchArgs {
    std::vector<std::size_t> sizes;
    std::uint64_t seed = 1;
};

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
    if (args.sizes.empty()) return kOk;
    out << "n,runtime_ms\n";
    std::vector<double> runtimes;
    for (std::size_t k = 0; k < args.sizes.size(); ++k) {
        const std::size_t n = args.sizes[k];
        const Tree tree = random_tree(n, args.seed + k);
        const auto start = Clock::now();
        const Solution solution = solve_tree(tree);
        const double ms = elapsed_ms(start);
        runtimes.push_back(ms);
        out << n << ',' << ms << '\n';
        (void)solution;
    }
    for (std::size_t k = 1; k < args.sizes.size(); ++k) {
        const double size_ratio = static_cast<double>(args.sizes[k]) / static_cast<double>(args.sizes[k - 1]);
        if (size_ratio < 2.0 || runtimes[k - 1] <= 0.0) continue;
        const double time_ratio = runtimes[k] / runtimes[k - 1];
        // n log n growth with a 10x size step stays well under 15x.
        const double limit = size_ratio * 1.5;
        err << "scaling " << args.sizes[k - 1] << " -> " << args.sizes[k] << ": runtime ratio " << time_ratio
            << (time_ratio <= limit ? " (near-linear)" : " (super-linear)") << '\n';
    }
    return kOk;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maximum social welfare partitions of graphs"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Optimal partition of the graph in an edge-list file");
    solve->add_option("input", solve_args.input, "Edge-list file")->required();
    solve->add_option("--mode", solve_args.mode, "Solver: auto, tree, path or exact")
        ->check(CLI::IsMember({"auto", "tree", "path", "exact"}));
    solve->add_option("--threads", solve_args.threads, "Workers for exact block weights (0 = all cores)");

    std::string welfare_graph;
    std::string welfare_partition;
    auto* welfare_cmd = app.add_subcommand("welfare", "Welfare report of a given partition");
    welfare_cmd->add_option("graph", welfare_graph, "Edge-list file")->required();
    welfare_cmd->add_option("partition", welfare_partition, "Partition JSON (array of blocks or solve output)")
        ->required();

    ReduceArgs reduce_args;
    auto* reduce = app.add_subcommand("reduce", "Build the welfare gadget of an exact-1-in-3 SAT instance");
    reduce->add_option("input", reduce_args.input, "Instance file ('p xsat n m' header)")->required();
    reduce->add_option("--output", reduce_args.output, "Write <prefix>.edges and <prefix>.labels.json");
    reduce->add_flag("--verify", reduce_args.verify, "Check the welfare threshold");
    reduce->add_option("--threads", reduce_args.threads, "Workers for exact block weights (0 = all cores)");

    BenchArgs bench_args;
    std::string sizes_text;
    auto* bench = app.add_subcommand("bench", "Time the tree solver on random trees, CSV output");
    bench->add_option("--sizes", sizes_text, "Comma-separated tree sizes");
    bench->add_option("--seed", bench_args.seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*solve) return cmd_solve(solve_args, out);
        if (*welfare_cmd) return cmd_welfare(welfare_graph, welfare_partition, out);
        if (*reduce) return cmd_reduce(reduce_args, out);
        if (*bench) {
            std::stringstream fields(sizes_text);
            for (std::string token; std::getline(fields, token, ',');) {
                if (token.empty()) continue;
                std::size_t used = 0;
                unsigned long long n = 0;
                try {
                    n = std::stoull(token, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != token.size() || n == 0) {
                    err << "error: invalid size '" << token << "'\n";
                    return kUsage;
                }
                bench_args.sizes.push_back(static_cast<std::size_t>(n));
            }
            return cmd_bench(bench_args, out, err);
        }
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kTooLarge;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kUsage;
}

}  // namespace maxswp::cli
