#include "maxswp/reduction.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "maxswp/errors.hpp"

namespace maxswp {

void XsatInstance::validate() const {
    if (variable_count == 0) throw PreconditionError("instance has no variables");
    std::vector<std::size_t> occurrences(variable_count, 0);
    for (std::size_t j = 0; j < clauses.size(); ++j) {
        const auto& clause = clauses[j];
        for (std::uint32_t x : clause) {
            if (x >= variable_count) {
                throw PreconditionError("clause " + std::to_string(j + 1) + " references variable " +
                                        std::to_string(x + 1) + " outside 1.." + std::to_string(variable_count));
            }
            ++occurrences[x];
        }
        if (clause[0] == clause[1] || clause[1] == clause[2] || clause[0] == clause[2]) {
            throw PreconditionError("clause " + std::to_string(j + 1) + " repeats a variable");
        }
    }
    for (std::size_t i = 0; i < variable_count; ++i) {
        if (occurrences[i] != 3) {
            throw PreconditionError("variable " + std::to_string(i + 1) + " occurs " + std::to_string(occurrences[i]) +
                                    " times, expected exactly 3");
        }
    }
}

XsatInstance read_xsat(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> declared_clauses;
    XsatInstance instance;
    auto fail = [&](const std::string& what) { throw FormatError("line " + std::to_string(line_no) + ": " + what); };
    auto parse_count = [&](const std::string& token) -> std::size_t {
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
            fail("expected a non-negative integer, got '" + token + "'");
        }
        try {
            return std::stoul(token);
        } catch (const std::out_of_range&) {
            fail("integer out of range");
        }
        return 0;
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;) tokens.push_back(t);
        if (tokens.empty() || tokens[0][0] == '#' || tokens[0] == "c") continue;

        if (!declared_clauses) {
            if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "xsat") fail("expected header 'p xsat n m'");
            instance.variable_count = parse_count(tokens[2]);
            declared_clauses = parse_count(tokens[3]);
            continue;
        }
        if (tokens.size() != 3) fail("expected three variable ids");
        std::array<std::uint32_t, 3> clause{};
        for (std::size_t k = 0; k < 3; ++k) {
            const std::size_t id = parse_count(tokens[k]);
            if (id < 1 || id > instance.variable_count) fail("variable id " + tokens[k] + " outside 1..n");
            clause[k] = static_cast<std::uint32_t>(id - 1);
        }
        instance.clauses.push_back(clause);
    }
    if (!declared_clauses) throw FormatError("missing header 'p xsat n m'");
    if (instance.clauses.size() != *declared_clauses) {
        throw FormatError("header declares " + std::to_string(*declared_clauses) + " clauses, found " +
                          std::to_string(instance.clauses.size()));
    }
    try {
        instance.validate();
    } catch (const PreconditionError& e) {
        throw FormatError(e.what());
    }
    return instance;
}

XsatInstance read_xsat(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    return read_xsat(in);
}

void write_xsat(std::ostream& out, const XsatInstance& instance) {
    out << "p xsat " << instance.variable_count << ' ' << instance.clauses.size() << '\n';
    for (const auto& clause : instance.clauses) {
        out << clause[0] + 1 << ' ' << clause[1] + 1 << ' ' << clause[2] + 1 << '\n';
    }
}

GadgetGraph build_gadget(const XsatInstance& instance) {
    instance.validate();
    const std::size_t n = instance.variable_count;
    const std::size_t m = instance.clauses.size();

    GadgetGraph gadget;
    gadget.instance = instance;
    gadget.literal_vertices.resize(n);
    gadget.clause_vertices.resize(m);
    gadget.clause_members.resize(m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < 3; ++j) gadget.literal_vertices[i][j] = static_cast<Vertex>(3 * i + j);
    }
    for (std::size_t j = 0; j < m; ++j) {
        gadget.clause_vertices[j] = {static_cast<Vertex>(3 * n + 2 * j), static_cast<Vertex>(3 * n + 2 * j + 1)};
    }

    std::vector<Edge> edges;
    edges.reserve(10 * n);
    for (const auto& tri : gadget.literal_vertices) {
        edges.push_back({tri[0], tri[1]});
        edges.push_back({tri[1], tri[2]});
        edges.push_back({tri[2], tri[0]});
    }
    std::vector<std::size_t> seen(n, 0);
    for (std::size_t j = 0; j < m; ++j) {
        const auto [s1, s2] = gadget.clause_vertices[j];
        edges.push_back({s1, s2});
        for (std::size_t k = 0; k < 3; ++k) {
            const std::uint32_t x = instance.clauses[j][k];
            const Vertex occurrence = gadget.literal_vertices[x][seen[x]++];
            gadget.clause_members[j][k] = occurrence;
            edges.push_back({occurrence, s1});
            edges.push_back({occurrence, s2});
        }
    }
    gadget.graph = Graph(3 * n + 2 * m, edges);
    return gadget;
}

std::optional<std::string> exact_assignment_violation(const XsatInstance& instance, const Assignment& assignment) {
    if (assignment.size() != instance.variable_count) {
        return "assignment has " + std::to_string(assignment.size()) + " values for " +
               std::to_string(instance.variable_count) + " variables";
    }
    for (std::size_t j = 0; j < instance.clauses.size(); ++j) {
        const auto& clause = instance.clauses[j];
        const int true_count = assignment[clause[0]] + assignment[clause[1]] + assignment[clause[2]];
        if (true_count != 1) {
            return "clause " + std::to_string(j + 1) + " has " + std::to_string(true_count) +
                   " true variables, expected exactly 1";
        }
    }
    return std::nullopt;
}

std::optional<Assignment> find_exact_assignment(const XsatInstance& instance) {
    const std::size_t n = instance.variable_count;
    if (n > 30) throw SizeLimitError("exhaustive assignment search is limited to 30 variables");
    Assignment assignment(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        for (std::size_t i = 0; i < n; ++i) assignment[i] = (bits >> i) & 1U;
        if (!exact_assignment_violation(instance, assignment)) return assignment;
    }
    return std::nullopt;
}

Partition assignment_to_partition(const GadgetGraph& gadget, const Assignment& assignment) {
    if (auto violation = exact_assignment_violation(gadget.instance, assignment)) throw PreconditionError(*violation);
    std::vector<Coalition> blocks;
    for (std::size_t i = 0; i < gadget.literal_vertices.size(); ++i) {
        if (assignment[i]) {
            const auto& tri = gadget.literal_vertices[i];
            blocks.push_back(Coalition{tri[0], tri[1], tri[2]});
        }
    }
    for (std::size_t j = 0; j < gadget.clause_vertices.size(); ++j) {
        std::vector<Vertex> members{gadget.clause_vertices[j][0], gadget.clause_vertices[j][1]};
        for (std::size_t k = 0; k < 3; ++k) {
            if (!assignment[gadget.instance.clauses[j][k]]) members.push_back(gadget.clause_members[j][k]);
        }
        blocks.emplace_back(std::move(members));
    }
    return Partition(std::move(blocks)).canonical();
}

Rational threshold_welfare(std::size_t variable_count) {
    return Rational(41 * static_cast<Rational::Int>(variable_count), 12);
}

ThresholdReport verify_threshold(const GadgetGraph& gadget, const std::optional<Assignment>& assignment,
                                 ExactOptions options) {
    ThresholdReport report;
    report.threshold = threshold_welfare(gadget.instance.variable_count);
    if (assignment) report.certified_welfare = welfare(gadget.graph, assignment_to_partition(gadget, *assignment));

    if (gadget.graph.order() <= kMaxExactOrder) {
        report.mode = ThresholdReport::Mode::Exact;
        report.optimum = solve_exact(gadget.graph, options);
        report.optimum_equals_threshold = report.optimum->welfare == report.threshold;
        if (report.optimum->welfare > report.threshold) report.note = "optimum exceeds the threshold";
    } else {
        report.mode = ThresholdReport::Mode::Forward;
        report.note = "gadget has " + std::to_string(gadget.graph.order()) + " vertices; exact optimum needs <= " +
                      std::to_string(kMaxExactOrder) + ", only the forward direction was checked";
    }
    return report;
}

std::vector<XsatInstance> enumerate_instances(std::size_t variable_count) {
    const std::size_t n = variable_count;
    std::vector<std::array<std::uint32_t, 3>> triples;
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = a + 1; b < n; ++b) {
            for (std::uint32_t c = b + 1; c < n; ++c) triples.push_back({a, b, c});
        }
    }
    std::vector<XsatInstance> found;
    std::vector<std::size_t> count(n, 0);
    XsatInstance current{n, {}};
    auto extend = [&](auto&& self, std::size_t first) -> void {
        if (current.clauses.size() == n) {
            if (std::all_of(count.begin(), count.end(), [](std::size_t c) { return c == 3; })) found.push_back(current);
            return;
        }
        for (std::size_t t = first; t < triples.size(); ++t) {
            const auto& tri = triples[t];
            if (count[tri[0]] == 3 || count[tri[1]] == 3 || count[tri[2]] == 3) continue;
            // Variables below tri[0] can never be covered again: clauses are non-decreasing.
            bool starved = false;
            for (std::uint32_t x = 0; x < tri[0]; ++x) starved = starved || count[x] != 3;
            if (starved) break;
            for (std::uint32_t x : tri) ++count[x];
            current.clauses.push_back(tri);
            self(self, t);
            current.clauses.pop_back();
            for (std::uint32_t x : tri) --count[x];
        }
    };
    if (n >= 3) extend(extend, 0);
    return found;
}

std::optional<XsatInstance> find_unsatisfiable_instance(std::size_t max_variables) {
    for (std::size_t n = 3; n <= max_variables; ++n) {
        for (const XsatInstance& instance : enumerate_instances(n)) {
            if (!find_exact_assignment(instance)) return instance;
        }
    }
    return std::nullopt;
}

}  // namespace maxswp
