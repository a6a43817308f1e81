#ifndef MAXSWP_REDUCTION_HPP
#define MAXSWP_REDUCTION_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "maxswp/graph.hpp"
#include "maxswp/oracle_solver.hpp"
#include "maxswp/welfare.hpp"

namespace maxswp {

/// Monotone exact-1-in-3 SAT instance in which every variable occurs in
/// exactly three clauses (so there are as many clauses as variables).
/// Variables are 0-based in memory and 1-based in files.
struct XsatInstance {
    std::size_t variable_count = 0;
    std::vector<std::array<std::uint32_t, 3>> clauses;

    /// Throws PreconditionError naming the first violated constraint.
    void validate() const;

    friend bool operator==(const XsatInstance&, const XsatInstance&) = default;
};

// Instance file format:
//   p xsat <n> <m>
//   a b c      (m lines, one-based variable ids)
// Blank lines and lines starting with '#' or 'c' are ignored.

/// Throws FormatError on malformed text or an invalid instance.
XsatInstance read_xsat(std::istream& in);
XsatInstance read_xsat(const std::filesystem::path& path);
void write_xsat(std::ostream& out, const XsatInstance& instance);

/// The 4-regular graph built from an instance.
///
/// Variable i owns a triangle of occurrence vertices; its j-th occurrence in
/// clause order is literal_vertices[i][j]. Clause j owns an adjacent pair of
/// clause vertices, each joined to the clause's three occurrence vertices, so
/// every clause gadget is a triple triangle.
struct GadgetGraph {
    Graph graph;
    XsatInstance instance;
    std::vector<std::array<Vertex, 3>> literal_vertices;  ///< [variable][occurrence]
    std::vector<std::array<Vertex, 2>> clause_vertices;   ///< [clause]
    std::vector<std::array<Vertex, 3>> clause_members;    ///< occurrence vertices of each clause, in clause order
};

GadgetGraph build_gadget(const XsatInstance& instance);

using Assignment = std::vector<bool>;

/// Empty when every clause has exactly one true variable, otherwise a message
/// naming the first violated clause (1-based).
std::optional<std::string> exact_assignment_violation(const XsatInstance& instance, const Assignment& assignment);

/// Exhaustive search over all 2^n assignments. Throws SizeLimitError for n > 30.
std::optional<Assignment> find_exact_assignment(const XsatInstance& instance);

/// True variables keep their triangle; each clause pair absorbs its two false
/// occurrence vertices into a double triangle. Throws PreconditionError when
/// the assignment is not exactly-one satisfying.
Partition assignment_to_partition(const GadgetGraph& gadget, const Assignment& assignment);

/// 41n/12 for an instance with n variables.
Rational threshold_welfare(std::size_t variable_count);

struct ThresholdReport {
    enum class Mode { Exact, Forward };

    Mode mode = Mode::Forward;
    Rational threshold;
    std::optional<Solution> optimum;               ///< Exact mode only
    std::optional<bool> optimum_equals_threshold;  ///< Exact mode only
    std::optional<Rational> certified_welfare;     ///< welfare of the given assignment's partition
    std::string note;
};

/// Exact mode (5n <= 20): run the exact solver on the gadget and compare its
/// optimum with 41n/12. Forward mode otherwise: only certify `assignment`,
/// if one is given. A given assignment is certified in both modes.
ThresholdReport verify_threshold(const GadgetGraph& gadget, const std::optional<Assignment>& assignment = std::nullopt,
                                 ExactOptions options = {});

/// Every instance on n variables, clauses listed as sorted triples in
/// non-decreasing order (one representative per clause multiset).
std::vector<XsatInstance> enumerate_instances(std::size_t variable_count);

/// First instance with no exact assignment among enumerate_instances(n) for
/// n = 3..max_variables.
std::optional<XsatInstance> find_unsatisfiable_instance(std::size_t max_variables);

}  // namespace maxswp

#endif  // MAXSWP_REDUCTION_HPP
