#include "maxswp/edge_list.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "maxswp/errors.hpp"

namespace maxswp {

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

std::vector<unsigned long long> parse_numbers(const std::string& line, std::size_t expected, std::size_t line_no) {
    std::istringstream fields(line);
    std::vector<unsigned long long> values;
    std::string token;
    while (fields >> token) {
        if (token.find_first_not_of("0123456789") != std::string::npos) {
            throw FormatError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" + token +
                              "'");
        }
        try {
            values.push_back(std::stoull(token));
        } catch (const std::out_of_range&) {
            throw FormatError("line " + std::to_string(line_no) + ": integer out of range");
        }
    }
    if (values.size() != expected) {
        throw FormatError("line " + std::to_string(line_no) + ": expected " + std::to_string(expected) +
                          " integers, got " + std::to_string(values.size()));
    }
    return values;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!next_content_line(in, line, line_no)) throw FormatError("missing header line 'n m'");
    const auto header = parse_numbers(line, 2, line_no);
    constexpr auto kMaxVertices = static_cast<unsigned long long>(std::numeric_limits<Vertex>::max());
    if (header[0] > kMaxVertices) throw FormatError("vertex count too large");
    const std::size_t n = header[0];
    const std::size_t m = header[1];

    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_content_line(in, line, line_no)) {
            throw FormatError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        }
        const auto uv = parse_numbers(line, 2, line_no);
        if (uv[0] >= n || uv[1] >= n) {
            throw FormatError("line " + std::to_string(line_no) + ": vertex id out of range 0.." +
                              std::to_string(n) + "-1");
        }
        edges.push_back({static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])});
    }
    if (next_content_line(in, line, line_no)) {
        throw FormatError("line " + std::to_string(line_no) + ": unexpected content after " + std::to_string(m) +
                          " edges");
    }
    try {
        return Graph(n, edges);
    } catch (const PreconditionError& e) {
        throw FormatError(e.what());
    }
}

Graph read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace maxswp
