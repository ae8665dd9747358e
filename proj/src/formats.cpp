#include "reedlab/formats.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "reedlab/errors.hpp"

namespace reedlab {

namespace {

std::vector<std::string> split_lines(std::string_view text)
{
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    for (auto& line : lines)
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
    return lines;
}

bool blank(const std::string& line)
{
    return line.find_first_not_of(" \t") == std::string::npos;
}

void check_endpoint(long v, long n, std::size_t line_no)
{
    if (v < 0 || v >= n)
        throw ParseError("vertex id " + std::to_string(v) + " out of range",
                         ParseError::Position::LineNumber, line_no);
}

} // namespace

Graph parse_dimacs(std::string_view text)
{
    long n = -1;
    std::vector<std::pair<int, int>> edges;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const std::string& line = lines[i];
        if (blank(line) || line[0] == 'c')
            continue;
        std::istringstream in(line);
        std::string tag;
        in >> tag;
        if (tag == "p") {
            if (n >= 0)
                throw ParseError("duplicate problem line", ParseError::Position::LineNumber,
                                 line_no);
            std::string kind;
            long m = 0;
            if (!(in >> kind >> n >> m) || kind != "edge" || n < 0)
                throw ParseError("malformed problem line", ParseError::Position::LineNumber,
                                 line_no);
        } else if (tag == "e") {
            if (n < 0)
                throw ParseError("edge before problem line", ParseError::Position::LineNumber,
                                 line_no);
            long u = 0, v = 0;
            if (!(in >> u >> v))
                throw ParseError("malformed edge line", ParseError::Position::LineNumber, line_no);
            // 1-based in the file
            check_endpoint(u - 1, n, line_no);
            check_endpoint(v - 1, n, line_no);
            if (u == v)
                throw ParseError("loop at vertex " + std::to_string(u),
                                 ParseError::Position::LineNumber, line_no);
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw ParseError("unrecognized line type '" + tag + "'",
                             ParseError::Position::LineNumber, line_no);
        }
    }
    if (n < 0)
        throw ParseError("missing problem line", ParseError::Position::LineNumber, lines.size());
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::string_view text)
{
    long n = -1;
    std::vector<std::pair<int, int>> edges;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const std::string& line = lines[i];
        if (blank(line))
            continue;
        std::istringstream in(line);
        if (n < 0) {
            if (!(in >> n) || n < 0)
                throw ParseError("malformed vertex count", ParseError::Position::LineNumber,
                                 line_no);
            std::string rest;
            if (in >> rest)
                throw ParseError("trailing tokens after vertex count",
                                 ParseError::Position::LineNumber, line_no);
            continue;
        }
        long u = 0, v = 0;
        if (!(in >> u >> v))
            throw ParseError("malformed edge line", ParseError::Position::LineNumber, line_no);
        check_endpoint(u, n, line_no);
        check_endpoint(v, n, line_no);
        if (u == v)
            throw ParseError("loop at vertex " + std::to_string(u),
                             ParseError::Position::LineNumber, line_no);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0)
        throw ParseError("missing vertex count", ParseError::Position::LineNumber, lines.size());
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_dimacs(const Graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges())
        out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

std::string emit_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.n() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

} // namespace reedlab
