#include "reedlab/graph6.hpp"

#include <cstdint>
#include <utility>
#include <vector>

#include "reedlab/errors.hpp"

namespace reedlab {

namespace {

constexpr int kBias = 63;
constexpr std::int64_t kShortMax = 62;
constexpr std::int64_t kMediumMax = 258047;        // 2^18 - 1
constexpr std::int64_t kLongMax = 68719476735ll;   // 2^36 - 1

int decode_byte(std::string_view s, std::size_t pos)
{
    if (pos >= s.size())
        throw ParseError("unexpected end of graph6 string", ParseError::Position::ByteOffset, pos);
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
        throw ParseError("byte outside graph6 alphabet", ParseError::Position::ByteOffset, pos);
    return c - kBias;
}

} // namespace

Graph parse_graph6(std::string_view line)
{
    // optional ">>graph6<<" prefix used by some tools
    constexpr std::string_view kPrefix = ">>graph6<<";
    if (line.substr(0, kPrefix.size()) == kPrefix)
        line.remove_prefix(kPrefix.size());
    if (line.empty())
        throw ParseError("empty graph6 string", ParseError::Position::ByteOffset, 0);

    std::size_t pos = 0;
    std::int64_t n = 0;
    if (line[0] != '~') {
        n = decode_byte(line, pos++);
    } else if (line.size() >= 2 && line[1] != '~') {
        ++pos;
        for (int i = 0; i < 3; ++i)
            n = (n << 6) | decode_byte(line, pos++);
    } else {
        pos += 2;
        for (int i = 0; i < 6; ++i)
            n = (n << 6) | decode_byte(line, pos++);
    }
    const std::int64_t bit_count = n * (n - 1) / 2;
    const std::size_t body_bytes = static_cast<std::size_t>((bit_count + 5) / 6);
    if (line.size() - pos < body_bytes)
        throw ParseError("truncated graph6 bit vector", ParseError::Position::ByteOffset,
                         line.size());
    if (line.size() - pos > body_bytes)
        throw ParseError("trailing bytes after graph6 bit vector", ParseError::Position::ByteOffset,
                         pos + body_bytes);

    std::vector<std::pair<int, int>> edges;
    std::int64_t bit_index = 0;
    int u = 0, v = 1;
    for (std::size_t i = 0; i < body_bytes; ++i) {
        int group = decode_byte(line, pos + i);
        for (int b = 5; b >= 0; --b, ++bit_index) {
            bool bit = (group >> b) & 1;
            if (bit_index >= bit_count) {
                if (bit)
                    throw ParseError("nonzero padding bits", ParseError::Position::ByteOffset,
                                     pos + i);
                continue;
            }
            if (bit)
                edges.emplace_back(u, v);
            if (++u == v) {
                u = 0;
                ++v;
            }
        }
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g)
{
    const std::int64_t n = g.n();
    if (n > kLongMax)
        throw std::invalid_argument("graph too large for graph6");

    std::string out;
    if (n <= kShortMax) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= kMediumMax) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }

    int group = 0;
    int bits_in_group = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bits_in_group == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                bits_in_group = 0;
            }
        }
    }
    if (bits_in_group > 0)
        out.push_back(static_cast<char>((group << (6 - bits_in_group)) + kBias));
    return out;
}

} // namespace reedlab
