#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace dpcolor
{

class parse_error : public std::runtime_error
{
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"), offset_(offset)
    {
    }
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// graph6 short form: one header byte n+63, then the upper triangle in column
// order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, each plus 63.

inline SimpleGraph parse_graph6(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    std::size_t pos = 0;
    if (text.starts_with(">>graph6<<"))
        pos = 10;
    if (pos >= text.size())
        throw parse_error("graph6: missing header byte", pos);
    int header = static_cast<unsigned char>(text[pos]);
    if (header == 126)
        throw parse_error("graph6: long form (n > 62) is not supported", pos);
    if (header < 63 || header > 125)
        throw parse_error("graph6: invalid header byte", pos);
    const int n = header - 63;
    ++pos;

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos < bytes)
        throw parse_error("graph6: insufficient payload for n=" + std::to_string(n), text.size());
    if (text.size() - pos > bytes)
        throw parse_error("graph6: trailing bytes after payload", pos + bytes);

    std::vector<vertex_set> adj(n, 0);
    std::size_t k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            std::size_t at = pos + k / 6;
            int byte = static_cast<unsigned char>(text[at]);
            if (byte < 63 || byte > 126)
                throw parse_error("graph6: invalid payload byte", at);
            if ((byte - 63) >> (5 - k % 6) & 1) {
                adj[u] |= bit(v);
                adj[v] |= bit(u);
            }
        }
    }
    // padding bits must be zero
    if (bits % 6 != 0) {
        std::size_t at = pos + bytes - 1;
        int byte = static_cast<unsigned char>(text[at]) - 63;
        if (byte & ((1 << (6 - bits % 6)) - 1))
            throw parse_error("graph6: nonzero padding bits", at);
    }
    return SimpleGraph::from_adjacency(std::move(adj));
}

inline std::string emit_graph6(const SimpleGraph& g)
{
    const int n = g.n();
    if (n > 62)
        throw contract_violation("emit_graph6: n = " + std::to_string(n) + " exceeds the short form limit 62");
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0, filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    if (filled)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

} // namespace dpcolor
