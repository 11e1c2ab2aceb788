#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solver.hpp"

namespace dpcolor
{

enum class BlockShape { clique, cycle, other };

inline const char* to_string(BlockShape s)
{
    switch (s) {
    case BlockShape::clique: return "clique";
    case BlockShape::cycle: return "cycle";
    default: return "other";
    }
}

/// Cliques take precedence, so a triangle is tagged clique.
inline BlockShape classify_block(const SimpleGraph& g, vertex_set block)
{
    if (is_clique(g, block))
        return BlockShape::clique;
    if (is_cycle(g, block))
        return BlockShape::cycle;
    return BlockShape::other;
}

struct CertifiedBlock {
    vertex_set vertices = 0;
    BlockShape shape = BlockShape::other;
};

struct MatchingCheck {
    vertex u = 0;
    vertex v = 0;
    bool perfect = false;
};

/// Outcome of coloring a degree cover. An uncolorable verdict carries the
/// structure forced on (G, H): G is a GDP-tree, every list has exactly deg(u)
/// colors, and adjacent non-cut vertices are joined by perfect matchings.
struct GDPCertificate {
    bool colorable = false;
    std::optional<PartialColoring> coloring;
    std::vector<CertifiedBlock> blocks;
    vertex_set cut_vertices = 0;
    bool lists_equal_degrees = false;
    std::vector<MatchingCheck> non_cut_pairs;
};

inline bool is_perfect_matching(const Cover& c, vertex u, vertex v)
{
    auto pairs = c.matching(u, v);
    return c.list_size(u) == c.list_size(v) && static_cast<int>(pairs.size()) == c.list_size(u);
}

inline GDPCertificate color_degree_cover(const Cover& c)
{
    const SimpleGraph& g = c.graph();
    if (c.is_multigraph())
        throw contract_violation("color_degree_cover: simple graphs only");
    if (!g.connected() || g.n() == 0)
        throw contract_violation("color_degree_cover: graph must be connected and nonempty");
    for (int u = 0; u < g.n(); ++u)
        if (c.list_size(u) < g.degree(u))
            throw contract_violation("color_degree_cover: |L(" + std::to_string(u) + ")| < deg");

    GDPCertificate cert;
    if (auto col = find_coloring(c, g.vertices())) {
        cert.colorable = true;
        cert.coloring = std::move(col);
        return cert;
    }
    auto bd = block_decomposition(g);
    cert.cut_vertices = bd.cut_vertices;
    for (vertex_set b : bd.blocks)
        cert.blocks.push_back({b, classify_block(g, b)});
    cert.lists_equal_degrees = true;
    for (int u = 0; u < g.n(); ++u)
        cert.lists_equal_degrees = cert.lists_equal_degrees && c.list_size(u) == g.degree(u);
    for (auto [u, v] : g.edges())
        if (!(bd.cut_vertices >> u & 1) && !(bd.cut_vertices >> v & 1))
            cert.non_cut_pairs.push_back({u, v, is_perfect_matching(c, u, v)});
    return cert;
}

/// Re-checks a certificate against the cover alone, without trusting the
/// solver. nullopt means every claim holds.
inline std::optional<std::string> verify_gdp_certificate(const Cover& c, const GDPCertificate& cert)
{
    const SimpleGraph& g = c.graph();
    if (cert.colorable) {
        if (!cert.coloring)
            return "colorable verdict without a coloring";
        if (cert.coloring->dom() != g.vertices())
            return "coloring does not cover every vertex";
        if (auto bad = check_partial_coloring(c, *cert.coloring))
            return "coloring invalid: " + *bad;
        return std::nullopt;
    }
    if (!g.connected())
        return "graph is not connected";

    // Blocks: each edge in exactly one block, every block a clique or cycle,
    // and the claimed cut vertices are exactly the vertices in two or more blocks.
    std::vector<int> owner_count(g.n(), 0);
    std::vector<int> edge_owners(static_cast<std::size_t>(g.n()) * g.n(), 0);
    for (const auto& b : cert.blocks) {
        if (b.shape == BlockShape::clique && !is_clique(g, b.vertices))
            return "block tagged clique is not a clique";
        if (b.shape == BlockShape::cycle && !is_cycle(g, b.vertices))
            return "block tagged cycle is not a cycle";
        if (b.shape == BlockShape::other)
            return "block is neither a clique nor a cycle";
        for_each_bit(b.vertices, [&](int u) {
            ++owner_count[u];
            for_each_bit(g.neighbors(u) & b.vertices, [&](int v) { ++edge_owners[u * g.n() + v]; });
        });
    }
    for (auto [u, v] : g.edges())
        if (edge_owners[u * g.n() + v] != 1)
            return "edge (" + std::to_string(u) + "," + std::to_string(v) + ") is not in exactly one block";
    for (int u = 0; u < g.n(); ++u) {
        if (owner_count[u] == 0)
            return "vertex " + std::to_string(u) + " lies in no block";
        bool cut = owner_count[u] >= 2;
        if (cut != bool(cert.cut_vertices >> u & 1))
            return "cut vertex set mismatch at vertex " + std::to_string(u);
        if (cut && g.components(g.vertices() & ~bit(u)).size() < 2)
            return "vertex " + std::to_string(u) + " is not a cut vertex";
    }

    for (int u = 0; u < g.n(); ++u)
        if (c.list_size(u) != g.degree(u))
            return "|L(" + std::to_string(u) + ")| != deg(" + std::to_string(u) + ")";
    if (!cert.lists_equal_degrees)
        return "certificate reports unequal list sizes";

    std::size_t expected_pairs = 0;
    for (auto [u, v] : g.edges()) {
        if (cert.cut_vertices >> u & 1 || cert.cut_vertices >> v & 1)
            continue;
        ++expected_pairs;
        if (!is_perfect_matching(c, u, v))
            return "matching between non-cut vertices " + std::to_string(u) + " and " + std::to_string(v) +
                   " is not perfect";
    }
    if (expected_pairs != cert.non_cut_pairs.size())
        return "certificate lists the wrong set of non-cut pairs";
    for (const auto& pc : cert.non_cut_pairs)
        if (!pc.perfect)
            return "certificate records an imperfect non-cut matching";
    return std::nullopt;
}

} // namespace dpcolor
