#pragma once

#include <optional>
#include <vector>

#include "degree_cover.hpp"
#include "graph.hpp"

namespace dpcolor
{

/// Every block is a clique or an odd cycle.
inline bool is_gallai_forest(const SimpleGraph& g)
{
    for (vertex_set b : block_decomposition(g).blocks)
        if (!is_clique(g, b) && !(is_cycle(g, b) && popcount(b) % 2 == 1))
            return false;
    return true;
}

/// Every block is a clique or a cycle of any length.
inline bool is_gdp_forest(const SimpleGraph& g)
{
    for (vertex_set b : block_decomposition(g).blocks)
        if (classify_block(g, b) == BlockShape::other)
            return false;
    return true;
}

/// Sum over vertices of k - deg(u).
inline int gdp_deficiency(const SimpleGraph& f, int k)
{
    if (f.n() == 0)
        throw contract_violation("gdp_deficiency: graph must be nonempty");
    int s = 0;
    for (int u = 0; u < f.n(); ++u)
        s += k - f.degree(u);
    return s;
}

inline bool is_complete(const SimpleGraph& g) { return is_clique(g, g.vertices()); }

/// Partition witnessing membership in the k-Dirac family.
struct DiracWitness {
    int k = 0;
    std::vector<vertex> V1;
    std::vector<vertex> V2;
    std::pair<vertex, vertex> V3{-1, -1};
    /// (v in V1, its unique neighbor in V3), ordered by v.
    std::vector<std::pair<vertex, vertex>> attachment;
};

/// Exact membership test. For a candidate V3 = {x, y}, V2 must be the common
/// neighborhood of x and y and V1 the rest, so trying every non-adjacent pair
/// decides membership.
inline std::optional<DiracWitness> recognize_dirac(const SimpleGraph& g, int k)
{
    if (k < 3)
        throw contract_violation("recognize_dirac: k must be at least 3");
    const int n = g.n();
    if (n != 2 * k + 1)
        return std::nullopt;
    const int expected_m = k * (k - 1) / 2 + (k - 1) * (k - 2) / 2 + k + 2 * (k - 1);
    if (g.m() != expected_m)
        return std::nullopt;

    for (vertex x = 0; x < n; ++x)
        for (vertex y = x + 1; y < n; ++y) {
            if (g.adjacent(x, y))
                continue;
            const vertex_set V3 = bit(x) | bit(y);
            const vertex_set V2 = g.neighbors(x) & g.neighbors(y);
            const vertex_set V1 = g.vertices() & ~V2 & ~V3;
            if (popcount(V1) != k || popcount(V2) != k - 1)
                continue;
            if (!is_clique(g, V1) || !is_clique(g, V2))
                continue;
            bool ok = true;
            for_each_bit(V1, [&](int v) { ok = ok && popcount(g.neighbors(v) & V3) == 1 && !(g.neighbors(v) & V2); });
            if (!ok || !(g.neighbors(x) & V1) || !(g.neighbors(y) & V1))
                continue;
            // remaining edges are fixed by the six conditions; the edge count rules out extras
            DiracWitness w;
            w.k = k;
            w.V1 = to_vector(V1);
            w.V2 = to_vector(V2);
            w.V3 = {x, y};
            for (vertex v : w.V1)
                w.attachment.emplace_back(v, g.adjacent(v, x) ? x : y);
            return w;
        }
    return std::nullopt;
}

/// True iff w satisfies every condition of the k-Dirac definition on g.
inline bool check_dirac_witness(const SimpleGraph& g, const DiracWitness& w)
{
    const int k = w.k;
    if (k < 3 || static_cast<int>(w.V1.size()) != k || static_cast<int>(w.V2.size()) != k - 1)
        return false;
    auto [x, y] = w.V3;
    if (x < 0 || y < 0 || x >= g.n() || y >= g.n() || x == y)
        return false;
    const vertex_set V1 = from_vector(w.V1), V2 = from_vector(w.V2), V3 = bit(x) | bit(y);
    if (popcount(V1 | V2 | V3) != 2 * k + 1 || (V1 | V2 | V3) != g.vertices())
        return false;
    if (!is_clique(g, V1) || !is_clique(g, V2))
        return false;
    for (vertex v : w.V1)
        if (popcount(g.neighbors(v) & V3) != 1)
            return false;
    if (!(g.neighbors(x) & V1) || !(g.neighbors(y) & V1))
        return false;
    for (vertex v : w.V2)
        if ((g.neighbors(v) & V3) != V3)
            return false;
    // no other edges: count the allowed ones
    const int allowed = k * (k - 1) / 2 + (k - 1) * (k - 2) / 2 + k + 2 * (k - 1);
    return g.m() == allowed;
}

enum class BrickShape { clique, cycle };

/// Whether a brick may use fewer parallel edges than the multigraph has.
enum class BrickReading {
    sub_multiplicity, ///< each used pair needs multiplicity >= the brick's
    exact_multiplicity ///< each used pair needs multiplicity == the brick's
};

struct BrickWitness {
    vertex_set vertices = 0;
    BrickShape shape = BrickShape::clique;
    int multiplicity = 0;
    /// Cyclic vertex order for cycle bricks; sorted vertices for cliques.
    std::vector<vertex> order;
};

namespace detail
{
inline bool hamiltonian_cycle(const std::vector<vertex_set>& adj, vertex_set S, std::vector<vertex>& path,
                              vertex_set used)
{
    const vertex start = path.front(), last = path.back();
    if (used == S)
        return adj[last] >> start & 1;
    vertex_set options = adj[last] & S & ~used;
    while (options) {
        int v = std::countr_zero(options);
        options &= options - 1;
        path.push_back(v);
        if (hamiltonian_cycle(adj, S, path, used | bit(v)))
            return true;
        path.pop_back();
    }
    return false;
}
} // namespace detail

/// Searches for a k-brick subgraph: a clique K_s with uniform multiplicity
/// k/(s-1), or a cycle with uniform multiplicity k/2.
inline std::optional<BrickWitness> find_brick(const MultiGraph& g, int k,
                                              BrickReading reading = BrickReading::sub_multiplicity)
{
    if (k < 3)
        throw contract_violation("find_brick: k must be at least 3");
    const int n = g.n();
    if (n > 20)
        throw contract_violation("find_brick: subset search limited to 20 vertices");

    auto usable = [&](int mu) {
        std::vector<vertex_set> adj(n, 0);
        for (auto [u, v, t] : g.edges())
            if (reading == BrickReading::sub_multiplicity ? t >= mu : t == mu) {
                adj[u] |= bit(v);
                adj[v] |= bit(u);
            }
        return adj;
    };

    for (int s = 2; s <= n; ++s) {
        for (vertex_set S = 0; S < (vertex_set{1} << n); ++S) {
            if (popcount(S) != s)
                continue;
            if (k % (s - 1) == 0) {
                auto adj = usable(k / (s - 1));
                bool clique = true;
                for_each_bit(S, [&](int u) { clique = clique && ((adj[u] | bit(u)) & S) == S; });
                if (clique)
                    return BrickWitness{S, BrickShape::clique, k / (s - 1), to_vector(S)};
            }
            if (s >= 4 && k % 2 == 0) {
                auto adj = usable(k / 2);
                std::vector<vertex> path{std::countr_zero(S)};
                if (detail::hamiltonian_cycle(adj, S, path, bit(path.front())))
                    return BrickWitness{S, BrickShape::cycle, k / 2, path};
            }
        }
    }
    return std::nullopt;
}

} // namespace dpcolor
