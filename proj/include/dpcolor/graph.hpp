#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace dpcolor
{

using vertex = int;

/// Bitmask over vertices [0, 64). Graphs in this library never exceed 64 vertices.
using vertex_set = std::uint64_t;

inline constexpr int max_vertices = 64;

inline constexpr vertex_set bit(int i) { return vertex_set{1} << i; }
inline constexpr vertex_set all_below(int n) { return n >= 64 ? ~vertex_set{0} : bit(n) - 1; }
inline int popcount(vertex_set s) { return std::popcount(s); }

template <typename F>
inline void for_each_bit(vertex_set s, F&& f)
{
    while (s) {
        int i = std::countr_zero(s);
        s &= s - 1;
        f(i);
    }
}

inline std::vector<vertex> to_vector(vertex_set s)
{
    std::vector<vertex> out;
    for_each_bit(s, [&](int i) { out.push_back(i); });
    return out;
}

inline vertex_set from_vector(const std::vector<vertex>& vs)
{
    vertex_set s = 0;
    for (vertex v : vs)
        s |= bit(v);
    return s;
}

/// Thrown when a caller breaks an operation's precondition.
class contract_violation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// Simple undirected graph on vertices [0, n). Immutable after construction.
class SimpleGraph
{
public:
    SimpleGraph() = default;

    explicit SimpleGraph(int n, const std::vector<std::pair<vertex, vertex>>& edges = {})
        : n_(n)
    {
        if (n < 0 || n > max_vertices)
            throw contract_violation("SimpleGraph: vertex count out of range: " + std::to_string(n));
        adj_.assign(n, 0);
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw contract_violation("SimpleGraph: edge endpoint out of range");
            if (u == v)
                throw contract_violation("SimpleGraph: loop at vertex " + std::to_string(u));
            adj_[u] |= bit(v);
            adj_[v] |= bit(u);
        }
        finish();
    }

    static SimpleGraph from_adjacency(std::vector<vertex_set> adj)
    {
        SimpleGraph g;
        g.n_ = static_cast<int>(adj.size());
        if (g.n_ > max_vertices)
            throw contract_violation("SimpleGraph: too many vertices");
        for (int u = 0; u < g.n_; ++u) {
            adj[u] &= all_below(g.n_);
            if (adj[u] & bit(u))
                throw contract_violation("SimpleGraph: loop at vertex " + std::to_string(u));
        }
        for (int u = 0; u < g.n_; ++u)
            for_each_bit(adj[u], [&](int v) {
                if (!(adj[v] & bit(u)))
                    throw contract_violation("SimpleGraph: adjacency not symmetric");
            });
        g.adj_ = std::move(adj);
        g.finish();
        return g;
    }

    int n() const { return n_; }
    int m() const { return m_; }
    vertex_set vertices() const { return all_below(n_); }
    vertex_set neighbors(vertex u) const { return adj_[u]; }
    const std::vector<vertex_set>& adjacency() const { return adj_; }
    bool adjacent(vertex u, vertex v) const { return (adj_[u] >> v) & 1; }
    int degree(vertex u) const { return deg_[u]; }
    int degree_in(vertex u, vertex_set U) const { return popcount(adj_[u] & U); }
    int max_degree() const { return n_ ? *std::max_element(deg_.begin(), deg_.end()) : 0; }
    int min_degree() const { return n_ ? *std::min_element(deg_.begin(), deg_.end()) : 0; }

    /// Edges as (u, v) with u < v, lexicographic.
    std::vector<std::pair<vertex, vertex>> edges() const
    {
        std::vector<std::pair<vertex, vertex>> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for_each_bit(adj_[u] & ~all_below(u + 1), [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    /// |E(U1, U2)| for disjoint U1, U2.
    int edges_between(vertex_set U1, vertex_set U2) const
    {
        int c = 0;
        for_each_bit(U1, [&](int u) { c += popcount(adj_[u] & U2); });
        return c;
    }

    /// Induced subgraph, vertices renumbered in increasing order.
    SimpleGraph induced(vertex_set U) const
    {
        std::vector<vertex> keep = to_vector(U & vertices());
        std::vector<int> index(n_, -1);
        for (std::size_t i = 0; i < keep.size(); ++i)
            index[keep[i]] = static_cast<int>(i);
        std::vector<vertex_set> adj(keep.size(), 0);
        for (std::size_t i = 0; i < keep.size(); ++i)
            for_each_bit(adj_[keep[i]] & U, [&](int v) { adj[i] |= bit(index[v]); });
        return from_adjacency(std::move(adj));
    }

    SimpleGraph without_edge(vertex u, vertex v) const
    {
        auto adj = adj_;
        adj[u] &= ~bit(v);
        adj[v] &= ~bit(u);
        return from_adjacency(std::move(adj));
    }

    /// Vertex set of the component containing `start`, restricted to `within`.
    vertex_set component_of(vertex start, vertex_set within) const
    {
        vertex_set seen = bit(start) & within;
        vertex_set frontier = seen;
        while (frontier) {
            vertex_set next = 0;
            for_each_bit(frontier, [&](int u) { next |= adj_[u]; });
            next &= within & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    std::vector<vertex_set> components(vertex_set within) const
    {
        std::vector<vertex_set> out;
        within &= vertices();
        while (within) {
            vertex_set c = component_of(std::countr_zero(within), within);
            out.push_back(c);
            within &= ~c;
        }
        return out;
    }
    std::vector<vertex_set> components() const { return components(vertices()); }

    bool connected() const { return n_ <= 1 || component_of(0, vertices()) == vertices(); }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b)
    {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void finish()
    {
        deg_.resize(n_);
        int twice = 0;
        for (int u = 0; u < n_; ++u) {
            deg_[u] = popcount(adj_[u]);
            twice += deg_[u];
        }
        m_ = twice / 2;
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<vertex_set> adj_;
    std::vector<int> deg_;
};

/// Loopless multigraph; multiplicity(u, v) parallel edges join u and v.
class MultiGraph
{
public:
    MultiGraph() = default;

    /// Edges given as (u, v, multiplicity). Repeated pairs accumulate.
    MultiGraph(int n, const std::vector<std::tuple<vertex, vertex, int>>& edges)
        : n_(n), mult_(static_cast<std::size_t>(n) * n, 0)
    {
        if (n < 0 || n > max_vertices)
            throw contract_violation("MultiGraph: vertex count out of range");
        for (auto [u, v, t] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw contract_violation("MultiGraph: edge endpoint out of range");
            if (u == v)
                throw contract_violation("MultiGraph: loops are not allowed");
            if (t < 0)
                throw contract_violation("MultiGraph: negative multiplicity");
            mult_[u * n + v] += t;
            mult_[v * n + u] += t;
        }
    }

    explicit MultiGraph(const SimpleGraph& g)
        : n_(g.n()), mult_(static_cast<std::size_t>(g.n()) * g.n(), 0)
    {
        for (auto [u, v] : g.edges())
            mult_[u * n_ + v] = mult_[v * n_ + u] = 1;
    }

    int n() const { return n_; }
    int multiplicity(vertex u, vertex v) const { return mult_[u * n_ + v]; }

    int m() const
    {
        return std::accumulate(mult_.begin(), mult_.end(), 0) / 2;
    }

    int degree(vertex u) const
    {
        int d = 0;
        for (int v = 0; v < n_; ++v)
            d += mult_[u * n_ + v];
        return d;
    }

    /// (u, v, multiplicity) with u < v and multiplicity > 0.
    std::vector<std::tuple<vertex, vertex, int>> edges() const
    {
        std::vector<std::tuple<vertex, vertex, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (int t = mult_[u * n_ + v])
                    out.emplace_back(u, v, t);
        return out;
    }

    SimpleGraph underlying() const
    {
        std::vector<std::pair<vertex, vertex>> es;
        for (auto [u, v, t] : edges())
            es.emplace_back(u, v);
        return SimpleGraph(n_, es);
    }

    bool is_simple() const
    {
        return std::all_of(mult_.begin(), mult_.end(), [](int t) { return t <= 1; });
    }

    friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

private:
    int n_ = 0;
    std::vector<int> mult_;
};

struct BlockDecomposition {
    std::vector<vertex_set> blocks;
    vertex_set cut_vertices = 0;
};

/// Blocks and cut vertices via Hopcroft-Tarjan lowpoints. Isolated vertices form
/// singleton blocks; bridges form two-vertex blocks.
inline BlockDecomposition block_decomposition(const SimpleGraph& g)
{
    const int n = g.n();
    BlockDecomposition out;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<vertex, vertex>> edge_stack;
    int timer = 0;

    struct Frame {
        vertex u;
        vertex parent;
        vertex_set pending;
        int children;
    };

    for (vertex root = 0; root < n; ++root) {
        if (disc[root] != -1)
            continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            out.blocks.push_back(bit(root));
            continue;
        }
        std::vector<Frame> stack;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1, g.neighbors(root), 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.pending) {
                vertex v = std::countr_zero(f.pending);
                f.pending &= f.pending - 1;
                if (v == f.parent)
                    continue;
                if (disc[v] == -1) {
                    edge_stack.emplace_back(f.u, v);
                    ++f.children;
                    disc[v] = low[v] = timer++;
                    stack.push_back({v, f.u, g.neighbors(v), 0});
                } else if (disc[v] < disc[f.u]) {
                    edge_stack.emplace_back(f.u, v);
                    low[f.u] = std::min(low[f.u], disc[v]);
                }
                continue;
            }
            Frame done = f;
            stack.pop_back();
            if (stack.empty())
                break;
            vertex p = stack.back().u;
            low[p] = std::min(low[p], low[done.u]);
            if (low[done.u] >= disc[p]) {
                vertex_set block = 0;
                while (true) {
                    auto [a, b] = edge_stack.back();
                    edge_stack.pop_back();
                    block |= bit(a) | bit(b);
                    if (a == p && b == done.u)
                        break;
                }
                out.blocks.push_back(block);
                if (stack.size() > 1 || stack.back().children > 1)
                    out.cut_vertices |= bit(p);
            }
        }
    }
    return out;
}

inline bool is_clique(const SimpleGraph& g, vertex_set U)
{
    bool ok = true;
    for_each_bit(U, [&](int u) { ok = ok && ((g.neighbors(u) | bit(u)) & U) == U; });
    return ok;
}

/// True iff G[U] is a cycle of length at least 3.
inline bool is_cycle(const SimpleGraph& g, vertex_set U)
{
    if (popcount(U) < 3)
        return false;
    bool two_regular = true;
    for_each_bit(U, [&](int u) { two_regular = two_regular && g.degree_in(u, U) == 2; });
    return two_regular && g.component_of(std::countr_zero(U), U) == U;
}

namespace detail
{
inline bool extend_clique(const SimpleGraph& g, vertex_set candidates, int need)
{
    if (need == 0)
        return true;
    if (popcount(candidates) < need)
        return false;
    while (candidates) {
        if (popcount(candidates) < need)
            return false;
        int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        // degree pruning: v needs need-1 neighbours among the later candidates
        vertex_set next = candidates & g.neighbors(v);
        if (popcount(next) >= need - 1 && extend_clique(g, next, need - 1))
            return true;
    }
    return false;
}
} // namespace detail

/// Branch and bound with degree pruning.
inline bool contains_clique(const SimpleGraph& g, int t)
{
    if (t < 1)
        throw contract_violation("contains_clique: t must be at least 1");
    vertex_set pool = 0;
    for (int u = 0; u < g.n(); ++u)
        if (g.degree(u) >= t - 1)
            pool |= bit(u);
    return detail::extend_clique(g, pool, t);
}

inline int clique_number(const SimpleGraph& g)
{
    int w = 0;
    while (w < g.n() && contains_clique(g, w + 1))
        ++w;
    return w;
}

/// Low-degree set and excesses relative to a target list size k.
struct DegreeProfile {
    int k = 0;
    vertex_set D = 0;
    std::vector<int> epsilon;
    int epsilon_total = 0;

    bool in_D(vertex u) const { return (D >> u) & 1; }

    int epsilon_of(vertex_set U) const
    {
        int s = 0;
        for_each_bit(U, [&](int u) { s += epsilon[u]; });
        return s;
    }
};

inline DegreeProfile degree_profile(const SimpleGraph& g, int k)
{
    if (k < 1)
        throw contract_violation("degree_profile: k must be positive");
    DegreeProfile p;
    p.k = k;
    p.epsilon.resize(g.n());
    for (int u = 0; u < g.n(); ++u) {
        p.epsilon[u] = g.degree(u) - k;
        p.epsilon_total += p.epsilon[u];
        if (p.epsilon[u] == 0)
            p.D |= bit(u);
    }
    return p;
}

/// phi_U(u) = deg_U(u) - epsilon(u) = k - deg_{V \ U}(u).
inline int phi(const SimpleGraph& g, const DegreeProfile& p, vertex_set U, vertex u)
{
    return g.degree_in(u, U) - p.epsilon[u];
}

} // namespace dpcolor
