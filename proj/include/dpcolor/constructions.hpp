#pragma once

#include <utility>
#include <vector>

#include "cover.hpp"
#include "graph.hpp"

namespace dpcolor
{

inline SimpleGraph make_complete(int n)
{
    std::vector<std::pair<vertex, vertex>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            es.emplace_back(u, v);
    return SimpleGraph(n, es);
}

inline SimpleGraph make_cycle(int n)
{
    if (n < 3)
        throw contract_violation("make_cycle: n must be at least 3");
    std::vector<std::pair<vertex, vertex>> es;
    for (int u = 0; u < n; ++u)
        es.emplace_back(u, (u + 1) % n);
    return SimpleGraph(n, es);
}

inline SimpleGraph make_path(int n)
{
    std::vector<std::pair<vertex, vertex>> es;
    for (int u = 0; u + 1 < n; ++u)
        es.emplace_back(u, u + 1);
    return SimpleGraph(n, es);
}

/// Rim 0..r-1 in cyclic order, hub r.
inline SimpleGraph make_wheel(int r)
{
    if (r < 3)
        throw contract_violation("make_wheel: r must be at least 3");
    std::vector<std::pair<vertex, vertex>> es;
    for (int u = 0; u < r; ++u) {
        es.emplace_back(u, (u + 1) % r);
        es.emplace_back(u, r);
    }
    return SimpleGraph(r + 1, es);
}

/// A k-Dirac graph. V1 = [0, k), V2 = [k, 2k-1), V3 = {2k-1, 2k}; the first
/// `a` vertices of V1 attach to 2k-1 and the rest to 2k.
inline SimpleGraph make_dirac(int k, int a)
{
    if (k < 3)
        throw contract_violation("make_dirac: k must be at least 3");
    if (a < 1 || a > k - 1)
        throw contract_violation("make_dirac: split a must lie in [1, k-1]");
    const vertex x = 2 * k - 1, y = 2 * k;
    std::vector<std::pair<vertex, vertex>> es;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            es.emplace_back(u, v);
    for (int u = k; u < 2 * k - 1; ++u) {
        for (int v = u + 1; v < 2 * k - 1; ++v)
            es.emplace_back(u, v);
        es.emplace_back(u, x);
        es.emplace_back(u, y);
    }
    for (int u = 0; u < k; ++u)
        es.emplace_back(u, u < a ? x : y);
    return SimpleGraph(2 * k + 1, es);
}

struct ListInstance {
    SimpleGraph graph;
    std::vector<std::vector<int>> lists;
};

/// Two copies of K_{k+1} joined by the edge a0 b0. Vertices a0..ak are
/// 0..k and b0..bk are k+1..2k+1. Lists are {1..k}, except a0 and b0 get
/// {0, 1, ..., k-1}.
inline ListInstance make_ks_example(int k)
{
    if (k < 3)
        throw contract_violation("make_ks_example: k must be at least 3");
    const int side = k + 1;
    std::vector<std::pair<vertex, vertex>> es;
    for (int s = 0; s < 2; ++s)
        for (int i = 0; i < side; ++i)
            for (int j = i + 1; j < side; ++j)
                es.emplace_back(s * side + i, s * side + j);
    es.emplace_back(0, side);

    std::vector<int> full, shifted;
    for (int c = 1; c <= k; ++c)
        full.push_back(c);
    for (int c = 0; c < k; ++c)
        shifted.push_back(c);
    std::vector<std::vector<int>> lists(2 * side, full);
    lists[0] = lists[side] = shifted;
    return {SimpleGraph(2 * side, es), std::move(lists)};
}

/// The two 2-fold covers of C4 (cycle 0-1-2-3-0): straight, and twisted on edge 03.
inline std::pair<Cover, Cover> make_c4_covers()
{
    const SimpleGraph c4 = make_cycle(4);
    Cover straight = cover_from_lists(c4, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
    const MatchingPairs id{{0, 0}, {1, 1}}, swap{{0, 1}, {1, 0}};
    Cover twisted = Cover::uniform(c4, 2, {{{0, 1, 0}, id}, {{1, 2, 0}, id}, {{2, 3, 0}, id}, {{0, 3, 0}, swap}});
    return {std::move(straight), std::move(twisted)};
}

/// Multigraph on three vertices with k/3 edges between 0 and 1 and 2k/3
/// edges on each of 01's complements, plus its k-fold cover. Color index
/// j*q + a of a vertex stands for the label (j, a), j in [0,3), a in [0,q),
/// q = k/3. Across 01 the colors (j, a) and (j', a') are adjacent iff j = j';
/// across 02 and 12 iff j != j'.
///
/// Parallel copy t of 01 matches (j, a) with (j, a + t); copy (d-1)*q + s of
/// 02 or 12 matches (j, a) with (j + d, a + s), d in {1, 2}. Shifts are mod q
/// and mod 3 respectively.
inline Cover make_multigraph_counterexample(int k)
{
    if (k < 3 || k % 3 != 0)
        throw contract_violation("make_multigraph_counterexample: k must be a positive multiple of 3");
    const int q = k / 3;
    MultiGraph g(3, {{0, 1, q}, {0, 2, 2 * q}, {1, 2, 2 * q}});
    auto color = [q](int j, int a) { return ((j % 3) * q) + (a % q); };

    std::map<EdgeKey, MatchingPairs> m;
    for (int t = 0; t < q; ++t) {
        MatchingPairs pairs;
        for (int j = 0; j < 3; ++j)
            for (int a = 0; a < q; ++a)
                pairs.emplace_back(color(j, a), color(j, a + t));
        m[{0, 1, t}] = std::move(pairs);
    }
    for (vertex u : {0, 1})
        for (int d = 1; d <= 2; ++d)
            for (int s = 0; s < q; ++s) {
                MatchingPairs pairs;
                for (int j = 0; j < 3; ++j)
                    for (int a = 0; a < q; ++a)
                        pairs.emplace_back(color(j, a), color(j + d, a + s));
                m[{u, 2, (d - 1) * q + s}] = std::move(pairs);
            }
    return Cover(std::move(g), std::vector<int>(3, k), std::move(m));
}

} // namespace dpcolor
