#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "cover.hpp"
#include "enumerate.hpp"

namespace dpcolor
{

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    int max_depth = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// Exact backtracking search for colorings of a cover.
///
/// Vertex order is minimum remaining values (smallest residual list first,
/// ties to the lowest index); colors are tried in ascending index order.
/// Residual lists of uncolored vertices are maintained incrementally and an
/// empty residual on a target vertex backtracks immediately.
///
/// One Solver per thread; it keeps mutable scratch state.
class Solver
{
public:
    explicit Solver(const Cover& c) : cover_(c) {}

    /// An extension of `seed` whose domain contains `target`, or nullopt if none exists.
    std::optional<PartialColoring> find_coloring(vertex_set target, const PartialColoring& seed)
    {
        if (auto bad = check_partial_coloring(cover_, seed))
            throw contract_violation("find_coloring: invalid seed: " + *bad);
        auto start = std::chrono::steady_clock::now();
        const int n = cover_.n();
        target &= all_below(n);

        picks_ = seed;
        levels_.assign(static_cast<std::size_t>(n) + 1, std::vector<color_set>(n, 0));
        auto& residual = levels_[0];
        vertex_set dom = seed.dom();
        for (int u = 0; u < n; ++u)
            if (!seed.has(u))
                residual[u] = residual_list(cover_, seed, u);

        std::optional<PartialColoring> out;
        if (search(target & ~dom, 0))
            out = picks_;
        stats_.elapsed += std::chrono::steady_clock::now() - start;
        return out;
    }

    std::optional<PartialColoring> find_coloring(vertex_set target)
    {
        return find_coloring(target, PartialColoring(cover_.n()));
    }

    const SearchStats& stats() const { return stats_; }

private:
    bool search(vertex_set remaining, int depth)
    {
        ++stats_.nodes_expanded;
        stats_.max_depth = std::max(stats_.max_depth, depth);
        if (!remaining)
            return true;

        const auto& residual = levels_[depth];
        vertex best = -1;
        int best_size = max_list_size + 1;
        for_each_bit(remaining, [&](int u) {
            int s = popcount(residual[u]);
            if (s < best_size) {
                best_size = s;
                best = u;
            }
        });
        if (best_size == 0)
            return false;

        const vertex_set rest = remaining & ~bit(best);
        const vertex_set touched = cover_.graph().neighbors(best) & ~picks_.dom();
        color_set options = residual[best];
        while (options) {
            int c = std::countr_zero(options);
            options &= options - 1;

            auto& next = levels_[depth + 1];
            next = residual;
            bool dead = false;
            for_each_bit(touched, [&](int w) {
                next[w] &= ~cover_.conflicts(best, c, w);
                if (!next[w] && (rest >> w & 1))
                    dead = true;
            });
            if (dead)
                continue;
            picks_.assign(best, c);
            if (search(rest, depth + 1))
                return true;
            picks_.clear(best);
        }
        return false;
    }

    const Cover& cover_;
    PartialColoring picks_;
    std::vector<std::vector<color_set>> levels_;
    SearchStats stats_;
};

inline std::optional<PartialColoring> find_coloring(const Cover& c, vertex_set target, const PartialColoring& seed)
{
    return Solver(c).find_coloring(target, seed);
}

inline std::optional<PartialColoring> find_coloring(const Cover& c, vertex_set target)
{
    return Solver(c).find_coloring(target);
}

inline bool is_colorable(const Cover& c)
{
    return Solver(c).find_coloring(c.graph().vertices()).has_value();
}

/// Not colorable, yet for every u some coloring has domain containing V - u.
/// The coloring for V - u may or may not use a color of u.
inline bool is_critical(const Cover& c)
{
    Solver s(c);
    const vertex_set all = c.graph().vertices();
    if (s.find_coloring(all))
        return false;
    for (int u = 0; u < c.n(); ++u)
        if (!s.find_coloring(all & ~bit(u)))
            return false;
    return true;
}

/// True iff every perfect-regime k-fold cover of the connected graph g is colorable.
/// Partial matchings need no separate pass: completing an uncolorable cover's
/// matchings to bijections keeps it uncolorable.
inline bool all_k_covers_colorable(const SimpleGraph& g, int k)
{
    bool ok = true;
    for_each_cover(g, k, Regime::perfect, [&](const Cover& c) {
        ok = is_colorable(c);
        return ok;
    });
    return ok;
}

/// DP-chromatic number. Searches each component from its clique number up to
/// max degree + 1. With max_k set, returns nullopt if the value exceeds it.
inline std::optional<int> chi_dp(const SimpleGraph& g, std::optional<int> max_k = std::nullopt)
{
    if (g.n() < 1)
        throw contract_violation("chi_dp: graph must have at least one vertex");
    int best = 1;
    for (vertex_set comp : g.components()) {
        SimpleGraph h = g.induced(comp);
        int lo = std::max({1, clique_number(h), best});
        int hi = h.max_degree() + 1;
        int k = lo;
        while (k < hi && !all_k_covers_colorable(h, k)) {
            if (max_k && k >= *max_k)
                return std::nullopt;
            ++k;
        }
        best = std::max(best, k);
        if (max_k && best > *max_k)
            return std::nullopt;
    }
    return best;
}

} // namespace dpcolor
