#pragma once

#include <set>
#include <tuple>
#include <vector>

#include "cover.hpp"

namespace dpcolor
{

/// Plain exhaustive checker used to re-validate solver verdicts. Works from the
/// raw matching pairs only; shares no code path with Solver.
class ExhaustiveChecker
{
public:
    explicit ExhaustiveChecker(const Cover& c) : sizes_(c.list_sizes())
    {
        for (const auto& [key, pairs] : c.matchings())
            for (auto [i, j] : pairs) {
                edges_.emplace(key.u, i, key.v, j);
                edges_.emplace(key.v, j, key.u, i);
            }
    }

    bool colorable(vertex_set target) const
    {
        std::vector<vertex> order;
        for (int u = 0; u < static_cast<int>(sizes_.size()); ++u)
            if (target >> u & 1)
                order.push_back(u);
        std::vector<int> picks;
        return extend(order, picks);
    }

    bool critical() const
    {
        const int n = static_cast<int>(sizes_.size());
        const vertex_set all = all_below(n);
        if (colorable(all))
            return false;
        for (int u = 0; u < n; ++u)
            if (!colorable(all & ~bit(u)))
                return false;
        return true;
    }

private:
    bool extend(const std::vector<vertex>& order, std::vector<int>& picks) const
    {
        const std::size_t i = picks.size();
        if (i == order.size())
            return true;
        const vertex u = order[i];
        for (int c = 0; c < sizes_[u]; ++c) {
            bool free = true;
            for (std::size_t j = 0; j < i && free; ++j)
                free = !edges_.count({u, c, order[j], picks[j]});
            if (!free)
                continue;
            picks.push_back(c);
            if (extend(order, picks))
                return true;
            picks.pop_back();
        }
        return false;
    }

    std::vector<int> sizes_;
    std::set<std::tuple<int, int, int, int>> edges_;
};

} // namespace dpcolor
