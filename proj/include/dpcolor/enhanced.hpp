#pragma once

#include <optional>
#include <string>

#include "cover.hpp"

namespace dpcolor
{

/// u in D, uncolored, is enhanced by p when |L_p(u)| > deg_U(u), U the uncolored set.
inline bool is_enhanced(const Cover& c, const PartialColoring& p, vertex u, const DegreeProfile& profile)
{
    if (!profile.in_D(u))
        throw contract_violation("is_enhanced: vertex " + std::to_string(u) + " is not in D");
    if (p.has(u))
        throw contract_violation("is_enhanced: vertex " + std::to_string(u) + " is colored");
    const vertex_set U = c.graph().vertices() & ~p.dom();
    return popcount(residual_list(c, p, u)) > c.graph().degree_in(u, U);
}

namespace detail
{
inline bool enhance_over(const Cover& c, PartialColoring& p, const std::vector<vertex>& order, std::size_t i,
                         vertex u, const DegreeProfile& profile)
{
    if (i == order.size())
        return is_enhanced(c, p, u, profile);
    const vertex v = order[i];
    color_set options = residual_list(c, p, v);
    while (options) {
        int x = std::countr_zero(options);
        options &= options - 1;
        p.assign(v, x);
        if (enhance_over(c, p, order, i + 1, u, profile))
            return true;
    }
    p.clear(v);
    return false;
}
} // namespace detail

/// Exhaustive search over colorings of A extending p for one that enhances u.
/// A must be an independent set of uncolored neighbors of u.
inline std::optional<PartialColoring> find_enhancing_extension(const Cover& c, const PartialColoring& p, vertex u,
                                                               vertex_set A, const DegreeProfile& profile)
{
    const SimpleGraph& g = c.graph();
    if (!profile.in_D(u))
        throw contract_violation("find_enhancing_extension: u is not in D");
    if (p.has(u))
        throw contract_violation("find_enhancing_extension: u is colored");
    if (A & ~(g.neighbors(u) & ~p.dom()))
        throw contract_violation("find_enhancing_extension: A must consist of uncolored neighbors of u");
    bool independent = true;
    for_each_bit(A, [&](int v) { independent = independent && !(g.neighbors(v) & A); });
    if (!independent)
        throw contract_violation("find_enhancing_extension: A is not independent");

    PartialColoring work = p;
    if (detail::enhance_over(c, work, to_vector(A), 0, u, profile))
        return work;
    return std::nullopt;
}

} // namespace dpcolor
