#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace dpcolor
{

/// Bitmask over the color indices of one list. Lists hold at most 64 colors.
using color_set = std::uint64_t;

inline constexpr int max_list_size = 64;

/// One parallel copy of an edge, canonically oriented u < v.
struct EdgeKey {
    vertex u = 0;
    vertex v = 0;
    int parallel = 0;

    auto operator<=>(const EdgeKey&) const = default;
};

/// Pairs (color of u, color of v) for an EdgeKey, sorted lexicographically.
using MatchingPairs = std::vector<std::pair<int, int>>;

/// A cover (L, H) of a graph or loopless multigraph. The colors of u are the
/// indices [0, list_size(u)); each list is implicitly a clique of H, and the
/// cross-list edges of H are the per-edge matchings. Immutable.
class Cover
{
public:
    Cover() = default;

    Cover(SimpleGraph g, std::vector<int> list_sizes, std::map<EdgeKey, MatchingPairs> matchings = {})
        : simple_(true), graph_(std::move(g)), multi_(graph_), list_size_(std::move(list_sizes))
    {
        init(std::move(matchings));
    }

    Cover(MultiGraph g, std::vector<int> list_sizes, std::map<EdgeKey, MatchingPairs> matchings = {})
        : simple_(false), graph_(g.underlying()), multi_(std::move(g)), list_size_(std::move(list_sizes))
    {
        init(std::move(matchings));
    }

    static Cover uniform(SimpleGraph g, int k, std::map<EdgeKey, MatchingPairs> matchings = {})
    {
        std::vector<int> sizes(g.n(), k);
        return Cover(std::move(g), std::move(sizes), std::move(matchings));
    }

    bool is_multigraph() const { return !simple_; }
    int n() const { return graph_.n(); }
    /// Underlying simple graph.
    const SimpleGraph& graph() const { return graph_; }
    const MultiGraph& multigraph() const { return multi_; }

    int list_size(vertex u) const { return list_size_[u]; }
    const std::vector<int>& list_sizes() const { return list_size_; }
    color_set full_list(vertex u) const { return all_below(list_size_[u]); }

    std::optional<int> uniform_k() const
    {
        if (list_size_.empty())
            return std::nullopt;
        if (std::adjacent_find(list_size_.begin(), list_size_.end(), std::not_equal_to<>()) != list_size_.end())
            return std::nullopt;
        return list_size_.front();
    }

    const std::map<EdgeKey, MatchingPairs>& matchings() const { return matchings_; }

    /// Matching for parallel copy t of edge uv, as pairs (color of u, color of v).
    MatchingPairs matching(vertex u, vertex v, int t = 0) const
    {
        bool flip = u > v;
        auto it = matchings_.find(flip ? EdgeKey{v, u, t} : EdgeKey{u, v, t});
        if (it == matchings_.end())
            return {};
        MatchingPairs out = it->second;
        if (flip) {
            for (auto& p : out)
                std::swap(p.first, p.second);
            std::sort(out.begin(), out.end());
        }
        return out;
    }

    /// Colors of v adjacent in H to color c of u (u != v).
    color_set conflicts(vertex u, int c, vertex v) const
    {
        return conflict_[(static_cast<std::size_t>(u) * width_ + c) * n() + v];
    }

    /// A copy with one matching replaced.
    Cover with_matching(EdgeKey key, MatchingPairs pairs) const
    {
        auto m = matchings_;
        m[key] = std::move(pairs);
        return simple_ ? Cover(graph_, list_size_, std::move(m)) : Cover(multi_, list_size_, std::move(m));
    }

    friend bool operator==(const Cover& a, const Cover& b)
    {
        return a.simple_ == b.simple_ && a.multi_ == b.multi_ && a.list_size_ == b.list_size_ &&
               a.matchings_ == b.matchings_;
    }

private:
    void init(std::map<EdgeKey, MatchingPairs> raw)
    {
        const int n = graph_.n();
        if (static_cast<int>(list_size_.size()) != n)
            throw contract_violation("Cover: list_sizes has " + std::to_string(list_size_.size()) +
                                     " entries for " + std::to_string(n) + " vertices");
        width_ = 1;
        for (int s : list_size_) {
            if (s < 0 || s > max_list_size)
                throw contract_violation("Cover: list size out of range: " + std::to_string(s));
            width_ = std::max(width_, s);
        }
        for (auto& [key, pairs] : raw) {
            if (key.u < 0 || key.v < 0 || key.u >= n || key.v >= n || key.parallel < 0)
                throw contract_violation("Cover: matching key references a vertex outside the graph");
            EdgeKey canon = key;
            if (canon.u > canon.v) {
                std::swap(canon.u, canon.v);
                for (auto& p : pairs)
                    std::swap(p.first, p.second);
            }
            std::sort(pairs.begin(), pairs.end());
            pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
            auto& slot = matchings_[canon];
            slot.insert(slot.end(), pairs.begin(), pairs.end());
            std::sort(slot.begin(), slot.end());
            slot.erase(std::unique(slot.begin(), slot.end()), slot.end());
        }
        std::erase_if(matchings_, [](const auto& kv) { return kv.second.empty(); });

        conflict_.assign(static_cast<std::size_t>(n) * width_ * n, 0);
        for (const auto& [key, pairs] : matchings_) {
            if (key.u == key.v)
                continue;
            for (auto [i, j] : pairs) {
                if (i < 0 || j < 0 || i >= list_size_[key.u] || j >= list_size_[key.v])
                    continue;
                conflict_[(static_cast<std::size_t>(key.u) * width_ + i) * n + key.v] |= color_set{1} << j;
                conflict_[(static_cast<std::size_t>(key.v) * width_ + j) * n + key.u] |= color_set{1} << i;
            }
        }
    }

    bool simple_ = true;
    SimpleGraph graph_;
    MultiGraph multi_;
    std::vector<int> list_size_;
    std::map<EdgeKey, MatchingPairs> matchings_;
    int width_ = 1;
    std::vector<color_set> conflict_;
};

/// Picks of at most one color per vertex; an independent set of H when valid.
class PartialColoring
{
public:
    PartialColoring() = default;
    explicit PartialColoring(int n) : picks_(n, -1) {}

    int n() const { return static_cast<int>(picks_.size()); }
    bool has(vertex u) const { return picks_[u] >= 0; }
    int pick(vertex u) const { return picks_[u]; }
    const std::vector<int>& picks() const { return picks_; }

    void assign(vertex u, int color) { picks_[u] = color; }
    void clear(vertex u) { picks_[u] = -1; }

    vertex_set dom() const
    {
        vertex_set s = 0;
        for (int u = 0; u < n(); ++u)
            if (picks_[u] >= 0)
                s |= bit(u);
        return s;
    }

    bool extends(const PartialColoring& other) const
    {
        if (other.n() != n())
            return false;
        for (int u = 0; u < n(); ++u)
            if (other.picks_[u] >= 0 && other.picks_[u] != picks_[u])
                return false;
        return true;
    }

    friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

private:
    std::vector<int> picks_;
};

/// nullopt when the picks are in range and pairwise non-adjacent in H;
/// otherwise a description of the first violation found.
inline std::optional<std::string> check_partial_coloring(const Cover& c, const PartialColoring& p)
{
    if (p.n() != c.n())
        return "coloring has " + std::to_string(p.n()) + " vertices, cover has " + std::to_string(c.n());
    for (int u = 0; u < c.n(); ++u)
        if (p.has(u) && p.pick(u) >= c.list_size(u))
            return "vertex " + std::to_string(u) + " picks color " + std::to_string(p.pick(u)) +
                   " outside its list";
    for (int u = 0; u < c.n(); ++u) {
        if (!p.has(u))
            continue;
        for (int v = u + 1; v < c.n(); ++v)
            if (p.has(v) && (c.conflicts(u, p.pick(u), v) >> p.pick(v) & 1))
                return "colors of vertices " + std::to_string(u) + " and " + std::to_string(v) +
                       " are adjacent in H";
    }
    return std::nullopt;
}

/// Checks the cover axioms: every cross-list edge lies over an edge of G (one
/// matching per parallel copy), references valid colors, and each per-edge
/// relation is a matching. nullopt means the cover is valid.
inline std::optional<std::string> validate_cover(const Cover& c)
{
    const auto& mg = c.multigraph();
    for (const auto& [key, pairs] : c.matchings()) {
        std::string where = "edge (" + std::to_string(key.u) + "," + std::to_string(key.v) + ")";
        if (key.parallel > 0 || c.is_multigraph())
            where += "#" + std::to_string(key.parallel);
        if (key.u == key.v)
            return where + ": cross-list edges inside a single list";
        if (key.parallel >= mg.multiplicity(key.u, key.v))
            return where + ": no such edge in the base graph";
        std::vector<int> seen_u(c.list_size(key.u), -1), seen_v(c.list_size(key.v), -1);
        for (auto [i, j] : pairs) {
            std::string pair = " pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (i < 0 || i >= c.list_size(key.u) || j < 0 || j >= c.list_size(key.v))
                return where + pair + ": color index out of range";
            if (seen_u[i] >= 0)
                return where + pair + ": color " + std::to_string(i) + " of vertex " + std::to_string(key.u) +
                       " is matched twice";
            if (seen_v[j] >= 0)
                return where + pair + ": color " + std::to_string(j) + " of vertex " + std::to_string(key.v) +
                       " is matched twice";
            seen_u[i] = j;
            seen_v[j] = i;
        }
    }
    return std::nullopt;
}

/// The cover of a list assignment: colors (u, c) for c in L(u), with (u, c)
/// matched to (v, c) over each edge uv. Color index j of u is the j-th
/// smallest label in lists[u].
inline Cover cover_from_lists(const SimpleGraph& g, std::vector<std::vector<int>> lists)
{
    if (static_cast<int>(lists.size()) != g.n())
        throw contract_violation("cover_from_lists: one list per vertex required");
    std::vector<int> sizes;
    for (auto& l : lists) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        if (l.empty())
            throw contract_violation("cover_from_lists: empty list");
        sizes.push_back(static_cast<int>(l.size()));
    }
    std::map<EdgeKey, MatchingPairs> m;
    for (auto [u, v] : g.edges()) {
        MatchingPairs pairs;
        for (std::size_t i = 0; i < lists[u].size(); ++i) {
            auto it = std::lower_bound(lists[v].begin(), lists[v].end(), lists[u][i]);
            if (it != lists[v].end() && *it == lists[u][i])
                pairs.emplace_back(static_cast<int>(i), static_cast<int>(it - lists[v].begin()));
        }
        m[{u, v, 0}] = std::move(pairs);
    }
    return Cover(g, std::move(sizes), std::move(m));
}

/// The k-fold cover with identity matchings; its colorings are the proper k-colorings.
inline Cover identity_cover(const SimpleGraph& g, int k)
{
    std::map<EdgeKey, MatchingPairs> m;
    MatchingPairs id;
    for (int i = 0; i < k; ++i)
        id.emplace_back(i, i);
    for (auto [u, v] : g.edges())
        m[{u, v, 0}] = id;
    return Cover::uniform(g, k, std::move(m));
}

/// L_I(u): colors of u with no H-neighbor among the picks of p.
inline color_set residual_list(const Cover& c, const PartialColoring& p, vertex u)
{
    if (p.has(u))
        throw contract_violation("residual_list: vertex " + std::to_string(u) + " is already colored");
    color_set r = c.full_list(u);
    for_each_bit(c.graph().neighbors(u) & p.dom(), [&](int w) { r &= ~c.conflicts(w, p.pick(w), u); });
    return r;
}

/// Applies perms[u][old] = new to the colors of every vertex.
inline Cover relabel_colors(const Cover& c, const std::vector<std::vector<int>>& perms)
{
    if (static_cast<int>(perms.size()) != c.n())
        throw contract_violation("relabel_colors: one permutation per vertex required");
    for (int u = 0; u < c.n(); ++u) {
        if (static_cast<int>(perms[u].size()) != c.list_size(u))
            throw contract_violation("relabel_colors: permutation size mismatch at vertex " + std::to_string(u));
        std::vector<int> sorted = perms[u];
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < c.list_size(u); ++i)
            if (sorted[i] != i)
                throw contract_violation("relabel_colors: not a permutation at vertex " + std::to_string(u));
    }
    std::map<EdgeKey, MatchingPairs> m;
    for (const auto& [key, pairs] : c.matchings()) {
        MatchingPairs out;
        for (auto [i, j] : pairs)
            out.emplace_back(perms[key.u][i], perms[key.v][j]);
        m[key] = std::move(out);
    }
    return c.is_multigraph() ? Cover(c.multigraph(), c.list_sizes(), std::move(m))
                             : Cover(c.graph(), c.list_sizes(), std::move(m));
}

inline PartialColoring relabel_coloring(const PartialColoring& p, const std::vector<std::vector<int>>& perms)
{
    PartialColoring out(p.n());
    for (int u = 0; u < p.n(); ++u)
        if (p.has(u))
            out.assign(u, perms[u][p.pick(u)]);
    return out;
}

} // namespace dpcolor
