#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string_view>
#include <vector>

#include "cover.hpp"

namespace dpcolor
{

enum class Regime { perfect, partial };

inline std::string_view to_string(Regime r) { return r == Regime::perfect ? "perfect" : "partial"; }

inline std::optional<Regime> regime_from_string(std::string_view s)
{
    if (s == "perfect")
        return Regime::perfect;
    if (s == "partial")
        return Regime::partial;
    return std::nullopt;
}

/// Edges of a BFS spanning tree rooted at 0, each as (parent, child).
inline std::vector<std::pair<vertex, vertex>> bfs_tree(const SimpleGraph& g)
{
    std::vector<std::pair<vertex, vertex>> tree;
    if (g.n() == 0)
        return tree;
    vertex_set seen = bit(0);
    std::vector<vertex> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        vertex u = queue[head];
        for_each_bit(g.neighbors(u) & ~seen, [&](int v) {
            seen |= bit(v);
            tree.emplace_back(u, v);
            queue.push_back(v);
        });
    }
    return tree;
}

/// Streams k-fold covers of a connected graph, one per gauge orbit or more.
///
/// Per-vertex color relabelings preserve colorability, criticality and the
/// number of colorings. In the perfect regime every matching is a bijection;
/// relabeling top-down along a BFS tree pins the tree matchings to the
/// identity, so only the m - n + 1 non-tree edges vary over all k! bijections.
///
/// In the partial regime a tree edge (parent p, child c) can still be
/// normalised by relabeling c: a matching saturating the parent colors
/// S = {s_0 < s_1 < ...} becomes {(s_t, t)}. Tree edges therefore range over
/// the 2^k subsets S, non-tree edges over every partial injection.
class CoverEnumerator
{
public:
    CoverEnumerator(SimpleGraph g, int k, Regime regime)
        : graph_(std::move(g)), k_(k), regime_(regime)
    {
        if (k < 1 || k > 12)
            throw contract_violation("enumerate_covers: k out of supported range [1, 12]");
        if (!graph_.connected())
            throw contract_violation("enumerate_covers: graph must be connected");

        auto tree = bfs_tree(graph_);
        std::vector<vertex_set> tree_adj(graph_.n(), 0);
        for (auto [p, c] : tree) {
            tree_adj[p] |= bit(c);
            tree_adj[c] |= bit(p);
        }
        for (auto [u, v] : graph_.edges()) {
            if (tree_adj[u] >> v & 1) {
                // orient relative to the tree: parent has the smaller BFS discovery
                bool u_parent = std::find(tree.begin(), tree.end(), std::pair<vertex, vertex>{u, v}) != tree.end();
                tree_edges_.push_back({u, v, u_parent});
            } else {
                free_edges_.push_back({u, v});
            }
        }

        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            MatchingPairs pairs;
            for (int i = 0; i < k; ++i)
                pairs.emplace_back(i, perm[i]);
            bijections_.push_back(std::move(pairs));
        } while (std::next_permutation(perm.begin(), perm.end()));

        if (regime_ == Regime::partial) {
            std::vector<int> image(k, -1);
            build_injections(0, image, 0);
            for (color_set S = 0; S < (color_set{1} << k); ++S) {
                MatchingPairs pairs;
                int t = 0;
                for_each_bit(S, [&](int s) { pairs.emplace_back(s, t++); });
                subsets_.push_back(std::move(pairs));
            }
        }

        odometer_.assign(slot_count(), 0);
    }

    const SimpleGraph& graph() const { return graph_; }
    int k() const { return k_; }
    Regime regime() const { return regime_; }
    int free_edge_count() const { return static_cast<int>(free_edges_.size()); }

    /// Length of the full stream; saturates at UINT64_MAX.
    std::uint64_t size() const
    {
        std::uint64_t total = 1;
        auto mul = [&](std::uint64_t f) {
            total = (f != 0 && total > UINT64_MAX / f) ? UINT64_MAX : total * f;
        };
        if (regime_ == Regime::perfect) {
            for (std::size_t i = 0; i < free_edges_.size(); ++i)
                mul(bijections_.size());
        } else {
            for (std::size_t i = 0; i < tree_edges_.size(); ++i)
                mul(subsets_.size());
            for (std::size_t i = 0; i < free_edges_.size(); ++i)
                mul(injections_.size());
        }
        return total;
    }

    std::optional<Cover> next()
    {
        if (done_)
            return std::nullopt;
        Cover c = current();
        advance();
        return c;
    }

private:
    struct TreeEdge {
        vertex u, v;
        bool u_is_parent;
    };
    struct FreeEdge {
        vertex u, v;
    };

    std::size_t slot_count() const
    {
        return regime_ == Regime::perfect ? free_edges_.size() : tree_edges_.size() + free_edges_.size();
    }

    std::size_t radix(std::size_t slot) const
    {
        if (regime_ == Regime::perfect)
            return bijections_.size();
        return slot < tree_edges_.size() ? subsets_.size() : injections_.size();
    }

    void build_injections(int i, std::vector<int>& image, color_set used)
    {
        if (i == k_) {
            MatchingPairs pairs;
            for (int a = 0; a < k_; ++a)
                if (image[a] >= 0)
                    pairs.emplace_back(a, image[a]);
            injections_.push_back(std::move(pairs));
            return;
        }
        image[i] = -1;
        build_injections(i + 1, image, used);
        for (int j = 0; j < k_; ++j)
            if (!(used >> j & 1)) {
                image[i] = j;
                build_injections(i + 1, image, used | color_set{1} << j);
            }
        image[i] = -1;
    }

    Cover current() const
    {
        std::map<EdgeKey, MatchingPairs> m;
        if (regime_ == Regime::perfect) {
            const MatchingPairs& id = bijections_.front();
            for (const auto& e : tree_edges_)
                m[{e.u, e.v, 0}] = id;
            for (std::size_t i = 0; i < free_edges_.size(); ++i)
                m[{free_edges_[i].u, free_edges_[i].v, 0}] = bijections_[odometer_[i]];
        } else {
            for (std::size_t i = 0; i < tree_edges_.size(); ++i) {
                MatchingPairs pairs = subsets_[odometer_[i]];
                if (!tree_edges_[i].u_is_parent)
                    for (auto& p : pairs)
                        std::swap(p.first, p.second);
                m[{tree_edges_[i].u, tree_edges_[i].v, 0}] = std::move(pairs);
            }
            for (std::size_t i = 0; i < free_edges_.size(); ++i)
                m[{free_edges_[i].u, free_edges_[i].v, 0}] = injections_[odometer_[tree_edges_.size() + i]];
        }
        return Cover::uniform(graph_, k_, std::move(m));
    }

    void advance()
    {
        for (std::size_t i = odometer_.size(); i-- > 0;) {
            if (++odometer_[i] < radix(i))
                return;
            odometer_[i] = 0;
        }
        done_ = true;
    }

    SimpleGraph graph_;
    int k_;
    Regime regime_;
    std::vector<TreeEdge> tree_edges_;
    std::vector<FreeEdge> free_edges_;
    std::vector<MatchingPairs> bijections_;
    std::vector<MatchingPairs> injections_;
    std::vector<MatchingPairs> subsets_;
    std::vector<std::size_t> odometer_;
    bool done_ = false;
};

/// Calls f on each cover until f returns false. Returns the number visited.
template <typename F>
std::uint64_t for_each_cover(const SimpleGraph& g, int k, Regime regime, F&& f)
{
    CoverEnumerator e(g, k, regime);
    std::uint64_t count = 0;
    while (auto c = e.next()) {
        ++count;
        if (!f(*c))
            break;
    }
    return count;
}

} // namespace dpcolor
