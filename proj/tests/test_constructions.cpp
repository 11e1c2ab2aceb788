#include <gtest/gtest.h>

#include <dpcolor/constructions.hpp>
#include <dpcolor/recognizers.hpp>
#include <dpcolor/solver.hpp>

#include "support/oracles.hpp"

using namespace dpcolor;
namespace t = dpcolor::testing;

TEST(MakeDirac, Counts)
{
    SimpleGraph a = make_dirac(3, 1), b = make_dirac(3, 2);
    EXPECT_EQ(a.n(), 7);
    EXPECT_EQ(a.m(), 11);
    EXPECT_EQ(b.n(), 7);
    EXPECT_EQ(b.m(), 11);
    SimpleGraph c = make_dirac(4, 2);
    EXPECT_EQ(c.n(), 9);
    EXPECT_EQ(c.m(), 19);
    EXPECT_THROW(make_dirac(3, 0), contract_violation);
    EXPECT_THROW(make_dirac(3, 3), contract_violation);
}

TEST(MakeDirac, CliqueFree)
{
    for (int k = 3; k <= 6; ++k)
        for (int a = 1; a <= k - 1; ++a) {
            EXPECT_FALSE(contains_clique(make_dirac(k, a), k + 1));
            if (k <= 4) {
                EXPECT_FALSE(t::brute_force_has_clique(make_dirac(k, a), k + 1));
            }
        }
}

TEST(MakeDirac, IdentityCoverCritical)
{
    for (int k = 3; k <= 4; ++k)
        for (int a = 1; a <= k - 1; ++a)
            EXPECT_TRUE(is_critical(identity_cover(make_dirac(k, a), k))) << "k=" << k << " a=" << a;
}

TEST(MakeKs, CountsAndCriticality)
{
    auto k3 = make_ks_example(3);
    EXPECT_EQ(k3.graph.n(), 8);
    EXPECT_EQ(k3.graph.m(), 13);
    EXPECT_EQ(2 * k3.graph.m() - 3 * k3.graph.n(), 2);
    Cover c3 = cover_from_lists(k3.graph, k3.lists);
    EXPECT_EQ(validate_cover(c3), std::nullopt);
    EXPECT_TRUE(is_critical(c3));
    EXPECT_TRUE(t::brute_force_critical(c3));

    auto k4 = make_ks_example(4);
    EXPECT_EQ(k4.graph.n(), 10);
    EXPECT_EQ(k4.graph.m(), 21);
    EXPECT_TRUE(is_critical(cover_from_lists(k4.graph, k4.lists)));
}

TEST(MakeC4Covers, StraightAndTwisted)
{
    auto [h1, h2] = make_c4_covers();
    EXPECT_EQ(validate_cover(h1), std::nullopt);
    EXPECT_EQ(validate_cover(h2), std::nullopt);
    EXPECT_TRUE(is_colorable(h1));
    EXPECT_FALSE(is_colorable(h2));
    EXPECT_TRUE(is_critical(h2));
    EXPECT_EQ(t::brute_force_count(h1), 2u);
    EXPECT_EQ(t::brute_force_count(h2), 0u);
}

TEST(MakeWheel, Counts)
{
    EXPECT_EQ(make_wheel(4).n(), 5);
    EXPECT_EQ(make_wheel(4).m(), 8);
    EXPECT_EQ(make_wheel(3), make_complete(4));
    EXPECT_EQ(make_wheel(5).n(), 6);
    EXPECT_EQ(make_wheel(5).m(), 10);
}

TEST(MultigraphCounterexample, Counts)
{
    for (int k : {3, 6, 9}) {
        Cover c = make_multigraph_counterexample(k);
        EXPECT_EQ(validate_cover(c), std::nullopt);
        const MultiGraph& g = c.multigraph();
        EXPECT_EQ(g.n(), 3);
        EXPECT_EQ(2 * g.m() - k * g.n(), k / 3);
        EXPECT_EQ(c.uniform_k(), k);
    }
    EXPECT_EQ(make_multigraph_counterexample(3).multigraph().m(), 5);
    EXPECT_THROW(make_multigraph_counterexample(4), contract_violation);
    EXPECT_THROW(make_multigraph_counterexample(0), contract_violation);
}

TEST(MultigraphCounterexample, MatchesAdjacencyRules)
{
    // union of the parallel matchings is exactly the rule relation, each pair once
    for (int k : {3, 6, 9}) {
        Cover c = make_multigraph_counterexample(k);
        const int q = k / 3;
        for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}}) {
            std::map<std::pair<int, int>, int> seen;
            for (int tcopy = 0; tcopy < c.multigraph().multiplicity(u, v); ++tcopy)
                for (auto [x, y] : c.matching(u, v, tcopy))
                    ++seen[{x, y}];
            for (int x = 0; x < k; ++x)
                for (int y = 0; y < k; ++y) {
                    bool same_block = x / q == y / q;
                    bool rule = (u == 0 && v == 1) ? same_block : !same_block;
                    auto it = seen.find({x, y});
                    int hits = it == seen.end() ? 0 : it->second;
                    EXPECT_EQ(hits, rule ? 1 : 0) << "k=" << k << " " << u << v << " (" << x << "," << y << ")";
                }
        }
    }
}

TEST(MultigraphCounterexample, UncolorableAndCritical)
{
    for (int k : {3, 6}) {
        Cover c = make_multigraph_counterexample(k);
        EXPECT_FALSE(is_colorable(c));
        EXPECT_TRUE(is_critical(c));
        EXPECT_TRUE(t::brute_force_critical(c));
    }
}
