#include <random>

#include <gtest/gtest.h>

#include <dpcolor/constructions.hpp>
#include <dpcolor/graph6.hpp>
#include <dpcolor/recognizers.hpp>

#include "support/oracles.hpp"

using namespace dpcolor;
namespace t = dpcolor::testing;

namespace
{
SimpleGraph k4_minus_edge()
{
    return SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

SimpleGraph bowtie()
{
    return SimpleGraph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
}
} // namespace

TEST(GallaiForest, NamedExamples)
{
    EXPECT_TRUE(is_gallai_forest(make_cycle(5)));
    EXPECT_FALSE(is_gallai_forest(make_cycle(4)));
    EXPECT_TRUE(is_gallai_forest(bowtie()));
    EXPECT_FALSE(is_gallai_forest(k4_minus_edge()));
    EXPECT_TRUE(is_gallai_forest(SimpleGraph(3)));
    EXPECT_TRUE(is_gallai_forest(make_path(6)));
}

TEST(GdpForest, NamedExamples)
{
    EXPECT_TRUE(is_gdp_forest(make_cycle(4)));
    EXPECT_TRUE(is_gdp_forest(make_cycle(5)));
    EXPECT_FALSE(is_gdp_forest(k4_minus_edge()));
    EXPECT_FALSE(is_gdp_forest(make_wheel(4)));
    EXPECT_TRUE(is_gdp_forest(make_complete(5)));
}

TEST(GdpForest, GallaiImpliesGdp)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        SimpleGraph g = t::random_graph(rng, std::uniform_int_distribution<int>(1, 9)(rng), 0.3);
        if (is_gallai_forest(g)) {
            EXPECT_TRUE(is_gdp_forest(g)) << emit_graph6(g);
        }
    }
}

TEST(GdpDeficiency, NamedExamples)
{
    EXPECT_EQ(gdp_deficiency(make_complete(3), 3), 3);
    EXPECT_EQ(gdp_deficiency(make_cycle(4), 4), 8);
    EXPECT_EQ(gdp_deficiency(SimpleGraph(1), 5), 5);
    EXPECT_THROW(gdp_deficiency(SimpleGraph(0), 3), contract_violation);
}

TEST(GdpDeficiency, AtLeastKOnGdpTrees)
{
    for (int k = 3; k <= 5; ++k) {
        for (const SimpleGraph& f : t::gdp_trees(8, k)) {
            if (contains_clique(f, k + 1))
                continue;
            int d = gdp_deficiency(f, k);
            EXPECT_GE(d, k) << emit_graph6(f);
            bool special = f.n() == 1 || (f.n() == k && is_complete(f));
            EXPECT_EQ(d == k, special) << emit_graph6(f) << " k=" << k;
        }
    }
}

TEST(GdpTrees, EnumeratorProducesOnlyGdpTrees)
{
    auto trees = t::gdp_trees(7, 3);
    EXPECT_GT(trees.size(), 20u);
    for (const auto& f : trees) {
        EXPECT_TRUE(f.connected());
        EXPECT_TRUE(is_gdp_forest(f));
        EXPECT_LE(f.max_degree(), 3);
    }
}

TEST(Dirac, NamedExamples)
{
    auto w = recognize_dirac(make_dirac(3, 1), 3);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->V1.size(), 3u);
    EXPECT_EQ(w->V2.size(), 2u);
    EXPECT_TRUE(check_dirac_witness(make_dirac(3, 1), *w));
    EXPECT_FALSE(recognize_dirac(make_complete(7), 3).has_value());
    EXPECT_FALSE(recognize_dirac(make_wheel(4), 3).has_value());
    EXPECT_FALSE(recognize_dirac(make_dirac(3, 1), 4).has_value());
    EXPECT_THROW(recognize_dirac(make_complete(5), 2), contract_violation);
}

TEST(Dirac, RoundTripAllSplits)
{
    std::mt19937_64 rng(32);
    for (int k = 3; k <= 5; ++k)
        for (int a = 1; a <= k - 1; ++a) {
            SimpleGraph g = make_dirac(k, a);
            auto w = recognize_dirac(g, k);
            ASSERT_TRUE(w.has_value()) << "k=" << k << " a=" << a;
            EXPECT_TRUE(check_dirac_witness(g, *w));
            int on_x = 0;
            for (auto [v, x] : w->attachment)
                on_x += x == w->V3.first;
            EXPECT_TRUE(on_x == a || on_x == k - a);

            // recognition does not depend on labels
            std::vector<int> perm(g.n());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::pair<vertex, vertex>> es;
            for (auto [u, v] : g.edges())
                es.emplace_back(perm[u], perm[v]);
            SimpleGraph h(g.n(), es);
            auto wh = recognize_dirac(h, k);
            ASSERT_TRUE(wh.has_value());
            EXPECT_TRUE(check_dirac_witness(h, *wh));
        }
}

TEST(Dirac, EdgeCountIdentity)
{
    for (int k = 3; k <= 6; ++k)
        for (int a = 1; a <= k - 1; ++a) {
            SimpleGraph g = make_dirac(k, a);
            EXPECT_EQ(2 * g.m(), k * g.n() + k - 2) << "k=" << k << " a=" << a;
        }
}

TEST(Dirac, NearMissesAreRejected)
{
    // moving one edge keeps the count but breaks the structure
    SimpleGraph g = make_dirac(4, 2);
    for (auto [u, v] : g.edges()) {
        SimpleGraph h = g.without_edge(u, v);
        EXPECT_FALSE(recognize_dirac(h, 4).has_value());
        for (int x = 0; x < g.n(); ++x)
            for (int y = x + 1; y < g.n(); ++y) {
                if (h.adjacent(x, y) || (x == u && y == v))
                    continue;
                auto es = h.edges();
                es.emplace_back(x, y);
                SimpleGraph moved(g.n(), es);
                if (auto w = recognize_dirac(moved, 4)) {
                    EXPECT_TRUE(check_dirac_witness(moved, *w));
                }
            }
    }
}

TEST(Brick, NamedExamples)
{
    for (int k : {4, 6}) {
        MultiGraph tri(3, {{0, 1, k / 2}, {1, 2, k / 2}, {0, 2, k / 2}});
        auto b = find_brick(tri, k);
        ASSERT_TRUE(b.has_value()) << k;
        EXPECT_EQ(popcount(b->vertices), 3);
        EXPECT_EQ(b->multiplicity, k / 2);
    }
    EXPECT_FALSE(find_brick(make_multigraph_counterexample(3).multigraph(), 3).has_value());
    EXPECT_FALSE(find_brick(make_multigraph_counterexample(6).multigraph(), 6).has_value());
    EXPECT_FALSE(find_brick(make_multigraph_counterexample(6).multigraph(), 6, BrickReading::exact_multiplicity)
                     .has_value());

    for (int k = 3; k <= 5; ++k) {
        auto b = find_brick(MultiGraph(make_complete(k + 1)), k);
        ASSERT_TRUE(b.has_value());
        EXPECT_EQ(b->shape, BrickShape::clique);
        EXPECT_EQ(b->vertices, all_below(k + 1));
        EXPECT_EQ(b->multiplicity, 1);
    }
    // k-fold doubled edge is the two-vertex clique brick
    EXPECT_TRUE(find_brick(MultiGraph(2, {{0, 1, 3}}), 3).has_value());
    EXPECT_FALSE(find_brick(MultiGraph(make_cycle(5)), 3).has_value());
    EXPECT_THROW(find_brick(MultiGraph(make_cycle(5)), 2), contract_violation);
}

TEST(Brick, ReadingsDiffer)
{
    // C4 with doubled edges and one tripled edge: a 4-brick only if extra copies may be ignored
    MultiGraph g(4, {{0, 1, 3}, {1, 2, 2}, {2, 3, 2}, {0, 3, 2}});
    auto sub = find_brick(g, 4, BrickReading::sub_multiplicity);
    ASSERT_TRUE(sub.has_value());
    EXPECT_EQ(sub->shape, BrickShape::cycle);
    EXPECT_EQ(sub->order.size(), 4u);
    EXPECT_FALSE(find_brick(g, 4, BrickReading::exact_multiplicity).has_value());
}
