#include <sstream>

#include <gtest/gtest.h>

#include <dpcolor/constructions.hpp>
#include <dpcolor/verify.hpp>

#include "support/oracles.hpp"

using namespace dpcolor;
namespace t = dpcolor::testing;

TEST(CandidateFilter, NamedExamples)
{
    auto k4 = candidate_filter(make_complete(4), 3);
    EXPECT_FALSE(k4.accepted);
    EXPECT_EQ(k4.reason, "contains K_{k+1}");
    EXPECT_TRUE(candidate_filter(make_wheel(4), 3).accepted);
    auto dir = candidate_filter(make_dirac(3, 1), 3);
    EXPECT_FALSE(dir.accepted);
    EXPECT_EQ(dir.reason, "k-Dirac");
    EXPECT_TRUE(candidate_filter(make_dirac(3, 1), 3, false).accepted);
    EXPECT_EQ(candidate_filter(make_cycle(5), 3).reason, "min degree below k");
    EXPECT_EQ(candidate_filter(SimpleGraph(2), 3).reason, "disconnected");
    EXPECT_EQ(candidate_filter(make_complete(5).without_edge(0, 1), 3).reason, "2m exceeds kn + k - 2");
}

TEST(Sweep, FindsDiracWitnessWhenKept)
{
    SweepConfig cfg;
    cfg.keep_dirac = true;
    auto rows = verify_dirac_bound(cfg, std::vector<std::string>{emit_graph6(make_dirac(3, 1))});
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_TRUE(rows[0].critical_cover_found);
    EXPECT_TRUE(rows[0].is_dirac);
    EXPECT_EQ(rows[0].deficit, 0);
    EXPECT_TRUE(recheck_row(rows[0]));
    Cover witness = cover_from_json(json::parse(rows[0].witness_cover));
    EXPECT_TRUE(t::brute_force_critical(witness));

    cfg.keep_dirac = false;
    EXPECT_TRUE(verify_dirac_bound(cfg, std::vector<std::string>{emit_graph6(make_dirac(3, 1))}).empty());
}

TEST(Sweep, WheelHasNoCriticalCover)
{
    SweepConfig cfg;
    auto rows = verify_dirac_bound(cfg, std::vector<std::string>{"", emit_graph6(make_wheel(4)), "C~"});
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_FALSE(rows[0].critical_cover_found);
    EXPECT_EQ(rows[0].covers_examined, 1296u);
    EXPECT_EQ(rows[0].deficit, 0);
    EXPECT_EQ(rows[0].seconds, 0.0);
    EXPECT_TRUE(recheck_row(rows[0]));
}

TEST(Sweep, EmptyStreamGivesEmptyReport)
{
    std::istringstream in("");
    auto rows = verify_dirac_bound(SweepConfig{}, in);
    EXPECT_TRUE(rows.empty());
    std::ostringstream out;
    emit_report(rows, ReportFormat::csv, out);
    std::string header;
    for (std::size_t i = 0; i < report_columns().size(); ++i)
        header += (i ? "," : "") + report_columns()[i];
    EXPECT_EQ(out.str(), header + "\r\n");
    std::ostringstream js;
    emit_report(rows, ReportFormat::json, js);
    EXPECT_EQ(json::parse(js.str()), json::array());
}

TEST(Sweep, ErrorsNameTheLine)
{
    try {
        verify_dirac_bound(SweepConfig{}, std::vector<std::string>{"C~", "C"});
        FAIL();
    } catch (const sweep_error& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
    SweepConfig small;
    small.max_n = 4;
    EXPECT_THROW(verify_dirac_bound(small, std::vector<std::string>{emit_graph6(make_wheel(4))}), sweep_error);
    // rejected graphs never hit the limit
    EXPECT_NO_THROW(verify_dirac_bound(small, std::vector<std::string>{emit_graph6(make_cycle(9))}));
    SweepConfig k2;
    k2.k = 2;
    EXPECT_THROW(verify_dirac_bound(k2, std::vector<std::string>{}), sweep_error);
}

TEST(Sweep, DeterministicAcrossJobs)
{
    std::vector<std::string> lines;
    for (const auto& g : t::connected_graphs(6, 3, 4, 10))
        lines.push_back(emit_graph6(g));
    lines.push_back(emit_graph6(make_dirac(3, 2)));
    SweepConfig one;
    one.keep_dirac = true;
    SweepConfig many = one;
    many.jobs = 3;
    auto a = verify_dirac_bound(one, lines);
    auto b = verify_dirac_bound(many, lines);
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, b);
    std::ostringstream sa, sb;
    emit_report(a, ReportFormat::csv, sa);
    emit_report(b, ReportFormat::csv, sb);
    EXPECT_EQ(sa.str(), sb.str());
}

TEST(Report, RoundTrips)
{
    SweepConfig cfg;
    cfg.keep_dirac = true;
    cfg.record_timing = true;
    auto rows = verify_dirac_bound(cfg, std::vector<std::string>{emit_graph6(make_wheel(4)), emit_graph6(make_dirac(3, 1))});
    ASSERT_EQ(rows.size(), 2u);
    for (auto& r : rows)
        r.seconds = std::round(r.seconds * 1e6) / 1e6;

    std::ostringstream csv;
    emit_report(rows, ReportFormat::csv, csv);
    std::istringstream csv_in(csv.str());
    EXPECT_EQ(parse_report_csv(csv_in), rows);
    // the witness JSON contains commas and quotes, so it must be quoted
    EXPECT_NE(csv.str().find("\"{\"\""), std::string::npos);

    std::ostringstream js;
    emit_report(rows, ReportFormat::json, js);
    std::istringstream js_in(js.str());
    EXPECT_EQ(parse_report_json(js_in), rows);
    auto parsed = json::parse(js.str());
    EXPECT_TRUE(parsed[0]["witness_cover"].is_null());
    EXPECT_TRUE(parsed[1]["witness_cover"].is_object());
}

TEST(Report, RecheckCatchesForgedRows)
{
    SweepConfig cfg;
    cfg.keep_dirac = true;
    auto rows = verify_dirac_bound(cfg, std::vector<std::string>{emit_graph6(make_dirac(3, 1))});
    ASSERT_EQ(rows.size(), 1u);
    auto forged = rows[0];
    auto [h1, h2] = make_c4_covers();
    forged.witness_cover = cover_to_json(h2).dump();
    EXPECT_FALSE(recheck_row(forged));
    auto colorable = rows[0];
    colorable.witness_cover = cover_to_json(identity_cover(make_dirac(3, 1), 4)).dump();
    EXPECT_FALSE(recheck_row(colorable));
}

TEST(CriticalStructure, NamedExamples)
{
    auto k4 = verify_critical_structure(identity_cover(make_complete(4), 3));
    EXPECT_TRUE(k4.in_scope);
    EXPECT_TRUE(k4.min_degree_at_least_k);
    EXPECT_TRUE(k4.d_is_gdp_forest);
    EXPECT_EQ(k4.D.size(), 4u);

    auto [h1, h2] = make_c4_covers();
    auto c4 = verify_critical_structure(h2);
    EXPECT_FALSE(c4.in_scope);
    EXPECT_TRUE(c4.d_is_gdp_forest);

    auto ks = make_ks_example(3);
    auto r = verify_critical_structure(cover_from_lists(ks.graph, ks.lists));
    EXPECT_TRUE(r.min_degree_at_least_k);
    EXPECT_TRUE(r.d_is_gdp_forest);
    EXPECT_EQ(r.epsilon_total, 2);
    ASSERT_EQ(r.components.size(), 2u);
    for (const auto& b : r.components) {
        EXPECT_TRUE(b.is_kk);
        EXPECT_TRUE(b.bound_applicable);
        EXPECT_TRUE(b.bound_holds);
        EXPECT_EQ(b.edges_to_complement, 3);
    }

    auto multi = verify_critical_structure(make_multigraph_counterexample(3));
    EXPECT_TRUE(multi.min_degree_at_least_k);
    EXPECT_TRUE(multi.d_is_gdp_forest);
    EXPECT_EQ(multi.epsilon_total, 1);

    EXPECT_THROW(verify_critical_structure(h1), contract_violation);
}
