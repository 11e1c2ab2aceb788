#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include <dpcolor/dpcolor.hpp>

using namespace dpcolor;

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_refuted = 2;

Cover load_cover(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    Cover c = cover_from_json(json::parse(in));
    if (auto bad = validate_cover(c))
        throw std::runtime_error("invalid cover: " + *bad);
    return c;
}

bool ends_with(const std::string& s, const std::string& suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

json witness_to_json(const DiracWitness& w)
{
    json att = json::object();
    for (auto [v, x] : w.attachment)
        att[std::to_string(v)] = x;
    return {{"k", w.k}, {"V1", w.V1}, {"V2", w.V2}, {"V3", {w.V3.first, w.V3.second}}, {"attachment", att}};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact DP-coloring (correspondence coloring) toolkit"};
    app.require_subcommand(1);

    std::string cover_path, graph6, what, kind, graphs_path, out_path, regime_name = "perfect";
    int k = 3, max_k = 0, split = 1, r = 4, jobs = 1, max_n = 0;
    bool keep_dirac = false, timing = false;

    auto* solve = app.add_subcommand("solve", "Find a coloring of a cover");
    solve->add_option("--cover", cover_path, "Cover JSON file")->required();

    auto* critical = app.add_subcommand("critical", "Decide whether a cover is critical");
    critical->add_option("--cover", cover_path, "Cover JSON file")->required();

    auto* chi = app.add_subcommand("chi-dp", "DP-chromatic number of a graph");
    chi->add_option("--graph", graph6, "graph6 string")->required();
    chi->add_option("--max-k", max_k, "Give up above this value");

    auto* recog = app.add_subcommand("recognize", "Test membership in a graph class");
    recog->add_option("--graph", graph6, "graph6 string")->required();
    recog->add_option("--what", what, "Class")->required()->check(CLI::IsMember({"gallai", "gdp", "dirac"}));
    recog->add_option("--k", k, "k for the Dirac family");

    auto* construct = app.add_subcommand("construct", "Emit a named construction");
    construct->add_option("kind", kind, "Construction")
        ->required()
        ->check(CLI::IsMember({"dirac", "ks", "c4-covers", "wheel", "multi-counterexample"}));
    construct->add_option("--k", k, "k");
    construct->add_option("--split", split, "Number of V1 vertices on the first V3 vertex (dirac)");
    construct->add_option("--r", r, "Rim length (wheel)");

    auto* enumerate = app.add_subcommand("enumerate-covers", "Stream gauge-fixed k-fold covers as JSON lines");
    enumerate->add_option("--graph", graph6, "graph6 string")->required();
    enumerate->add_option("--k", k, "List size")->required();
    enumerate->add_option("--regime", regime_name, "perfect|partial")->check(CLI::IsMember({"perfect", "partial"}));

    auto* verify = app.add_subcommand("verify-dirac", "Sweep a graph6 stream for critical covers");
    verify->add_option("--k", k, "List size")->required();
    verify->add_option("--graphs", graphs_path, "graph6 file, one graph per line")->required();
    verify->add_option("--regime", regime_name, "perfect|partial")->check(CLI::IsMember({"perfect", "partial"}));
    verify->add_option("--jobs", jobs, "Worker threads");
    verify->add_option("--out", out_path, "Report path (.csv or .json)")->required();
    verify->add_option("--max-n", max_n, "Override the vertex-count safety limit");
    verify->add_flag("--keep-dirac", keep_dirac, "Do not filter out k-Dirac graphs");
    verify->add_flag("--timing", timing, "Record per-graph wall time");

    auto* structure = app.add_subcommand("verify-structure", "Report the structure of a critical cover");
    structure->add_option("--cover", cover_path, "Cover JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        if (*solve) {
            Cover c = load_cover(cover_path);
            auto col = find_coloring(c, c.graph().vertices());
            std::cout << (col ? coloring_to_json(*col) : json(nullptr)).dump() << '\n';
        } else if (*critical) {
            std::cout << (is_critical(load_cover(cover_path)) ? "true" : "false") << '\n';
        } else if (*chi) {
            auto v = chi_dp(parse_graph6(graph6), max_k > 0 ? std::optional<int>(max_k) : std::nullopt);
            if (v)
                std::cout << *v << '\n';
            else
                std::cout << ">" << max_k << '\n';
        } else if (*recog) {
            SimpleGraph g = parse_graph6(graph6);
            if (what == "gallai") {
                std::cout << (is_gallai_forest(g) ? "true" : "false") << '\n';
            } else if (what == "gdp") {
                std::cout << (is_gdp_forest(g) ? "true" : "false") << '\n';
            } else {
                auto w = recognize_dirac(g, k);
                std::cout << (w ? witness_to_json(*w).dump() : "false") << '\n';
            }
        } else if (*construct) {
            if (kind == "dirac") {
                std::cout << emit_graph6(make_dirac(k, split)) << '\n';
            } else if (kind == "wheel") {
                std::cout << emit_graph6(make_wheel(r)) << '\n';
            } else if (kind == "ks") {
                auto inst = make_ks_example(k);
                std::cout << cover_to_json(cover_from_lists(inst.graph, inst.lists)).dump() << '\n';
            } else if (kind == "c4-covers") {
                auto [h1, h2] = make_c4_covers();
                std::cout << json::array({cover_to_json(h1), cover_to_json(h2)}).dump() << '\n';
            } else {
                std::cout << cover_to_json(make_multigraph_counterexample(k)).dump() << '\n';
            }
        } else if (*enumerate) {
            CoverEnumerator e(parse_graph6(graph6), k, *regime_from_string(regime_name));
            while (auto c = e.next())
                std::cout << cover_to_json(*c).dump() << '\n';
        } else if (*verify) {
            SweepConfig cfg;
            cfg.k = k;
            cfg.regime = *regime_from_string(regime_name);
            cfg.jobs = jobs;
            cfg.keep_dirac = keep_dirac;
            cfg.record_timing = timing;
            cfg.max_n = default_max_n(k);
            if (const char* env = std::getenv("DPCOLOR_MAX_N"))
                cfg.max_n = std::stoi(env);
            if (max_n > 0)
                cfg.max_n = max_n;

            std::ifstream in(graphs_path);
            if (!in)
                throw std::runtime_error("cannot open " + graphs_path);
            auto rows = verify_dirac_bound(cfg, in);

            std::ofstream out(out_path, std::ios::binary);
            if (!out)
                throw std::runtime_error("cannot write " + out_path);
            emit_report(rows, ends_with(out_path, ".json") ? ReportFormat::json : ReportFormat::csv, out);

            int refuted = 0;
            for (const auto& row : rows)
                refuted += row.critical_cover_found;
            std::cerr << rows.size() << " candidates examined, " << refuted << " with a critical cover\n";
            return refuted ? exit_refuted : exit_ok;
        } else if (*structure) {
            std::cout << structure_to_json(verify_critical_structure(load_cover(cover_path))).dump(2) << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_ok;
}
