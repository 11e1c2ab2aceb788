#pragma once

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "constructions.hpp"
#include "cover_json.hpp"
#include "enumerate.hpp"
#include "recheck.hpp"
#include "recognizers.hpp"
#include "solver.hpp"

namespace dpcolor
{

class sweep_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct FilterResult {
    bool accepted = false;
    std::string reason;
};

/// Graphs from which a counterexample to the sharp DP-Dirac bound would have
/// to come: connected, min degree >= k, 2m <= kn + k - 2, K_{k+1}-free and
/// not k-Dirac.
inline FilterResult candidate_filter(const SimpleGraph& g, int k, bool exclude_dirac = true)
{
    if (g.n() == 0 || !g.connected())
        return {false, "disconnected"};
    if (g.min_degree() < k)
        return {false, "min degree below k"};
    if (2 * g.m() > k * g.n() + k - 2)
        return {false, "2m exceeds kn + k - 2"};
    if (contains_clique(g, k + 1))
        return {false, "contains K_{k+1}"};
    if (exclude_dirac && k >= 3 && recognize_dirac(g, k))
        return {false, "k-Dirac"};
    return {true, {}};
}

inline int default_max_n(int k)
{
    if (k <= 3)
        return 9;
    if (k == 4)
        return 7;
    return k + 2;
}

struct SweepConfig {
    int k = 3;
    Regime regime = Regime::perfect;
    int max_n = 9;
    int jobs = 1;
    /// Keep k-Dirac graphs in the candidate set.
    bool keep_dirac = false;
    /// Fill DiracReportRow::seconds; off by default so reports are reproducible.
    bool record_timing = false;
};

struct DiracReportRow {
    std::string graph6;
    int n = 0;
    int m = 0;
    /// 2m - kn - (k - 2)
    int deficit = 0;
    bool has_big_clique = false;
    bool is_dirac = false;
    Regime regime = Regime::perfect;
    bool critical_cover_found = false;
    /// Cover JSON of the critical cover, empty when none was found.
    std::string witness_cover;
    std::uint64_t covers_examined = 0;
    double seconds = 0.0;

    friend bool operator==(const DiracReportRow&, const DiracReportRow&) = default;
};

inline DiracReportRow examine_candidate(const SimpleGraph& g, const std::string& g6, const SweepConfig& cfg)
{
    auto start = std::chrono::steady_clock::now();
    DiracReportRow row;
    row.graph6 = g6;
    row.n = g.n();
    row.m = g.m();
    row.deficit = 2 * g.m() - cfg.k * g.n() - (cfg.k - 2);
    row.has_big_clique = contains_clique(g, cfg.k + 1);
    row.is_dirac = recognize_dirac(g, cfg.k).has_value();
    row.regime = cfg.regime;
    row.covers_examined = for_each_cover(g, cfg.k, cfg.regime, [&](const Cover& c) {
        if (!is_critical(c))
            return true;
        row.critical_cover_found = true;
        row.witness_cover = cover_to_json(c).dump();
        return false;
    });
    if (cfg.record_timing)
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

/// Runs the sharp DP-Dirac check over graph6 lines. One row per accepted
/// candidate, in input order regardless of cfg.jobs. Blank lines are skipped.
inline std::vector<DiracReportRow> verify_dirac_bound(const SweepConfig& cfg, const std::vector<std::string>& lines)
{
    if (cfg.k < 3)
        throw sweep_error("verify_dirac_bound: k must be at least 3");

    struct Unit {
        std::size_t line;
        SimpleGraph graph;
        std::string g6;
    };
    std::vector<Unit> units;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string s = lines[i];
        while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' '))
            s.pop_back();
        if (s.empty())
            continue;
        SimpleGraph g;
        try {
            g = parse_graph6(s);
        } catch (const parse_error& e) {
            throw sweep_error("line " + std::to_string(i + 1) + ": " + e.what());
        }
        if (!candidate_filter(g, cfg.k, !cfg.keep_dirac).accepted)
            continue;
        if (g.n() > cfg.max_n)
            throw sweep_error("line " + std::to_string(i + 1) + ": n = " + std::to_string(g.n()) +
                              " exceeds the safety limit " + std::to_string(cfg.max_n));
        units.push_back({i + 1, std::move(g), std::move(s)});
    }

    std::vector<DiracReportRow> rows(units.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < units.size(); i = next++) {
            try {
                rows[i] = examine_candidate(units[i].graph, units[i].g6, cfg);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    return rows;
}

inline std::vector<DiracReportRow> verify_dirac_bound(const SweepConfig& cfg, std::istream& in)
{
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    if (in.bad())
        throw sweep_error("read error on graph stream");
    return verify_dirac_bound(cfg, lines);
}

/// Re-checks a refutation row from its serialized witness alone.
inline bool recheck_row(const DiracReportRow& row)
{
    if (!row.critical_cover_found)
        return true;
    Cover c = cover_from_json(json::parse(row.witness_cover));
    if (emit_graph6(c.graph()) != row.graph6 || c.uniform_k() == std::nullopt)
        return false;
    if (validate_cover(c))
        return false;
    return ExhaustiveChecker(c).critical();
}

// ---------------------------------------------------------------- reports

enum class ReportFormat { csv, json };

inline const std::vector<std::string>& report_columns()
{
    static const std::vector<std::string> cols{"graph6",       "n",        "m",
                                               "deficit",      "has_big_clique",
                                               "is_dirac",     "regime",   "critical_cover_found",
                                               "witness_cover", "covers_examined", "seconds"};
    return cols;
}

namespace detail
{
inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

inline std::string format_seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", s);
    return buf;
}

inline std::vector<std::vector<std::string>> parse_csv(std::istream& in)
{
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false, any = false;
    char ch;
    while (in.get(ch)) {
        any = true;
        if (quoted) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    in.get();
                    field += '"';
                } else {
                    quoted = false;
                }
            } else {
                field += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            record.push_back(std::move(field));
            field.clear();
        } else if (ch == '\n' || ch == '\r') {
            if (ch == '\r' && in.peek() == '\n')
                in.get();
            record.push_back(std::move(field));
            field.clear();
            records.push_back(std::move(record));
            record.clear();
            any = false;
        } else {
            field += ch;
        }
    }
    if (any) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
    }
    return records;
}

inline bool parse_bool(const std::string& s)
{
    if (s == "true")
        return true;
    if (s == "false")
        return false;
    throw std::runtime_error("report: expected true/false, got '" + s + "'");
}
} // namespace detail

inline json row_to_json(const DiracReportRow& r)
{
    return json{{"graph6", r.graph6},
                {"n", r.n},
                {"m", r.m},
                {"deficit", r.deficit},
                {"has_big_clique", r.has_big_clique},
                {"is_dirac", r.is_dirac},
                {"regime", std::string(to_string(r.regime))},
                {"critical_cover_found", r.critical_cover_found},
                {"witness_cover", r.witness_cover.empty() ? json(nullptr) : json::parse(r.witness_cover)},
                {"covers_examined", r.covers_examined},
                {"seconds", r.seconds}};
}

inline DiracReportRow row_from_json(const json& j)
{
    DiracReportRow r;
    r.graph6 = j.at("graph6").get<std::string>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.deficit = j.at("deficit").get<int>();
    r.has_big_clique = j.at("has_big_clique").get<bool>();
    r.is_dirac = j.at("is_dirac").get<bool>();
    auto reg = regime_from_string(j.at("regime").get<std::string>());
    if (!reg)
        throw std::runtime_error("report: unknown regime");
    r.regime = *reg;
    r.critical_cover_found = j.at("critical_cover_found").get<bool>();
    if (!j.at("witness_cover").is_null())
        r.witness_cover = j.at("witness_cover").dump();
    r.covers_examined = j.at("covers_examined").get<std::uint64_t>();
    r.seconds = j.at("seconds").get<double>();
    return r;
}

inline void emit_report(const std::vector<DiracReportRow>& rows, ReportFormat format, std::ostream& out)
{
    if (format == ReportFormat::json) {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back(row_to_json(r));
        out << arr.dump(2) << '\n';
    } else {
        const auto& cols = report_columns();
        for (std::size_t i = 0; i < cols.size(); ++i)
            out << (i ? "," : "") << cols[i];
        out << "\r\n";
        for (const auto& r : rows) {
            out << detail::csv_field(r.graph6) << ',' << r.n << ',' << r.m << ',' << r.deficit << ','
                << (r.has_big_clique ? "true" : "false") << ',' << (r.is_dirac ? "true" : "false") << ','
                << to_string(r.regime) << ',' << (r.critical_cover_found ? "true" : "false") << ','
                << detail::csv_field(r.witness_cover) << ',' << r.covers_examined << ','
                << detail::format_seconds(r.seconds) << "\r\n";
        }
    }
    if (!out)
        throw std::runtime_error("report: write failed");
}

inline std::vector<DiracReportRow> parse_report_csv(std::istream& in)
{
    auto records = detail::parse_csv(in);
    if (records.empty() || records.front() != report_columns())
        throw std::runtime_error("report: missing or unexpected CSV header");
    std::vector<DiracReportRow> rows;
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto& f = records[i];
        if (f.size() != report_columns().size())
            throw std::runtime_error("report: row " + std::to_string(i) + " has the wrong field count");
        DiracReportRow r;
        r.graph6 = f[0];
        r.n = std::stoi(f[1]);
        r.m = std::stoi(f[2]);
        r.deficit = std::stoi(f[3]);
        r.has_big_clique = detail::parse_bool(f[4]);
        r.is_dirac = detail::parse_bool(f[5]);
        auto reg = regime_from_string(f[6]);
        if (!reg)
            throw std::runtime_error("report: unknown regime '" + f[6] + "'");
        r.regime = *reg;
        r.critical_cover_found = detail::parse_bool(f[7]);
        r.witness_cover = f[8];
        r.covers_examined = std::stoull(f[9]);
        r.seconds = std::stod(f[10]);
        rows.push_back(std::move(r));
    }
    return rows;
}

inline std::vector<DiracReportRow> parse_report_json(std::istream& in)
{
    std::vector<DiracReportRow> rows;
    for (const auto& j : json::parse(in))
        rows.push_back(row_from_json(j));
    return rows;
}

// ------------------------------------------------------- critical structure

struct ComponentBound {
    std::vector<vertex> vertices;
    /// |E(U, V \ D)|, counted with multiplicity.
    int edges_to_complement = 0;
    bool is_k1 = false;
    bool is_kk = false;
    /// G[U] is a GDP-tree with max degree <= k and no K_{k+1}.
    bool bound_applicable = false;
    /// edges_to_complement >= k, with equality only for K_1 or K_k.
    bool bound_holds = false;
};

/// Structure a critical k-fold cover forces on its base graph.
struct StructureReport {
    int k = 0;
    /// The structure results for low-degree vertices need k >= 3.
    bool in_scope = false;
    std::vector<vertex> D;
    int min_degree = 0;
    bool min_degree_at_least_k = false;
    bool d_is_gdp_forest = false;
    int epsilon_total = 0;
    std::vector<ComponentBound> components;
};

inline StructureReport verify_critical_structure(const Cover& c)
{
    auto k = c.uniform_k();
    if (!k)
        throw contract_violation("verify_critical_structure: cover must be k-fold");
    if (!is_critical(c))
        throw contract_violation("verify_critical_structure: cover is not critical");
    const SimpleGraph& g = c.graph();
    const MultiGraph& mg = c.multigraph();

    StructureReport r;
    r.k = *k;
    r.in_scope = *k >= 3;
    vertex_set D = 0;
    r.min_degree = g.n() ? mg.degree(0) : 0;
    for (int u = 0; u < g.n(); ++u) {
        int d = mg.degree(u);
        r.min_degree = std::min(r.min_degree, d);
        r.epsilon_total += d - *k;
        if (d == *k)
            D |= bit(u);
    }
    r.D = to_vector(D);
    r.min_degree_at_least_k = r.min_degree >= *k;
    SimpleGraph gd = g.induced(D);
    r.d_is_gdp_forest = is_gdp_forest(gd);

    const vertex_set outside = g.vertices() & ~D;
    for (vertex_set U : g.components(D)) {
        ComponentBound b;
        b.vertices = to_vector(U);
        for_each_bit(U, [&](int u) {
            for_each_bit(outside, [&](int v) { b.edges_to_complement += mg.multiplicity(u, v); });
        });
        SimpleGraph gu = g.induced(U);
        b.is_k1 = gu.n() == 1;
        b.is_kk = gu.n() == *k && is_complete(gu);
        b.bound_applicable = is_gdp_forest(gu) && gu.max_degree() <= *k && !contains_clique(gu, *k + 1);
        b.bound_holds = b.edges_to_complement > *k || (b.edges_to_complement == *k && (b.is_k1 || b.is_kk));
        r.components.push_back(std::move(b));
    }
    return r;
}

inline json structure_to_json(const StructureReport& r)
{
    json comps = json::array();
    for (const auto& b : r.components)
        comps.push_back({{"vertices", b.vertices},
                         {"edges_to_complement", b.edges_to_complement},
                         {"is_k1", b.is_k1},
                         {"is_kk", b.is_kk},
                         {"bound_applicable", b.bound_applicable},
                         {"bound_holds", b.bound_holds}});
    return json{{"k", r.k},
                {"in_scope", r.in_scope},
                {"D", r.D},
                {"min_degree", r.min_degree},
                {"min_degree_at_least_k", r.min_degree_at_least_k},
                {"d_is_gdp_forest", r.d_is_gdp_forest},
                {"epsilon_total", r.epsilon_total},
                {"components", comps}};
}

} // namespace dpcolor
