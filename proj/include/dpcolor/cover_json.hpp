#pragma once

#include <charconv>
#include <string>

#include <nlohmann/json.hpp>

#include "cover.hpp"
#include "graph6.hpp"

namespace dpcolor
{

using json = nlohmann::json;

// Cover files:
//   { "k": int, "graph6": str | "multigraph": {"n": int, "edges": [[u,v,mult],...]},
//     "matchings": { "u-v" | "u-v#t": [[i,j],...] } }
// Covers with non-uniform lists add "list_sizes": [...] and report the largest size as "k".

inline std::string edge_key_string(const EdgeKey& e, bool multigraph)
{
    std::string s = std::to_string(e.u) + "-" + std::to_string(e.v);
    if (multigraph)
        s += "#" + std::to_string(e.parallel);
    return s;
}

inline EdgeKey parse_edge_key(const std::string& s)
{
    EdgeKey e;
    const char* p = s.data();
    const char* end = s.data() + s.size();
    auto read = [&](int& out) {
        auto r = std::from_chars(p, end, out);
        if (r.ec != std::errc())
            throw std::runtime_error("cover JSON: malformed matching key '" + s + "'");
        p = r.ptr;
    };
    read(e.u);
    if (p == end || *p != '-')
        throw std::runtime_error("cover JSON: malformed matching key '" + s + "'");
    ++p;
    read(e.v);
    if (p != end) {
        if (*p != '#')
            throw std::runtime_error("cover JSON: malformed matching key '" + s + "'");
        ++p;
        read(e.parallel);
    }
    if (p != end)
        throw std::runtime_error("cover JSON: malformed matching key '" + s + "'");
    return e;
}

inline json cover_to_json(const Cover& c)
{
    json j;
    auto k = c.uniform_k();
    int max_size = 0;
    for (int s : c.list_sizes())
        max_size = std::max(max_size, s);
    j["k"] = k ? *k : max_size;
    if (!k)
        j["list_sizes"] = c.list_sizes();
    if (c.is_multigraph()) {
        json edges = json::array();
        for (auto [u, v, t] : c.multigraph().edges())
            edges.push_back({u, v, t});
        j["multigraph"] = {{"n", c.n()}, {"edges", edges}};
    } else {
        j["graph6"] = emit_graph6(c.graph());
    }
    json m = json::object();
    for (const auto& [key, pairs] : c.matchings()) {
        json list = json::array();
        for (auto [a, b] : pairs)
            list.push_back({a, b});
        m[edge_key_string(key, c.is_multigraph())] = list;
    }
    j["matchings"] = m;
    return j;
}

inline Cover cover_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("k"))
        throw std::runtime_error("cover JSON: missing field 'k'");
    const int k = j.at("k").get<int>();

    std::map<EdgeKey, MatchingPairs> m;
    if (j.contains("matchings"))
        for (const auto& [key, list] : j.at("matchings").items()) {
            MatchingPairs pairs;
            for (const auto& p : list)
                pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
            m[parse_edge_key(key)] = std::move(pairs);
        }

    auto sizes_for = [&](int n) {
        if (j.contains("list_sizes")) {
            auto sizes = j.at("list_sizes").get<std::vector<int>>();
            if (static_cast<int>(sizes.size()) != n)
                throw std::runtime_error("cover JSON: list_sizes length does not match vertex count");
            return sizes;
        }
        return std::vector<int>(n, k);
    };

    if (j.contains("graph6")) {
        SimpleGraph g = parse_graph6(j.at("graph6").get<std::string>());
        auto sizes = sizes_for(g.n());
        return Cover(std::move(g), std::move(sizes), std::move(m));
    }
    if (j.contains("multigraph")) {
        const auto& mg = j.at("multigraph");
        std::vector<std::tuple<vertex, vertex, int>> edges;
        for (const auto& e : mg.at("edges"))
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>());
        MultiGraph g(mg.at("n").get<int>(), edges);
        auto sizes = sizes_for(g.n());
        return Cover(std::move(g), std::move(sizes), std::move(m));
    }
    throw std::runtime_error("cover JSON: needs 'graph6' or 'multigraph'");
}

/// [[vertex, color], ...] sorted by vertex.
inline json coloring_to_json(const PartialColoring& p)
{
    json out = json::array();
    for (int u = 0; u < p.n(); ++u)
        if (p.has(u))
            out.push_back({u, p.pick(u)});
    return out;
}

inline PartialColoring coloring_from_json(const json& j, int n)
{
    PartialColoring p(n);
    for (const auto& e : j) {
        int u = e.at(0).get<int>(), c = e.at(1).get<int>();
        if (u < 0 || u >= n)
            throw std::runtime_error("coloring JSON: vertex out of range");
        p.assign(u, c);
    }
    return p;
}

} // namespace dpcolor
