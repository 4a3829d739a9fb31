#pragma once

// JSON encodings. Rationals are "p/q" strings (plain "p" when integral).

#include "ktile/io.hpp"
#include "ktile/thresholds.hpp"
#include "ktile/tiling.hpp"

#include <json.hpp>

namespace ktile {

using json = nlohmann::ordered_json;

inline auto rational_json(const rational & q) -> json { return to_string(q); }

inline auto rational_from_json(const json & j) -> rational
{
    if (j.is_number_integer())
        return rational(j.get<long long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected a rational as \"p/q\" or an integer");
}

inline auto params_json(const TilingParams & p) -> json
{
    return {{"h", p.h}, {"r", p.r}, {"sigma", p.sigma}, {"omega", rational_json(p.omega)}, {"chi_cr", rational_json(p.chi_cr)}};
}

inline auto line_json(const BoundLine & l) -> json
{
    return {{"intercept", rational_json(l.intercept)},
            {"slope", rational_json(l.slope)},
            {"cutoff", rational_json(l.cutoff)},
            {"slack", rational_json(l.slack)},
            {"plateau", rational_json(l.plateau)}};
}

inline auto graph_json(const Graph & g) -> json
{
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"n", g.size()}, {"edges", std::move(edges)}};
}

inline auto graph_from_json(const json & j) -> Graph
{
    if (j.is_string())
        return parse_graph6(j.get<std::string>());
    Graph g(j.at("n").get<std::size_t>());
    for (auto & e : j.at("edges"))
        g.add_edge(e.at(0).get<vertex>(), e.at(1).get<vertex>());
    return g;
}

/// A pattern is a graph6 string, {"bottle": [r, neck, width]},
/// {"multipartite": [sizes...]}, or {"graph": <graph>, "classes": [[...], ...]}
/// with classes optional.
inline auto pattern_from_json(const json & j) -> PartitionedGraph
{
    if (j.is_string())
        return {parse_graph6(j.get<std::string>()), {}};
    if (j.contains("bottle")) {
        auto & b = j.at("bottle");
        return bottle_graph(b.at(0).get<std::size_t>(), b.at(1).get<std::size_t>(), b.at(2).get<std::size_t>());
    }
    if (j.contains("multipartite"))
        return complete_multipartite(j.at("multipartite").get<std::vector<std::size_t>>());
    PartitionedGraph p{graph_from_json(j.at("graph")), {}};
    if (j.contains("classes"))
        p.classes = j.at("classes").get<std::vector<std::vector<vertex>>>();
    if (p.has_classes() && ! is_partition(p.graph.size(), p.classes))
        throw std::invalid_argument("pattern classes do not partition its vertices");
    return p;
}

inline auto pattern_json(const PartitionedGraph & p) -> json
{
    json j = {{"graph", graph_json(p.graph)}};
    if (p.has_classes())
        j["classes"] = p.classes;
    return j;
}

inline auto tiling_json(const Tiling & t) -> json
{
    json pats = json::array(), copies = json::array();
    for (auto & p : t.patterns)
        pats.push_back(pattern_json(p));
    for (auto & e : t.copies)
        copies.push_back({{"pattern", e.pattern}, {"image", e.image}});
    return {{"patterns", std::move(pats)}, {"copies", std::move(copies)}};
}

inline auto tiling_from_json(const json & j) -> Tiling
{
    Tiling t;
    for (auto & p : j.at("patterns"))
        t.patterns.push_back(pattern_from_json(p));
    for (auto & c : j.at("copies"))
        t.copies.push_back(Embedding{c.value("pattern", std::size_t{0}), c.at("image").get<std::vector<vertex>>()});
    return t;
}

} // namespace ktile
