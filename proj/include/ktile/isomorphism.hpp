#pragma once

// Graph equality up to relabelling. Exhaustive, so only offered for small
// graphs; larger graphs fall back to labelled equality.

#include "ktile/graph.hpp"

#include <map>

namespace ktile {

inline constexpr std::size_t max_isomorphism_order = 12;

namespace detail {

/// Colour refinement: repeatedly split colour classes by neighbour-colour multisets.
inline auto refine_colours(const Graph & g) -> std::vector<std::size_t>
{
    auto n = g.size();
    std::vector<std::size_t> colour(n);
    for (vertex v = 0; v < n; ++v)
        colour[v] = g.degree(v);

    for (std::size_t round = 0; round < n; ++round) {
        std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
        std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
        for (vertex v = 0; v < n; ++v) {
            std::vector<std::size_t> around;
            g.neighbours(v).for_each([&](vertex u) { around.push_back(colour[u]); });
            std::sort(around.begin(), around.end());
            sig[v] = {colour[v], std::move(around)};
            ids.emplace(sig[v], 0);
        }
        std::size_t next = 0;
        for (auto & [k, id] : ids)
            id = next++;
        std::vector<std::size_t> fresh(n);
        for (vertex v = 0; v < n; ++v)
            fresh[v] = ids[sig[v]];
        bool stable = true;
        for (vertex u = 0; u < n && stable; ++u)
            for (vertex v = 0; v < n && stable; ++v)
                if ((colour[u] == colour[v]) != (fresh[u] == fresh[v]))
                    stable = false;
        colour = std::move(fresh);
        if (stable)
            break;
    }
    return colour;
}

} // namespace detail

/// Exhaustive isomorphism test for graphs with at most max_isomorphism_order
/// vertices; labelled equality above that.
inline auto isomorphic(const Graph & a, const Graph & b) -> bool
{
    if (a.size() != b.size() || a.edge_count() != b.edge_count())
        return false;
    if (a.sorted_degrees() != b.sorted_degrees())
        return false;
    if (a.size() > max_isomorphism_order)
        return a == b;

    // Refine both graphs jointly so colour ids are comparable.
    auto n = a.size();
    Graph both(2 * n);
    for (auto [u, v] : a.edges())
        both.add_edge(u, v);
    for (auto [u, v] : b.edges())
        both.add_edge(n + u, n + v);
    auto colour = detail::refine_colours(both);

    std::vector<std::size_t> ca(colour.begin(), colour.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<std::size_t> cb(colour.begin() + static_cast<std::ptrdiff_t>(n), colour.end());
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
        return false;

    std::vector<vertex> map(n);
    std::vector<int> used(n, 0);
    auto extend = [&](auto & self, vertex u) -> bool {
        if (u == n)
            return true;
        for (vertex v = 0; v < n; ++v) {
            if (used[v] || ca[u] != cb[v])
                continue;
            bool ok = true;
            for (vertex w = 0; w < u && ok; ++w)
                ok = a.adjacent(u, w) == b.adjacent(v, map[w]);
            if (! ok)
                continue;
            used[v] = 1;
            map[u] = v;
            if (self(self, u + 1))
                return true;
            used[v] = 0;
        }
        return false;
    };
    return extend(extend, 0);
}

} // namespace ktile
