#pragma once

// Exact colouring searches: the chromatic number, and among all proper
// colourings with that many colours the one whose smallest class is smallest.

#include "ktile/graph.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace ktile {

struct Colouring
{
    std::size_t colours = 0;
    /// colour[v] in 0..colours-1
    std::vector<std::size_t> colour;

    auto classes() const -> std::vector<std::vector<vertex>>
    {
        std::vector<std::vector<vertex>> out(colours);
        for (vertex v = 0; v < colour.size(); ++v)
            out[colour[v]].push_back(v);
        return out;
    }
};

inline auto is_proper_colouring(const Graph & g, const std::vector<std::size_t> & colour) -> bool
{
    if (colour.size() != g.size())
        return false;
    for (auto [u, v] : g.edges())
        if (colour[u] == colour[v])
            return false;
    return true;
}

namespace detail {

inline constexpr std::size_t uncoloured = std::numeric_limits<std::size_t>::max();

/// Shared bookkeeping for both searches: per-vertex sets of colours already
/// used by neighbours, so saturation and availability are O(1) lookups.
struct ColourState
{
    const Graph * g;
    std::size_t palette;
    std::vector<std::size_t> colour;
    // forbidden[v][c] counts coloured neighbours of v holding colour c
    std::vector<std::vector<std::size_t>> forbidden;
    std::vector<std::size_t> saturation;
    std::size_t used = 0;
    std::size_t coloured = 0;

    ColourState(const Graph & graph, std::size_t k)
        : g(&graph), palette(k), colour(graph.size(), uncoloured),
          forbidden(graph.size(), std::vector<std::size_t>(k, 0)), saturation(graph.size(), 0)
    {
    }

    auto assign(vertex v, std::size_t c) -> void
    {
        colour[v] = c;
        ++coloured;
        g->neighbours(v).for_each([&](vertex u) {
            if (forbidden[u][c]++ == 0)
                ++saturation[u];
        });
    }

    auto unassign(vertex v) -> void
    {
        auto c = colour[v];
        colour[v] = uncoloured;
        --coloured;
        g->neighbours(v).for_each([&](vertex u) {
            if (--forbidden[u][c] == 0)
                --saturation[u];
        });
    }

    /// DSATUR choice: most distinct neighbour colours, then highest degree, then lowest label.
    auto pick() const -> vertex
    {
        vertex best = uncoloured;
        for (vertex v = 0; v < colour.size(); ++v) {
            if (colour[v] != uncoloured)
                continue;
            if (best == uncoloured || saturation[v] > saturation[best] ||
                (saturation[v] == saturation[best] && g->degree(v) > g->degree(best)))
                best = v;
        }
        return best;
    }
};

} // namespace detail

/// Exact chromatic number by DSATUR-ordered branch and bound. Returns an
/// optimal colouring as the witness.
inline auto chromatic_number(const Graph & g) -> Colouring
{
    auto n = g.size();
    if (n == 0)
        return {0, {}};

    // Greedy DSATUR gives the initial upper bound.
    Colouring best;
    {
        detail::ColourState st(g, n);
        while (st.coloured < n) {
            auto v = st.pick();
            std::size_t c = 0;
            while (st.forbidden[v][c] != 0)
                ++c;
            st.assign(v, c);
            st.used = std::max(st.used, c + 1);
        }
        best = {st.used, st.colour};
    }

    // A greedy clique gives a lower bound; stop as soon as it is met.
    std::size_t clique_lb = 0;
    for (vertex start = 0; start < n; ++start) {
        auto cand = g.neighbours(start);
        std::size_t size = 1;
        while (cand.any()) {
            vertex pick = cand.first(), best_deg = 0;
            cand.for_each([&](vertex u) {
                auto d = g.neighbours(u).intersection_count(cand);
                if (d > best_deg || pick == vertex_set::npos) {
                    best_deg = d;
                    pick = u;
                }
            });
            ++size;
            cand &= g.neighbours(pick);
        }
        clique_lb = std::max(clique_lb, size);
    }
    if (best.colours == clique_lb)
        return best;

    detail::ColourState st(g, best.colours);
    auto search = [&](auto & self) -> bool {
        if (st.coloured == n) {
            best = {st.used, st.colour};
            return best.colours == clique_lb;
        }
        auto v = st.pick();
        // colours 0..used-1, plus one new colour if that still beats the incumbent
        for (std::size_t c = 0; c < std::min(st.used + 1, best.colours - 1); ++c) {
            if (st.forbidden[v][c] != 0)
                continue;
            auto saved_used = st.used;
            st.used = std::max(st.used, c + 1);
            st.assign(v, c);
            bool done = self(self);
            st.unassign(v);
            st.used = saved_used;
            if (done)
                return true;
        }
        return false;
    };
    search(search);
    return best;
}

/// Over all proper colourings with exactly `k` colours, one minimising the
/// smallest colour class. Colours are renumbered so class 0 is a smallest
/// class. Returns colours == 0 if no such colouring exists.
inline auto min_smallest_class_colouring(const Graph & g, std::size_t k) -> Colouring
{
    auto n = g.size();
    if (k == 0 || k > n)
        return {};

    detail::ColourState st(g, k);
    std::vector<std::size_t> class_size(k, 0);
    std::size_t best_min = n + 1;
    std::vector<std::size_t> best_colour;

    auto search = [&](auto & self) -> void {
        // every colour must end up non-empty
        if (k - st.used > n - st.coloured)
            return;
        // classes only grow, so the current minimum is a lower bound
        std::size_t lb = st.used < k ? 1 : n;
        for (std::size_t c = 0; c < st.used; ++c)
            lb = std::min(lb, class_size[c]);
        if (lb >= best_min)
            return;

        if (st.coloured == n) {
            best_min = lb;
            best_colour = st.colour;
            return;
        }

        // fewest available colours first (forced moves propagate immediately)
        vertex v = vertex_set::npos;
        std::size_t fewest = k + 1;
        for (vertex u = 0; u < n; ++u) {
            if (st.colour[u] != detail::uncoloured)
                continue;
            std::size_t avail = 0;
            for (std::size_t c = 0; c < std::min(st.used + 1, k); ++c)
                avail += st.forbidden[u][c] == 0;
            if (avail < fewest || (avail == fewest && g.degree(u) > g.degree(v))) {
                fewest = avail;
                v = u;
            }
        }
        if (fewest == 0)
            return;

        // a new colour is always the lowest unused index (colour symmetry)
        for (std::size_t c = 0; c < std::min(st.used + 1, k); ++c) {
            if (st.forbidden[v][c] != 0)
                continue;
            auto saved_used = st.used;
            st.used = std::max(st.used, c + 1);
            st.assign(v, c);
            ++class_size[c];
            self(self);
            --class_size[c];
            st.unassign(v);
            st.used = saved_used;
        }
    };
    search(search);

    if (best_colour.empty())
        return {};

    // renumber: a smallest class (lowest original colour on ties) becomes colour 0
    std::vector<std::size_t> sizes(k, 0);
    for (auto c : best_colour)
        ++sizes[c];
    std::size_t smallest = 0;
    for (std::size_t c = 1; c < k; ++c)
        if (sizes[c] < sizes[smallest])
            smallest = c;
    std::vector<std::size_t> relabel(k);
    std::size_t next = 1;
    for (std::size_t c = 0; c < k; ++c)
        relabel[c] = (c == smallest) ? 0 : next++;
    for (auto & c : best_colour)
        c = relabel[c];
    return {k, best_colour};
}

} // namespace ktile
