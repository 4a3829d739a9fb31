#pragma once

// Exact maximum tilings: copy enumeration, a vertex-branching branch and
// bound, and an independent exhaustive oracle for small hosts.

#include "ktile/tiling.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace ktile {

struct PatternCopy
{
    vertex_set vertices;
    Embedding witness;
};

/// Copies of one pattern in a host, deduplicated by image vertex set and
/// sorted lexicographically by that set.
struct CopyCatalog
{
    std::size_t host_order = 0;
    std::size_t pattern_order = 0;
    std::vector<PatternCopy> copies;
    /// Set when the cap stopped enumeration early.
    bool truncated = false;
};

struct EnumerateOptions
{
    /// Stop after this many distinct vertex sets.
    std::optional<std::size_t> cap;
    /// Only copies meeting this set are reported.
    std::optional<vertex_set> must_touch;
    /// Written into each witness.
    std::size_t pattern_index = 0;
};

namespace detail {

/// Pattern vertices in an order where each one after the first is adjacent to
/// an earlier one whenever its component allows; starts from `root`.
inline auto search_order(const Graph & pattern, vertex root) -> std::vector<vertex>
{
    auto h = pattern.size();
    std::vector<vertex> order;
    std::vector<char> seen(h, 0);
    auto bfs_from = [&](vertex s) {
        std::vector<vertex> queue{s};
        seen[s] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            auto u = queue[qi];
            order.push_back(u);
            // higher-degree neighbours first: they constrain the most
            std::vector<vertex> next;
            pattern.neighbours(u).for_each([&](vertex w) {
                if (! seen[w])
                    next.push_back(w);
            });
            std::stable_sort(next.begin(), next.end(),
                             [&](vertex a, vertex b) { return pattern.degree(a) > pattern.degree(b); });
            for (auto w : next) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    };
    bfs_from(root);
    for (vertex v = 0; v < h; ++v)
        if (! seen[v])
            bfs_from(v);
    return order;
}

inline auto highest_degree_vertex(const Graph & g) -> vertex
{
    vertex best = 0;
    for (vertex v = 1; v < g.size(); ++v)
        if (g.degree(v) > g.degree(best))
            best = v;
    return best;
}

} // namespace detail

inline auto enumerate_copies(const Graph & host, const Graph & pattern, const EnumerateOptions & opt = {}) -> CopyCatalog
{
    CopyCatalog cat;
    cat.host_order = host.size();
    cat.pattern_order = pattern.size();
    auto n = host.size(), h = pattern.size();
    if (h == 0)
        throw std::invalid_argument("enumerate_copies: empty pattern");
    if (h > n)
        return cat;
    if (opt.must_touch && opt.must_touch->capacity() != n)
        throw std::invalid_argument("enumerate_copies: must_touch set has the wrong capacity");

    std::set<std::vector<vertex>> found;
    std::vector<PatternCopy> hits;
    std::vector<vertex> image(h, vertex_set::npos);
    vertex_set used(n);
    auto host_deg = host.degrees();
    bool stop = false;

    auto run = [&](const std::vector<vertex> & order, std::optional<vertex> anchor) {
        // earlier[i]: pattern neighbours of order[i] mapped before it
        std::vector<std::vector<vertex>> earlier(h);
        std::vector<std::size_t> pos(h);
        for (std::size_t i = 0; i < h; ++i)
            pos[order[i]] = i;
        for (std::size_t i = 0; i < h; ++i)
            pattern.neighbours(order[i]).for_each([&](vertex w) {
                if (pos[w] < i)
                    earlier[i].push_back(w);
            });

        auto place = [&](auto & self, std::size_t i) -> void {
            if (stop)
                return;
            if (i == h) {
                auto set = vertex_set::of(n, image);
                if (opt.must_touch && ! set.intersects(*opt.must_touch))
                    return;
                auto key = set.to_vector();
                if (found.insert(key).second) {
                    hits.push_back({std::move(set), Embedding{opt.pattern_index, image}});
                    if (opt.cap && found.size() >= *opt.cap)
                        stop = true;
                }
                return;
            }
            auto p = order[i];
            vertex_set cand(n);
            if (i == 0 && anchor)
                cand.set(*anchor);
            else if (earlier[i].empty())
                cand = used.complement();
            else {
                cand = host.neighbours(image[earlier[i].front()]);
                for (std::size_t e = 1; e < earlier[i].size(); ++e)
                    cand &= host.neighbours(image[earlier[i][e]]);
                cand -= used;
            }
            cand.for_each([&](vertex v) {
                if (stop || host_deg[v] < pattern.degree(p) || used.test(v))
                    return;
                image[p] = v;
                used.set(v);
                self(self, i + 1);
                used.reset(v);
                image[p] = vertex_set::npos;
            });
        };
        place(place, 0);
    };

    if (opt.must_touch) {
        opt.must_touch->for_each([&](vertex t) {
            for (vertex p = 0; p < h && ! stop; ++p)
                run(detail::search_order(pattern, p), t);
        });
    }
    else
        run(detail::search_order(pattern, detail::highest_degree_vertex(pattern)), std::nullopt);

    cat.truncated = stop;
    std::sort(hits.begin(), hits.end(),
              [](const PatternCopy & a, const PatternCopy & b) { return lex_less(a.vertices, b.vertices); });
    cat.copies = std::move(hits);
    return cat;
}

enum class Optimality
{
    proven_optimal,
    best_found,
};

inline auto to_string(Optimality o) -> std::string
{
    return o == Optimality::proven_optimal ? "proven-optimal" : "best-found";
}

struct TilingResult
{
    Tiling tiling;
    std::size_t covered_count = 0;
    Optimality optimality = Optimality::proven_optimal;
    /// Objective actually maximised: covered vertices inside the weight set
    /// (equals covered_count when no weight set is given).
    std::size_t objective = 0;
    std::uint64_t nodes = 0;
};

struct SolveOptions
{
    std::uint64_t node_budget = 10'000'000;
    /// Maximise |covered ∩ weights| instead of |covered|.
    std::optional<vertex_set> weights;
    /// Forwarded to copy enumeration; a truncated catalog forbids proven optimality.
    std::optional<std::size_t> copy_cap;
};

namespace detail {

inline auto check_patterns(const std::vector<PartitionedGraph> & patterns) -> void
{
    if (patterns.empty())
        throw std::invalid_argument("max_tiling: pattern list is empty");
    for (auto & p : patterns)
        if (p.graph.size() == 0)
            throw std::invalid_argument("max_tiling: empty pattern graph");
}

inline auto as_partitioned(const std::vector<Graph> & patterns) -> std::vector<PartitionedGraph>
{
    std::vector<PartitionedGraph> out;
    for (auto & g : patterns)
        out.push_back(unpartitioned(g));
    return out;
}

/// achievable[s]: s is a non-negative integer combination of the orders.
inline auto achievable_sums(const std::vector<PartitionedGraph> & patterns, std::size_t n) -> std::vector<char>
{
    std::vector<char> ok(n + 1, 0);
    ok[0] = 1;
    for (std::size_t s = 1; s <= n; ++s)
        for (auto & p : patterns)
            if (p.graph.size() <= s && ok[s - p.graph.size()])
                ok[s] = 1;
    return ok;
}

} // namespace detail

/// Maximum (mixed) tiling by branch and bound. Branches on the lowest vertex
/// still coverable: each remaining copy through it, larger patterns first,
/// then skipping it for good.
inline auto max_tiling(const Graph & host, const std::vector<PartitionedGraph> & patterns, const SolveOptions & opt = {})
    -> TilingResult
{
    detail::check_patterns(patterns);
    auto n = host.size();
    if (opt.weights && opt.weights->capacity() != n)
        throw std::invalid_argument("max_tiling: weight set has the wrong capacity");
    auto weights = opt.weights.value_or(vertex_set::full(n));
    bool weighted = opt.weights.has_value();

    std::vector<PatternCopy> copies;
    bool truncated = false;
    for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
        EnumerateOptions eo;
        eo.cap = opt.copy_cap;
        eo.pattern_index = pi;
        auto cat = enumerate_copies(host, patterns[pi].graph, eo);
        truncated = truncated || cat.truncated;
        for (auto & c : cat.copies)
            copies.push_back(std::move(c));
    }
    // larger patterns first, then lexicographic vertex set
    std::stable_sort(copies.begin(), copies.end(), [](const PatternCopy & a, const PatternCopy & b) {
        if (a.witness.image.size() != b.witness.image.size())
            return a.witness.image.size() > b.witness.image.size();
        return lex_less(a.vertices, b.vertices);
    });
    std::vector<std::size_t> gain(copies.size());
    for (std::size_t i = 0; i < copies.size(); ++i)
        gain[i] = copies[i].vertices.intersection_count(weights);

    auto achievable = detail::achievable_sums(patterns, n);

    TilingResult res;
    res.tiling.patterns = patterns;
    std::vector<std::size_t> chosen, best_chosen;
    std::size_t best = 0;
    std::uint64_t nodes = 0;
    bool budget_hit = false, finished = false;
    std::size_t root_bound = n + 1;

    auto bound_of = [&](const std::vector<std::size_t> & alive, std::size_t value) {
        vertex_set eligible(n);
        for (auto c : alive)
            eligible |= copies[c].vertices;
        std::size_t extra = eligible.intersection_count(weights);
        if (! weighted)
            while (extra > 0 && ! achievable[extra])
                --extra;
        return std::pair{value + extra, eligible};
    };

    auto search = [&](auto & self, const std::vector<std::size_t> & alive, std::size_t value) -> void {
        if (finished)
            return;
        if (++nodes > opt.node_budget) {
            budget_hit = finished = true;
            return;
        }
        if (value > best) {
            best = value;
            best_chosen = chosen;
            if (best >= root_bound) {
                finished = true;
                return;
            }
        }
        auto [ub, eligible] = bound_of(alive, value);
        if (ub <= best)
            return;

        auto v = eligible.first();
        std::vector<std::size_t> rest;
        for (auto c : alive)
            if (copies[c].vertices.test(v)) {
                std::vector<std::size_t> next;
                for (auto d : alive)
                    if (! copies[d].vertices.intersects(copies[c].vertices))
                        next.push_back(d);
                chosen.push_back(c);
                self(self, next, value + gain[c]);
                chosen.pop_back();
                if (finished)
                    return;
            }
            else
                rest.push_back(c);
        self(self, rest, value);
    };

    std::vector<std::size_t> all(copies.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    root_bound = bound_of(all, 0).first;
    search(search, all, 0);

    for (auto c : best_chosen)
        res.tiling.copies.push_back(copies[c].witness);
    std::sort(res.tiling.copies.begin(), res.tiling.copies.end(), [](const Embedding & a, const Embedding & b) {
        return std::min_element(a.image.begin(), a.image.end())[0] < std::min_element(b.image.begin(), b.image.end())[0];
    });
    res.covered_count = res.tiling.covered_count();
    res.objective = best;
    res.nodes = nodes;
    res.optimality = (budget_hit || truncated) ? Optimality::best_found : Optimality::proven_optimal;
    return res;
}

inline auto max_tiling(const Graph & host, const std::vector<Graph> & patterns, const SolveOptions & opt = {}) -> TilingResult
{
    return max_tiling(host, detail::as_partitioned(patterns), opt);
}

inline constexpr std::size_t oracle_max_order = 16;

/// Exhaustive oracle: copies from all vertex subsets and all bijections,
/// then a memoised recursion over subsets of still-free vertices.
inline auto max_tiling_oracle(const Graph & host, const std::vector<PartitionedGraph> & patterns,
                              const std::optional<vertex_set> & weights = std::nullopt) -> TilingResult
{
    detail::check_patterns(patterns);
    auto n = host.size();
    if (n > oracle_max_order)
        throw std::invalid_argument("max_tiling_oracle: host has more than " + std::to_string(oracle_max_order) + " vertices");
    using mask = std::uint32_t;

    mask wmask = 0;
    for (vertex v = 0; v < n; ++v)
        if (! weights || weights->test(v))
            wmask |= mask{1} << v;

    struct OracleCopy
    {
        mask set;
        Embedding witness;
    };
    // by_low[v]: copies whose lowest vertex is v
    std::vector<std::vector<OracleCopy>> by_low(n);
    for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
        auto & pat = patterns[pi].graph;
        auto h = pat.size();
        if (h > n)
            continue;
        auto pedges = pat.edges();
        for (mask s = 0; s < (mask{1} << n); ++s) {
            if (static_cast<std::size_t>(std::popcount(s)) != h)
                continue;
            std::vector<vertex> members;
            for (vertex v = 0; v < n; ++v)
                if (s >> v & 1u)
                    members.push_back(v);
            auto perm = members;
            do {
                bool ok = true;
                for (auto [p, q] : pedges)
                    if (! host.adjacent(perm[p], perm[q])) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    by_low[members.front()].push_back({s, Embedding{pi, perm}});
                    break;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }

    // Every copy through the lowest free vertex v has v as its lowest vertex,
    // so by_low[v] is exactly the set of choices for covering v.
    std::unordered_map<mask, std::size_t> memo;
    auto best_from = [&](auto & self, mask free) -> std::size_t {
        if (free == 0)
            return 0;
        if (auto it = memo.find(free); it != memo.end())
            return it->second;
        auto v = static_cast<vertex>(std::countr_zero(free));
        auto result = self(self, free & ~(mask{1} << v));
        for (auto & c : by_low[v])
            if ((c.set & free) == c.set)
                result = std::max(result, static_cast<std::size_t>(std::popcount(c.set & wmask)) + self(self, free & ~c.set));
        memo[free] = result;
        return result;
    };

    mask all = n == 0 ? 0 : static_cast<mask>((std::uint64_t{1} << n) - 1);
    TilingResult res;
    res.tiling.patterns = patterns;
    res.objective = best_from(best_from, all);

    // walk the memo back to a witness
    mask free = all;
    while (free != 0) {
        auto v = static_cast<vertex>(std::countr_zero(free));
        auto target = best_from(best_from, free);
        const OracleCopy * pick = nullptr;
        for (auto & c : by_low[v])
            if ((c.set & free) == c.set &&
                static_cast<std::size_t>(std::popcount(c.set & wmask)) + best_from(best_from, free & ~c.set) == target) {
                pick = &c;
                break;
            }
        if (pick && best_from(best_from, free & ~(mask{1} << v)) != target) {
            res.tiling.copies.push_back(pick->witness);
            free &= ~pick->set;
        }
        else
            free &= ~(mask{1} << v);
    }
    res.covered_count = res.tiling.covered_count();
    res.optimality = Optimality::proven_optimal;
    res.nodes = memo.size();
    return res;
}

inline auto max_tiling_oracle(const Graph & host, const std::vector<Graph> & patterns) -> TilingResult
{
    return max_tiling_oracle(host, detail::as_partitioned(patterns));
}

/// host_n - covered_count.
inline auto coverage_deficit(const TilingResult & result, std::size_t host_n) -> std::size_t
{
    return host_n - result.covered_count;
}

} // namespace ktile
