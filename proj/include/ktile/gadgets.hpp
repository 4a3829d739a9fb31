#pragma once

// Tiling-improvement gadgets: expanding sets, swapping sets, greedy clique
// extraction, brute-force regularity, and blow-up degree inheritance.

#include "ktile/matching.hpp"
#include "ktile/solver.hpp"
#include "ktile/thresholds.hpp"

#include <cstdint>
#include <optional>
#include <variant>

namespace ktile {

namespace detail {

inline auto require_classes(const Tiling & t, const char * who) -> void
{
    for (auto & p : t.patterns)
        if (! p.has_classes() || p.classes.size() < 2)
            throw std::invalid_argument(std::string(who) + ": tiling pattern lacks bottle class structure");
}

inline auto class_set(const Tiling & t, std::size_t copy, std::size_t cls, std::size_t n) -> vertex_set
{
    return vertex_set::of(n, t.class_image(copy, cls));
}

} // namespace detail

// ---------------------------------------------------------------------------
// Expanding sets

struct ExpandingSet
{
    std::vector<vertex> vertices;
    /// assignment[i] is the copy index f(vertices[i]).
    std::vector<std::size_t> assignment;
};

/// z may go to a copy when it has a neighbour in every width class of it.
inline auto expanding_eligible(const Graph & g, const Tiling & t, vertex z, std::size_t copy) -> bool
{
    auto & pat = t.patterns.at(t.copies.at(copy).pattern);
    for (std::size_t c = 1; c < pat.classes.size(); ++c) {
        bool hit = false;
        for (auto v : t.class_image(copy, c))
            if (g.adjacent(z, v)) {
                hit = true;
                break;
            }
        if (! hit)
            return false;
    }
    return true;
}

/// A largest expanding set, from a maximum matching between uncovered
/// vertices and copies in the eligibility graph.
inline auto max_expanding_set(const Graph & g, const Tiling & t) -> ExpandingSet
{
    detail::require_classes(t, "find_expanding_set");
    auto outside = t.covered(g.size()).complement().to_vector();
    std::vector<std::vector<std::size_t>> adj(outside.size());
    for (std::size_t i = 0; i < outside.size(); ++i)
        for (std::size_t c = 0; c < t.copies.size(); ++c)
            if (expanding_eligible(g, t, outside[i], c))
                adj[i].push_back(c);
    auto m = maximum_matching(adj, t.copies.size());
    ExpandingSet out;
    for (std::size_t i = 0; i < outside.size(); ++i)
        if (m.match_left[i] != BipartiteMatching::unmatched) {
            out.vertices.push_back(outside[i]);
            out.assignment.push_back(m.match_left[i]);
        }
    return out;
}

/// Exact: a set of size ell exists iff the maximum matching reaches ell.
inline auto find_expanding_set(const Graph & g, const Tiling & t, std::size_t ell) -> std::optional<ExpandingSet>
{
    auto best = max_expanding_set(g, t);
    if (best.vertices.size() < ell)
        return std::nullopt;
    best.vertices.resize(ell);
    best.assignment.resize(ell);
    return best;
}

inline auto is_expanding_set(const Graph & g, const Tiling & t, const ExpandingSet & s) -> bool
{
    if (s.vertices.size() != s.assignment.size())
        return false;
    auto covered = t.covered(g.size());
    std::vector<char> used(t.copies.size(), 0);
    vertex_set seen(g.size());
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        auto z = s.vertices[i];
        auto c = s.assignment[i];
        if (z >= g.size() || covered.test(z) || seen.test(z) || c >= t.copies.size() || used[c])
            return false;
        seen.set(z);
        used[c] = 1;
        if (! expanding_eligible(g, t, z, c))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Swapping sets

struct SwappingPair
{
    vertex z = 0;
    vertex y = 0;
    std::size_t copy = 0;
};

struct SwappingSet
{
    std::size_t k = 0;
    std::vector<SwappingPair> pairs;
};

/// (z, y) is a k-swapping pair for blow-up factor m: z has at least
/// |neck|/m neighbours in the neck class of y's copy, at least |width|/m in
/// each width class not containing y, and index(y) >= index(z) + k.
inline auto is_swapping_pair(const Graph & g, const Tiling & t, const VertexOrdering & ord, std::size_t k, std::size_t m,
                             vertex z, vertex y, std::size_t copy) -> bool
{
    auto & e = t.copies.at(copy);
    auto & pat = t.patterns.at(e.pattern);
    auto n = g.size();
    std::size_t y_class = pat.classes.size();
    for (std::size_t c = 1; c < pat.classes.size(); ++c)
        for (auto p : pat.classes[c])
            if (e.image[p] == y)
                y_class = c;
    if (y_class == pat.classes.size())
        return false;
    if (ord.index_of(y) < ord.index_of(z) + k)
        return false;
    for (std::size_t c = 0; c < pat.classes.size(); ++c) {
        if (c == y_class)
            continue;
        auto need = pat.classes[c].size();
        if (need % m != 0)
            throw std::invalid_argument("is_swapping_pair: class size not divisible by m");
        if (g.neighbours(z).intersection_count(detail::class_set(t, copy, c, n)) < need / m)
            return false;
    }
    return true;
}

/// A largest k-swapping set, from a maximum matching between uncovered
/// vertices and copies, where (z, copy) is admissible iff some width-class
/// vertex y of the copy makes (z, y) a k-swapping pair. The lowest such y is
/// recorded.
inline auto max_swapping_set(const Graph & g, const Tiling & t, const VertexOrdering & ord, std::size_t k,
                             std::size_t m = 1) -> SwappingSet
{
    detail::require_classes(t, "find_swapping_set");
    if (m == 0)
        throw std::invalid_argument("find_swapping_set: m must be positive");
    auto outside = t.covered(g.size()).complement().to_vector();
    std::vector<std::vector<std::size_t>> adj(outside.size());
    std::vector<std::vector<vertex>> witness(outside.size(), std::vector<vertex>(t.copies.size(), vertex_set::npos));
    for (std::size_t i = 0; i < outside.size(); ++i)
        for (std::size_t c = 0; c < t.copies.size(); ++c) {
            auto & pat = t.patterns.at(t.copies[c].pattern);
            vertex best = vertex_set::npos;
            for (std::size_t cls = 1; cls < pat.classes.size(); ++cls)
                for (auto y : t.class_image(c, cls))
                    if (y < best && is_swapping_pair(g, t, ord, k, m, outside[i], y, c))
                        best = y;
            if (best != vertex_set::npos) {
                adj[i].push_back(c);
                witness[i][c] = best;
            }
        }
    auto mm = maximum_matching(adj, t.copies.size());
    SwappingSet out{k, {}};
    for (std::size_t i = 0; i < outside.size(); ++i)
        if (auto c = mm.match_left[i]; c != BipartiteMatching::unmatched)
            out.pairs.push_back({outside[i], witness[i][c], c});
    return out;
}

inline auto find_swapping_set(const Graph & g, const Tiling & t, const VertexOrdering & ord, std::size_t k,
                              std::size_t ell, std::size_t m = 1) -> std::optional<SwappingSet>
{
    auto best = max_swapping_set(g, t, ord, k, m);
    if (best.pairs.size() < ell)
        return std::nullopt;
    best.pairs.resize(ell);
    return best;
}

/// Re-checks every pair and that the copies are pairwise distinct.
inline auto is_swapping_set(const Graph & g, const Tiling & t, const VertexOrdering & ord, std::size_t m,
                            const SwappingSet & s) -> bool
{
    auto covered = t.covered(g.size());
    auto owner = t.copy_of(g.size());
    std::vector<char> used(t.copies.size(), 0);
    vertex_set seen(g.size());
    for (auto & p : s.pairs) {
        if (p.z >= g.size() || p.y >= g.size() || covered.test(p.z) || seen.test(p.z))
            return false;
        if (owner[p.y] != p.copy || p.copy >= t.copies.size() || used[p.copy])
            return false;
        seen.set(p.z);
        used[p.copy] = 1;
        if (! is_swapping_pair(g, t, ord, s.k, m, p.z, p.y, p.copy))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Expand-or-swap step

/// Slack constants for one step. The hierarchy gamma << 1/m << eta is
/// enforced as 0 < gamma <= eta / (10 m).
class SlackParams
{
public:
    SlackParams(rational eta, rational gamma, std::size_t m) : eta_(std::move(eta)), gamma_(std::move(gamma)), m_(m)
    {
        if (m_ == 0)
            throw std::invalid_argument("SlackParams: m must be positive");
        if (gamma_ <= 0 || eta_ <= 0)
            throw std::invalid_argument("SlackParams: eta and gamma must be positive");
        if (gamma_ > eta_ / (10 * m_))
            throw std::invalid_argument("SlackParams: need gamma <= eta / (10 m)");
    }

    auto eta() const -> const rational & { return eta_; }
    auto gamma() const -> const rational & { return gamma_; }
    auto m() const -> std::size_t { return m_; }

private:
    rational eta_;
    rational gamma_;
    std::size_t m_;
};

struct SmallBigSplit
{
    std::vector<vertex> small;
    std::vector<vertex> big;
    rational threshold;
};

/// ((b - omega)/b) n + (eta - 2 gamma) n
inline auto small_big_threshold(std::size_t b, std::size_t omega, const rational & eta, const rational & gamma,
                                std::size_t n) -> rational
{
    return make_rational(b - omega, b) * n + (eta - 2 * gamma) * n;
}

/// Base bottle (neck, width, order) behind a B* = B(m) pattern.
struct BaseBottle
{
    std::size_t sigma = 0, omega = 0, b = 0;
};

inline auto base_bottle(const PartitionedGraph & bstar, std::size_t m) -> BaseBottle
{
    if (bstar.classes.size() < 2)
        throw std::invalid_argument("base_bottle: pattern lacks class structure");
    auto neck = bstar.classes[0].size(), width = bstar.classes[1].size();
    if (neck % m != 0 || width % m != 0)
        throw std::invalid_argument("base_bottle: class sizes not divisible by m");
    BaseBottle bb{neck / m, width / m, 0};
    bb.b = bb.sigma + (bstar.classes.size() - 1) * bb.omega;
    return bb;
}

/// Uncovered vertices in ordering order: small while the degree stays at or
/// below the threshold, big afterwards.
inline auto small_big_split(const Graph & g, const Tiling & t, const SlackParams & params, const VertexOrdering & ord)
    -> SmallBigSplit
{
    detail::require_classes(t, "small_big_split");
    auto bb = base_bottle(t.patterns.front(), params.m());
    SmallBigSplit out;
    out.threshold = small_big_threshold(bb.b, bb.omega, params.eta(), params.gamma(), g.size());
    auto covered = t.covered(g.size());
    for (auto v : ord.order) {
        if (covered.test(v))
            continue;
        if (rational(g.degree(v)) <= out.threshold)
            out.small.push_back(v);
        else
            out.big.push_back(v);
    }
    return out;
}

struct StepExpanding
{
    ExpandingSet set;
};
struct StepSwapping
{
    SwappingSet set;
};
struct StepNewCopy
{
    Embedding copy;
};
struct StepExhausted
{
    SmallBigSplit split;
    /// Largest expanding and swapping sets that did exist.
    std::size_t expand_matching = 0;
    std::size_t swap_matching = 0;
};

using StepOutcome = std::variant<StepExpanding, StepSwapping, StepNewCopy, StepExhausted>;

/// Tries an expanding set of size ceil(gamma n), then a
/// ceil(omega gamma n / sigma)-swapping set of that size, then a fresh copy
/// of the pattern among uncovered vertices; otherwise reports the split.
inline auto expand_or_swap_step(const Graph & g, const Tiling & t, const SlackParams & params, const VertexOrdering & ord)
    -> StepOutcome
{
    detail::require_classes(t, "expand_or_swap_step");
    if (t.patterns.empty())
        throw std::invalid_argument("expand_or_swap_step: tiling carries no pattern");
    auto n = g.size();
    auto bb = base_bottle(t.patterns.front(), params.m());
    auto ell = ceil_of(params.gamma() * n).convert_to<std::size_t>();
    auto k = ceil_of(params.gamma() * n * bb.omega / bb.sigma).convert_to<std::size_t>();

    if (auto e = find_expanding_set(g, t, ell))
        return StepExpanding{*e};
    if (auto s = find_swapping_set(g, t, ord, k, ell, params.m()))
        return StepSwapping{*s};

    auto free = t.covered(n).complement();
    auto sub = induced_subgraph(g, free);
    EnumerateOptions eo;
    eo.cap = 1;
    auto cat = enumerate_copies(sub.graph, t.patterns.front().graph, eo);
    if (! cat.copies.empty()) {
        auto e = cat.copies.front().witness;
        for (auto & v : e.image)
            v = sub.host_vertex[v];
        return StepNewCopy{e};
    }

    StepExhausted out;
    out.split = small_big_split(g, t, params, ord);
    out.expand_matching = max_expanding_set(g, t).vertices.size();
    out.swap_matching = max_swapping_set(g, t, ord, k, params.m()).pairs.size();
    return out;
}

// ---------------------------------------------------------------------------
// Greedy clique extraction

struct GreedyKr
{
    bool success = false;
    std::vector<vertex> clique;
    /// Step (1-based) that found no qualifying vertex; 0 on success.
    std::size_t failed_step = 0;
    /// |N(x_1, ..., x_{i-1})| seen at step i (index i-1; |R| at step 1).
    std::vector<std::size_t> neighbourhood_sizes;
    /// Degree floor k - (omega/b) k + eta k / 3 used in steps 1..r-1.
    rational degree_floor;
};

/// Steps 1..r-1 pick a highest-degree vertex (lowest label on ties) in the
/// running common neighbourhood whose degree meets the floor; step r picks
/// any vertex of the common neighbourhood (again the highest-degree one).
inline auto greedy_kr(const Graph & rg, std::size_t r, std::size_t b, std::size_t omega, const rational & eta) -> GreedyKr
{
    if (r < 2 || b == 0)
        throw std::invalid_argument("greedy_kr: need r >= 2 and b > 0");
    auto k = rg.size();
    GreedyKr out;
    out.degree_floor = rational(k) - make_rational(omega, b) * k + eta * k / 3;
    auto common = rg.all_vertices();
    for (std::size_t step = 1; step <= r; ++step) {
        out.neighbourhood_sizes.push_back(common.count());
        vertex pick = vertex_set::npos;
        common.for_each([&](vertex v) {
            if (step < r && rational(rg.degree(v)) < out.degree_floor)
                return;
            if (pick == vertex_set::npos || rg.degree(v) > rg.degree(pick))
                pick = v;
        });
        if (pick == vertex_set::npos) {
            out.failed_step = step;
            return out;
        }
        out.clique.push_back(pick);
        common &= rg.neighbours(pick);
    }
    out.success = true;
    return out;
}

// ---------------------------------------------------------------------------
// Regularity of a small pair

inline constexpr std::size_t max_regularity_side = 10;

struct RegularityCheck
{
    bool regular = true;
    std::vector<vertex> x, y;
    /// |d(X, Y) - d(A, B)| for the witness.
    rational gap;

    explicit operator bool() const { return regular; }
};

/// Checks |d(X,Y) - d(A,B)| < eps for all X in A, Y in B with |X| > eps|A|
/// and |Y| > eps|B|, over all subset pairs. The witness is the first
/// failure with X's bitmask (over A in the given order) smallest, then Y's.
inline auto epsilon_regular_check(const Graph & g, const std::vector<vertex> & a, const std::vector<vertex> & b,
                                  const rational & eps) -> RegularityCheck
{
    if (a.size() > max_regularity_side || b.size() > max_regularity_side)
        throw std::invalid_argument("epsilon_regular_check: sides are limited to " + std::to_string(max_regularity_side) +
                                    " vertices");
    if (a.empty() || b.empty())
        throw std::invalid_argument("epsilon_regular_check: sides must be non-empty");
    if (vertex_set::of(g.size(), a).intersects(vertex_set::of(g.size(), b)))
        throw std::invalid_argument("epsilon_regular_check: sides must be disjoint");

    auto na = static_cast<std::int64_t>(a.size()), nb = static_cast<std::int64_t>(b.size());
    // row[i]: bitmask over b of the neighbours of a[i]
    std::vector<std::uint32_t> row(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (g.adjacent(a[i], b[j]))
                row[i] |= std::uint32_t{1} << j;
    std::int64_t e_ab = 0;
    for (auto w : row)
        e_ab += std::popcount(w);

    auto p = num_of(eps).convert_to<std::int64_t>(), q = den_of(eps).convert_to<std::int64_t>();
    for (std::uint32_t xm = 1; xm < (1u << a.size()); ++xm) {
        std::int64_t sx = std::popcount(xm);
        if (! (sx * q > p * na))
            continue;
        for (std::uint32_t ym = 1; ym < (1u << b.size()); ++ym) {
            std::int64_t sy = std::popcount(ym);
            if (! (sy * q > p * nb))
                continue;
            std::int64_t e_xy = 0;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (xm >> i & 1u)
                    e_xy += std::popcount(row[i] & ym);
            // |e_xy/(sx sy) - e_ab/(na nb)| < p/q, scaled by sx sy na nb q
            auto diff = e_xy * na * nb - e_ab * sx * sy;
            if (diff < 0)
                diff = -diff;
            if (! (diff * q < p * sx * sy * na * nb)) {
                RegularityCheck out;
                out.regular = false;
                for (std::size_t i = 0; i < a.size(); ++i)
                    if (xm >> i & 1u)
                        out.x.push_back(a[i]);
                for (std::size_t j = 0; j < b.size(); ++j)
                    if (ym >> j & 1u)
                        out.y.push_back(b[j]);
                out.gap = make_rational(diff, sx * sy * na * nb);
                return out;
            }
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Degree sequences of blow-ups

/// Sorted degrees of G(s) without building it: d_{G(s), j} = s d_{G, ceil(j/s)}.
inline auto blown_up_degrees(const std::vector<std::size_t> & sorted, std::size_t s) -> std::vector<std::size_t>
{
    std::vector<std::size_t> out;
    out.reserve(sorted.size() * s);
    for (auto d : sorted)
        for (std::size_t c = 0; c < s; ++c)
            out.push_back(d * s);
    return out;
}

struct InheritanceReport
{
    /// G meets the input line.
    bool input_ok = false;
    /// The scaled conclusion holds at every index up to cutoff * n * s.
    bool holds = false;
    /// First failing one-based index of G(s), 0 if none.
    std::size_t failed_index = 0;
    std::size_t checked = 0;

    explicit operator bool() const { return input_ok && holds; }
};

/// If G meets intercept n + slope i + slack n for i <= cutoff n, then G(s)
/// meets intercept (ns) + slope i + (slack n - slope) s for i <= cutoff ns.
inline auto verify_blowup_inheritance(const Graph & g, std::size_t s, const BoundLine & line) -> InheritanceReport
{
    if (s == 0)
        throw std::invalid_argument("verify_blowup_inheritance: s must be positive");
    InheritanceReport rep;
    if (! check_degree_sequence(g, line))
        return rep;
    rep.input_ok = true;
    auto n = g.size();
    auto blown = blown_up_degrees(g.sorted_degrees(), s);
    auto last = std::min(floor_of(line.cutoff * n * s).convert_to<std::size_t>(), blown.size());
    for (std::size_t i = 1; i <= last; ++i) {
        auto bound = line.intercept * n * s + line.slope * i + (line.slack * n - line.slope) * s;
        ++rep.checked;
        if (rational(blown[i - 1]) < bound) {
            rep.failed_index = i;
            return rep;
        }
    }
    rep.holds = true;
    return rep;
}

} // namespace ktile
