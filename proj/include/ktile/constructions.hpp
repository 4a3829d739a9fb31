#pragma once

// Explicit extremal hosts and constructive perfect tilings of complete
// multipartite graphs.

#include "ktile/solver.hpp"
#include "ktile/thresholds.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace ktile {

namespace detail {

inline auto require(bool ok, const std::string & what) -> void
{
    if (! ok)
        throw std::invalid_argument(what);
}

/// Exact non-negative count from a rational, naming the quantity on failure.
inline auto exact_count(const rational & q, const std::string & what) -> std::size_t
{
    require(is_integral(q), what + " = " + to_string(q) + " is not an integer");
    require(q >= 0, what + " = " + to_string(q) + " is negative");
    return q.convert_to<std::size_t>();
}

} // namespace detail

/// Hands out unused vertices of each class of a partitioned host in label order.
class ClassCursor
{
public:
    explicit ClassCursor(const PartitionedGraph & host) : host_(&host), next_(host.classes.size(), 0) {}

    auto remaining(std::size_t cls) const -> std::size_t { return host_->classes.at(cls).size() - next_.at(cls); }

    auto take(std::size_t cls, std::size_t count) -> std::vector<vertex>
    {
        if (remaining(cls) < count)
            throw std::logic_error("placement overflows host class " + std::to_string(cls));
        auto & c = host_->classes[cls];
        std::vector<vertex> out(c.begin() + static_cast<std::ptrdiff_t>(next_[cls]),
                                c.begin() + static_cast<std::ptrdiff_t>(next_[cls] + count));
        next_[cls] += count;
        return out;
    }

    /// Places a copy of `pattern` with pattern class c landing in host class host_class[c].
    auto place(const PartitionedGraph & pattern, std::size_t pattern_index, const std::vector<std::size_t> & host_class)
        -> Embedding
    {
        Embedding e{pattern_index, std::vector<vertex>(pattern.graph.size(), vertex_set::npos)};
        for (std::size_t c = 0; c < pattern.classes.size(); ++c) {
            auto got = take(host_class.at(c), pattern.classes[c].size());
            for (std::size_t i = 0; i < got.size(); ++i)
                e.image[pattern.classes[c][i]] = got[i];
        }
        return e;
    }

    auto all_used() const -> bool
    {
        for (std::size_t c = 0; c < next_.size(); ++c)
            if (remaining(c) != 0)
                return false;
        return true;
    }

private:
    const PartitionedGraph * host_;
    std::vector<std::size_t> next_;
};

// ---------------------------------------------------------------------------
// Staircase host with a flattened window

struct ExtremalOneSpec
{
    std::size_t r = 2;
    std::size_t sigma = 1;
    std::size_t omega = 2;
    std::size_t n = 0;
    rational eta;
    std::size_t k = 1;
};

struct ExtremalOne
{
    /// Classes V_1 (a-vertices), V_2 (c-vertices), V_3, ..., V_r.
    PartitionedGraph graph;
    std::vector<vertex> a; ///< a_1, a_2, ... in order
    std::vector<vertex> c; ///< c_1, c_2, ... in order
    std::vector<vertex> A; ///< a_1 .. a_ceil(sigma k / omega)
    std::vector<vertex> C; ///< c_1 .. c_(k + 2 eta n)
    std::size_t window = 0; ///< 2 eta n
};

/// V_1 complete and joined to everything outside V_2; V_2..V_r complete
/// multipartite; c_i sees a_1 .. a_ceil(sigma i / omega), except that for
/// k < i <= k + 2 eta n the edges to a_j with ceil(sigma k/omega) < j <=
/// ceil(sigma (k + 2 eta n)/omega) are removed.
inline auto extremal_one(const ExtremalOneSpec & s) -> ExtremalOne
{
    using detail::require;
    require(s.r >= 2, "extremal_one: need r >= 2");
    require(s.sigma >= 1 && s.sigma <= s.omega, "extremal_one: need 1 <= sigma <= omega");
    require(s.eta >= 0, "extremal_one: eta must be non-negative");
    auto b = s.sigma + (s.r - 1) * s.omega;
    require(s.n % b == 0, "extremal_one: b = " + std::to_string(b) + " must divide n = " + std::to_string(s.n));
    auto window = detail::exact_count(2 * s.eta * s.n, "extremal_one: 2 eta n");
    auto neck = s.sigma * s.n / b, width = s.omega * s.n / b;
    require(s.k >= 1 && s.k + window < width, "extremal_one: need 1 <= k < omega n / b - 2 eta n");

    std::vector<std::size_t> sizes(s.r, width);
    sizes[0] = neck;
    ExtremalOne ex;
    // complete multipartite, then V_1 made complete and V_1-V_2 emptied
    ex.graph = complete_multipartite(sizes);
    auto & g = ex.graph.graph;
    ex.a = ex.graph.classes[0];
    ex.c = ex.graph.classes[1];
    for (std::size_t i = 0; i < neck; ++i)
        for (std::size_t j = i + 1; j < neck; ++j)
            g.add_edge(ex.a[i], ex.a[j]);
    for (auto u : ex.a)
        for (auto v : ex.c)
            g.remove_edge(u, v);

    auto ceil_ratio = [&](std::size_t i) { return ceil_of(make_rational(s.sigma * i, s.omega)).convert_to<std::size_t>(); };
    for (std::size_t i = 1; i <= width; ++i)
        for (std::size_t j = 1; j <= std::min(ceil_ratio(i), neck); ++j)
            g.add_edge(ex.c[i - 1], ex.a[j - 1]);

    auto lo = ceil_ratio(s.k), hi = ceil_ratio(s.k + window);
    for (std::size_t i = s.k + 1; i <= s.k + window; ++i)
        for (std::size_t j = lo + 1; j <= std::min(hi, neck); ++j)
            g.remove_edge(ex.c[i - 1], ex.a[j - 1]);

    ex.A.assign(ex.a.begin(), ex.a.begin() + static_cast<std::ptrdiff_t>(std::min(lo, neck)));
    ex.C.assign(ex.c.begin(), ex.c.begin() + static_cast<std::ptrdiff_t>(s.k + window));
    ex.window = window;
    return ex;
}

/// The two degree displays of the staircase host: sorted d_i meets the
/// bottle line (without slack) outside k..k+2eta n, and equals
/// (1-(omega+sigma)/b) n + ceil(sigma k / omega) inside it. Indices above
/// omega n / b are not constrained.
inline auto extremal_one_degree_conditions(const ExtremalOneSpec & s, const ExtremalOne & ex) -> bool
{
    auto b = s.sigma + (s.r - 1) * s.omega;
    auto line = komlos_line(params_from_partition(bottle_graph(s.r, s.sigma, s.omega)));
    auto d = ex.graph.graph.sorted_degrees();
    auto last = s.omega * s.n / b;
    auto flat = (1 - make_rational(s.omega + s.sigma, b)) * s.n + ceil_of(make_rational(s.sigma * s.k, s.omega));
    for (std::size_t i = 1; i <= last; ++i) {
        if (i >= s.k && i <= s.k + ex.window) {
            if (rational(d[i - 1]) != flat)
                return false;
        }
        else if (rational(d[i - 1]) < line.value(s.n, i))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Neighbourhood hypotheses for the low-start host

struct NeighbourhoodCheck
{
    bool holds = true;
    /// A vertex whose neighbourhood breaks the property.
    std::optional<vertex> witness;

    explicit operator bool() const { return holds; }
};

/// Every H[N(x)] admits a proper (r-1)-colouring. Any r-chromatic graph
/// passes: the colour of x is missing from N(x).
inline auto check_neighbourhoods_partite(const Graph & h) -> NeighbourhoodCheck
{
    auto r = chromatic_number(h).colours;
    for (vertex x = 0; x < h.size(); ++x) {
        auto sub = induced_subgraph(h, h.neighbours(x));
        if (chromatic_number(sub.graph).colours + 1 > r)
            return {false, x};
    }
    return {};
}

/// Every H[N(x)] needs exactly r-1 colours, so no vertex with an
/// (r-2)-colourable neighbourhood can host x.
inline auto check_neighbourhoods_saturated(const Graph & h) -> NeighbourhoodCheck
{
    auto r = chromatic_number(h).colours;
    for (vertex x = 0; x < h.size(); ++x) {
        auto sub = induced_subgraph(h, h.neighbours(x));
        if (chromatic_number(sub.graph).colours + 1 != r)
            return {false, x};
    }
    return {};
}

struct ExtremalTwo
{
    /// Classes V_1, ..., V_r.
    PartitionedGraph graph;
    std::vector<vertex> v_prime;
    std::size_t low_degree = 0;  ///< (1 - (omega+sigma)/h) n
    std::size_t high_degree = 0; ///< (1 - omega/h) n
};

/// Complete r-partite graph with |V_1| = sigma n/h + floor(eta n) + 1,
/// |V_2| = omega n/h - floor(eta n) - 1, |V_3| = ... = omega n/h, with every
/// V'-V_2 edge removed for V' the first floor(eta n) + 1 vertices of V_1.
inline auto extremal_two(const Graph & h, std::size_t n, const rational & eta) -> ExtremalTwo
{
    using detail::require;
    auto p = chromatic_data(h);
    if (auto nc = check_neighbourhoods_partite(h); ! nc)
        throw std::invalid_argument("extremal_two: neighbourhood of pattern vertex " + std::to_string(*nc.witness) +
                                    " is not (r-1)-partite");
    require(p.h > 0 && n % p.h == 0, "extremal_two: h must divide n");
    require(p.sigma < p.omega, "extremal_two: need sigma < omega");
    require(eta >= 0, "extremal_two: eta must be non-negative");
    auto width = detail::exact_count(p.omega * n / p.h, "extremal_two: omega n / h");
    auto neck = p.sigma * n / p.h;
    auto extra = floor_of(eta * n).convert_to<std::size_t>() + 1;
    require(width > extra, "extremal_two: floor(eta n) + 1 must be below omega n / h");

    std::vector<std::size_t> sizes(p.r, width);
    sizes[0] = neck + extra;
    sizes[1] = width - extra;
    ExtremalTwo ex;
    ex.graph = complete_multipartite(sizes);
    ex.v_prime.assign(ex.graph.classes[0].begin(), ex.graph.classes[0].begin() + static_cast<std::ptrdiff_t>(extra));
    for (auto u : ex.v_prime)
        for (auto v : ex.graph.classes[1])
            ex.graph.graph.remove_edge(u, v);
    ex.low_degree = detail::exact_count((1 - (p.omega + p.sigma) / p.h) * n, "extremal_two: low degree");
    ex.high_degree = detail::exact_count((1 - p.omega / p.h) * n, "extremal_two: high degree");
    return ex;
}

// ---------------------------------------------------------------------------
// Unbalanced complete multipartite host for proportional tilings

/// Complete r-partite graph with |V_1| = x sigma n/h - eta n,
/// |V_2| = (h - x sigma) n/((r-1) h) + eta n, |V_3| = ... = (h - x sigma) n/((r-1) h).
inline auto extremal_three(const Graph & h, std::size_t n, const rational & x, const rational & eta) -> PartitionedGraph
{
    using detail::require;
    require(x > 0 && x <= 1, "extremal_three: x must lie in (0, 1]");
    require(eta >= 0, "extremal_three: eta must be non-negative");
    auto p = chromatic_data(h);
    rational hh(p.h), sigma(p.sigma);
    auto v1 = detail::exact_count(x * sigma * n / hh - eta * n, "extremal_three: |V_1| = x sigma n/h - eta n");
    auto rest = (hh - x * sigma) * n / ((p.r - 1) * hh);
    auto v2 = detail::exact_count(rest + eta * n, "extremal_three: |V_2| = (h - x sigma) n/((r-1) h) + eta n");
    auto vr = detail::exact_count(rest, "extremal_three: |V_3| = (h - x sigma) n/((r-1) h)");
    require(v1 > 0 && v2 > 0 && (p.r == 2 || vr > 0), "extremal_three: every class must be non-empty");
    std::vector<std::size_t> sizes(p.r, vr);
    sizes[0] = v1;
    sizes[1] = v2;
    auto g = complete_multipartite(sizes);
    require(g.graph.size() == n, "extremal_three: class sizes do not sum to n");
    return g;
}

// ---------------------------------------------------------------------------
// Apex vertices

/// Adds tau_count new vertices n .. n+tau_count-1 joined to every other vertex.
inline auto apex_augment(const Graph & g, std::size_t tau_count) -> Graph
{
    auto n = g.size();
    Graph out(n + tau_count);
    for (auto [u, v] : g.edges())
        out.add_edge(u, v);
    for (vertex a = n; a < n + tau_count; ++a)
        for (vertex v = 0; v < a; ++v)
            out.add_edge(v, a);
    return out;
}

// ---------------------------------------------------------------------------
// Perfect tilings of blown-up bottles by B* = B(m)

struct BottleSpec
{
    std::size_t r = 2;
    std::size_t neck = 1;
    std::size_t width = 2;

    auto order() const -> std::size_t { return neck + (r - 1) * width; }
    auto graph() const -> PartitionedGraph { return bottle_graph(r, neck, width); }
};

enum class BlowUpTarget
{
    bottle,         ///< B(mt)
    blown_bottle,   ///< B*(mt)
    narrow_bottle,  ///< B'(mt), B' with width one less
    clique,         ///< K_r(mt)
};

inline auto to_string(BlowUpTarget t) -> std::string
{
    switch (t) {
    case BlowUpTarget::bottle: return "B(mt)";
    case BlowUpTarget::blown_bottle: return "B*(mt)";
    case BlowUpTarget::narrow_bottle: return "B'(mt)";
    case BlowUpTarget::clique: return "K_r(mt)";
    }
    return "?";
}

struct BlowUpTiling
{
    PartitionedGraph host;
    /// Single pattern B* with its classes (neck first).
    Tiling tiling;
    std::size_t t = 0;
    /// For B'(mt): uncovered vertices per host class after the first phase.
    std::vector<std::size_t> residual_after_first_phase;
};

namespace detail {

/// Tiles `rounds` groups of r copies of B* so that within a group each host
/// class receives the neck of exactly one copy.
inline auto tile_rotating_necks(ClassCursor & cur, const PartitionedGraph & bstar, std::size_t r, std::size_t rounds,
                                Tiling & tiling) -> void
{
    for (std::size_t round = 0; round < rounds; ++round)
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<std::size_t> map(r);
            map[0] = j;
            for (std::size_t c = 1; c < r; ++c)
                map[c] = (j + c) % r;
            tiling.copies.push_back(cur.place(bstar, 0, map));
        }
}

inline auto identity_map(std::size_t r) -> std::vector<std::size_t>
{
    std::vector<std::size_t> m(r);
    std::iota(m.begin(), m.end(), std::size_t{0});
    return m;
}

} // namespace detail

/// Perfect B*-tiling of the requested blow-up, t = (omega - sigma) b.
inline auto lemma62_perfect_tiling(BlowUpTarget target, const BottleSpec & spec, std::size_t m) -> BlowUpTiling
{
    using detail::require;
    require(m >= 1, "lemma62_perfect_tiling: m must be positive");
    require(spec.neck < spec.width, "lemma62_perfect_tiling: need neck < width (t = 0 otherwise)");
    auto r = spec.r, sigma = spec.neck, omega = spec.width, b = spec.order();
    auto t = (omega - sigma) * b;
    auto bstar = blow_up(spec.graph(), m);

    BlowUpTiling out;
    out.t = t;
    out.tiling.patterns = {bstar};
    switch (target) {
    case BlowUpTarget::bottle:
        out.host = blow_up(spec.graph(), m * t);
        break;
    case BlowUpTarget::blown_bottle:
        out.host = blow_up(bstar, m * t);
        break;
    case BlowUpTarget::narrow_bottle:
        out.host = blow_up(bottle_graph(r, sigma, omega - 1), m * t);
        break;
    case BlowUpTarget::clique:
        out.host = complete_multipartite(std::vector<std::size_t>(r, m * t));
        break;
    }

    ClassCursor cur(out.host);
    switch (target) {
    case BlowUpTarget::bottle:
        // class-aligned slices: t copies
        for (std::size_t i = 0; i < t; ++i)
            out.tiling.copies.push_back(cur.place(bstar, 0, detail::identity_map(r)));
        break;
    case BlowUpTarget::blown_bottle:
        for (std::size_t i = 0; i < m * t; ++i)
            out.tiling.copies.push_back(cur.place(bstar, 0, detail::identity_map(r)));
        break;
    case BlowUpTarget::narrow_bottle: {
        for (std::size_t i = 0; i < (omega - 1 - sigma) * b; ++i)
            out.tiling.copies.push_back(cur.place(bstar, 0, detail::identity_map(r)));
        for (std::size_t c = 0; c < r; ++c)
            out.residual_after_first_phase.push_back(cur.remaining(c));
        // what is left is K_r(sigma m b): sigma rounds of r copies
        detail::tile_rotating_necks(cur, bstar, r, sigma, out.tiling);
        break;
    }
    case BlowUpTarget::clique:
        detail::tile_rotating_necks(cur, bstar, r, omega - sigma, out.tiling);
        break;
    }
    if (! cur.all_used())
        throw std::logic_error("lemma62_perfect_tiling: placement left vertices uncovered");
    return out;
}

// ---------------------------------------------------------------------------
// Relaxed-neck bottle H* and its perfect H-tiling

struct HStarSpec
{
    Graph pattern;
    rational sigma_prime;
};

struct HStar
{
    /// Bottle with neck sigma' t and width omega' t.
    PartitionedGraph host;
    /// Single pattern H with the classes of a sigma-attaining colouring.
    Tiling tiling;
    std::size_t t = 0;
    std::size_t direct_copies = 0;
    std::size_t gadget_copies = 0;
    /// Uncovered vertices in the neck and in each width class after the direct copies.
    std::size_t residual_neck = 0;
    std::size_t residual_width = 0;
};

/// Complete r-partite gadget with one class of size (r-1) omega(H) and r-1
/// classes of size (r-2) omega(H) + sigma(H). Requires integral omega(H).
inline auto hbar_graph(const TilingParams & p) -> PartitionedGraph
{
    auto big = detail::exact_count(p.omega * (p.r - 1), "hbar: (r-1) omega(H)");
    auto small = detail::exact_count(p.omega * (p.r - 2) + p.sigma, "hbar: (r-2) omega(H) + sigma(H)");
    std::vector<std::size_t> sizes(p.r, small);
    sizes[0] = big;
    return complete_multipartite(sizes);
}

namespace detail {

/// Host class for each pattern class when the pattern's neck goes to host
/// class `neck_to` and the other classes rotate through the remaining ones.
inline auto rotated_map(std::size_t r, std::size_t neck_to, std::size_t shift) -> std::vector<std::size_t>
{
    std::vector<std::size_t> others;
    for (std::size_t c = 0; c < r; ++c)
        if (c != neck_to)
            others.push_back(c);
    std::vector<std::size_t> map(r);
    map[0] = neck_to;
    for (std::size_t c = 1; c < r; ++c)
        map[c] = others[(c - 1 + shift) % (r - 1)];
    return map;
}

inline auto pattern_with_classes(const Graph & h, const TilingParams & p) -> PartitionedGraph
{
    return PartitionedGraph{h, p.colour_classes};
}

} // namespace detail

/// H* = bottle(r, sigma' t, omega' t) with t = b(r-1)(omega(H) - sigma(H))
/// for sigma' = a/b. Tiled by b(r-1)(omega(H) - sigma') copies of H with
/// their sigma-classes in the neck, then b(sigma' - sigma(H)) copies of the
/// gadget with its large class in the neck, each split into r-1 copies of H.
inline auto build_hstar(const HStarSpec & spec) -> HStar
{
    using detail::require;
    auto p = chromatic_data(spec.pattern);
    rational h(p.h), sp = spec.sigma_prime;
    require(sp >= p.sigma && sp * p.r <= h, "build_hstar: sigma' must lie in [sigma(H), h/r]");
    require(p.omega > p.sigma, "build_hstar: sigma(H) = h/r gives t = 0");
    auto b = den_of(sp);
    auto r = p.r;

    HStar out;
    out.t = detail::exact_count(rational(b) * (r - 1) * (p.omega - p.sigma), "build_hstar: t");
    auto omega_prime = (h - sp) / (r - 1);
    auto neck = detail::exact_count(sp * out.t, "build_hstar: sigma' t");
    auto width = detail::exact_count(omega_prime * out.t, "build_hstar: omega' t");
    out.direct_copies = detail::exact_count(rational(b) * (r - 1) * (p.omega - sp), "build_hstar: b(r-1)(omega(H) - sigma')");
    out.gadget_copies = detail::exact_count(rational(b) * (sp - p.sigma), "build_hstar: b(sigma' - sigma(H))");
    if (out.gadget_copies > 0)
        for (std::size_t c = 1; c < r; ++c)
            require(rational(p.colour_classes[c].size()) == p.omega,
                    "build_hstar: the gadget needs every non-neck colour class of H to have size omega(H)");

    out.host = bottle_graph(r, neck, width);
    auto hp = detail::pattern_with_classes(spec.pattern, p);
    out.tiling.patterns = {hp};
    ClassCursor cur(out.host);
    for (std::size_t i = 0; i < out.direct_copies; ++i)
        out.tiling.copies.push_back(cur.place(hp, 0, detail::rotated_map(r, 0, i)));
    out.residual_neck = cur.remaining(0);
    out.residual_width = r > 1 ? cur.remaining(1) : 0;

    // Inside one gadget, copy j puts its neck in small class j and its class
    // c at position (c + j) mod r, position 0 being the large class; host
    // class of gadget position q is q (large class in the neck of H*).
    for (std::size_t g = 0; g < out.gadget_copies; ++g)
        for (std::size_t j = 1; j < r; ++j) {
            std::vector<std::size_t> map(r);
            for (std::size_t c = 0; c < r; ++c)
                map[c] = (c + j) % r;
            out.tiling.copies.push_back(cur.place(hp, 0, map));
        }
    if (! cur.all_used())
        throw std::logic_error("build_hstar: explicit placement did not cover H*");
    return out;
}

// ---------------------------------------------------------------------------
// Bottle H_1 carrying an x-proportional H-tiling

struct HOne
{
    /// bottle(r, a(r-1)sigma, bh - a sigma)
    PartitionedGraph host;
    Tiling tiling;
    std::size_t a = 0, b = 0;
    std::size_t sigma1 = 0, omega1 = 0;
};

/// x = a/b in lowest terms; a(r-1) copies of H with their sigma-classes in
/// the neck and the other classes rotated through the width classes.
inline auto build_h1(const Graph & h, const rational & x) -> HOne
{
    using detail::require;
    require(x > 0 && x < 1, "build_h1: x must lie in (0, 1)");
    auto p = chromatic_data(h);
    HOne out;
    out.a = num_of(x).convert_to<std::size_t>();
    out.b = den_of(x).convert_to<std::size_t>();
    out.sigma1 = out.a * (p.r - 1) * p.sigma;
    out.omega1 = out.b * p.h - out.a * p.sigma;
    out.host = bottle_graph(p.r, out.sigma1, out.omega1);
    auto hp = detail::pattern_with_classes(h, p);
    out.tiling.patterns = {hp};
    ClassCursor cur(out.host);
    for (std::size_t i = 0; i < out.a * (p.r - 1); ++i)
        out.tiling.copies.push_back(cur.place(hp, 0, detail::rotated_map(p.r, 0, i)));
    return out;
}

} // namespace ktile
