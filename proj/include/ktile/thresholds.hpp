#pragma once

// Tiling parameters of a pattern graph and the degree-sequence bound lines
// built from them. All arithmetic is exact.

#include "ktile/coloring.hpp"
#include "ktile/graph.hpp"
#include "ktile/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ktile {

/// Pattern data every threshold is built from.
struct TilingParams
{
    std::size_t h = 0;     ///< order of the pattern
    std::size_t r = 0;     ///< chromatic number
    std::size_t sigma = 0; ///< smallest class over all r-colourings
    rational omega;        ///< (h - sigma) / (r - 1)
    rational chi_cr;       ///< (r - 1) h / (h - sigma)
    /// Colour classes of an optimal colouring attaining sigma; class 0 has size sigma.
    std::vector<std::vector<vertex>> colour_classes;
};

namespace detail {

inline auto finish_params(std::size_t h, std::size_t r, std::size_t sigma, std::vector<std::vector<vertex>> classes)
    -> TilingParams
{
    TilingParams p;
    p.h = h;
    p.r = r;
    p.sigma = sigma;
    p.omega = make_rational(h - sigma, r - 1);
    p.chi_cr = make_rational(integer(r - 1) * h, h - sigma);
    p.colour_classes = std::move(classes);
    return p;
}

} // namespace detail

/// Exact (h, r, sigma, omega, chi_cr) for a pattern with at least one edge.
inline auto chromatic_data(const Graph & pattern) -> TilingParams
{
    if (pattern.edge_count() == 0)
        throw std::domain_error("chromatic_data: pattern has no edges (chromatic number 1 is unsupported)");
    auto chi = chromatic_number(pattern);
    auto best = min_smallest_class_colouring(pattern, chi.colours);
    auto classes = best.classes();
    auto sigma = classes.front().size();
    return detail::finish_params(pattern.size(), chi.colours, sigma, std::move(classes));
}

/// Same data for a complete multipartite graph read off its classes, where
/// the r-colouring is forced. Throws if the graph is not complete
/// multipartite on the given classes.
inline auto params_from_partition(const PartitionedGraph & pg) -> TilingParams
{
    auto & g = pg.graph;
    if (! is_partition(g.size(), pg.classes) || pg.classes.size() < 2)
        throw std::invalid_argument("params_from_partition: need at least two classes partitioning the vertices");
    auto idx = pg.class_index();
    for (vertex u = 0; u < g.size(); ++u)
        for (vertex v = u + 1; v < g.size(); ++v)
            if (g.adjacent(u, v) != (idx[u] != idx[v]))
                throw std::invalid_argument("params_from_partition: graph is not complete multipartite on its classes");

    std::vector<std::vector<vertex>> classes = pg.classes;
    std::size_t smallest = 0;
    for (std::size_t c = 1; c < classes.size(); ++c)
        if (classes[c].size() < classes[smallest].size())
            smallest = c;
    std::rotate(classes.begin(), classes.begin() + static_cast<std::ptrdiff_t>(smallest),
                classes.begin() + static_cast<std::ptrdiff_t>(smallest) + 1);
    auto r = classes.size(), sigma = classes.front().size();
    return detail::finish_params(g.size(), r, sigma, std::move(classes));
}

/// g_H(x) = x (1 - 1/chi_cr) + (1 - x)(1 - 1/(r-1)) for 0 < x <= 1; at x = 1
/// this is 1 - omega/h.
inline auto g_of_x(const TilingParams & p, const rational & x) -> rational
{
    if (x <= 0 || x > 1)
        throw std::invalid_argument("g_of_x: x must lie in (0, 1]");
    return x * (1 - 1 / p.chi_cr) + (1 - x) * (1 - make_rational(1, p.r - 1));
}

/// Lower bound d_i >= intercept*n + slope*i + slack*n for 1 <= i <= cutoff*n.
/// `plateau` is the flat value the line meets at i = cutoff*n (without slack).
struct BoundLine
{
    rational intercept;
    rational slope;
    rational cutoff;
    rational slack;
    rational plateau;

    /// Real-valued bound at index i for a host of order n.
    auto value(std::size_t n, std::size_t i) const -> rational { return intercept * n + slope * i + slack * n; }

    /// Smallest integer degree meeting the bound.
    auto required_degree(std::size_t n, std::size_t i) const -> integer { return ceil_of(value(n, i)); }

    /// Last constrained index, floor(cutoff * n).
    auto last_index(std::size_t n) const -> std::size_t { return floor_of(cutoff * n).convert_to<std::size_t>(); }

    /// Flat part beyond the cutoff, including slack.
    auto flat_value(std::size_t n) const -> rational { return (plateau + slack) * n; }

    friend auto operator==(const BoundLine &, const BoundLine &) -> bool = default;
};

/// Builds a line and asserts it meets `plateau` exactly at the cutoff.
inline auto make_bound_line(rational intercept, rational slope, rational cutoff, rational slack, rational plateau) -> BoundLine
{
    if (intercept + slope * cutoff != plateau)
        throw std::logic_error("bound line does not meet its plateau at the cutoff");
    if (slack < 0)
        throw std::invalid_argument("bound line slack must be non-negative");
    return {std::move(intercept), std::move(slope), std::move(cutoff), std::move(slack), std::move(plateau)};
}

/// d_i >= (1 - (omega+sigma)/h) n + (sigma/omega) i + eta n for i <= omega n / h.
inline auto komlos_line(const TilingParams & p, const rational & eta = 0) -> BoundLine
{
    rational sigma(p.sigma);
    return make_bound_line(1 - (p.omega + sigma) / p.h, sigma / p.omega, p.omega / p.h, eta, 1 - p.omega / p.h);
}

/// The x-proportional line: intercept g(x) - x sigma/h, slope (r-1) x sigma/(h - x sigma),
/// cutoff (h - x sigma)/((r-1) h); it meets g(x) at the cutoff.
inline auto x_line(const TilingParams & p, const rational & x, const rational & eta = 0) -> BoundLine
{
    if (x <= 0 || x >= 1)
        throw std::invalid_argument("x_line: x must lie in (0, 1)");
    rational sigma(p.sigma), h(p.h), rm1(p.r - 1);
    auto g = g_of_x(p, x);
    return make_bound_line(g - x * sigma / h, rm1 * x * sigma / (h - x * sigma), (h - x * sigma) / (rm1 * h), eta, g);
}

/// The line for a relaxed neck sigma' with sigma(H) <= sigma' <= h/r.
inline auto general_line(const TilingParams & p, const rational & sigma_prime, const rational & eta = 0) -> BoundLine
{
    rational h(p.h);
    if (sigma_prime < p.sigma || sigma_prime * p.r > h)
        throw std::invalid_argument("general_line: sigma' must lie in [sigma(H), h/r]");
    auto omega_prime = (h - sigma_prime) / (p.r - 1);
    return make_bound_line(1 - (omega_prime + sigma_prime) / h, sigma_prime / omega_prime, omega_prime / h, eta,
                           1 - omega_prime / h);
}

inline auto general_line(const Graph & pattern, const rational & sigma_prime, const rational & eta = 0) -> BoundLine
{
    return general_line(chromatic_data(pattern), sigma_prime, eta);
}

struct DegreeCheck
{
    bool pass = true;
    std::size_t index = 0;  ///< first violating one-based index
    std::size_t degree = 0; ///< d_index
    integer required = 0;   ///< ceil of the bound at that index

    explicit operator bool() const { return pass; }
};

/// Checks sorted degrees d_1 <= ... <= d_n (zero-based storage) against the line.
inline auto check_degree_sequence(const std::vector<std::size_t> & sorted_degrees, const BoundLine & line) -> DegreeCheck
{
    auto n = sorted_degrees.size();
    auto last = std::min(line.last_index(n), n);
    for (std::size_t i = 1; i <= last; ++i) {
        auto req = line.required_degree(n, i);
        if (integer(sorted_degrees[i - 1]) < req)
            return {false, i, sorted_degrees[i - 1], req};
    }
    return {};
}

inline auto check_degree_sequence(const Graph & g, const BoundLine & line) -> DegreeCheck
{
    return check_degree_sequence(g.sorted_degrees(), line);
}

/// Every violating one-based index, not only the first.
inline auto degree_sequence_violations(const Graph & g, const BoundLine & line) -> std::vector<std::size_t>
{
    auto d = g.sorted_degrees();
    auto n = d.size();
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= std::min(line.last_index(n), n); ++i)
        if (integer(d[i - 1]) < line.required_degree(n, i))
            out.push_back(i);
    return out;
}

} // namespace ktile
