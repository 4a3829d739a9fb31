#pragma once

// Seeded randomness with results that do not depend on the standard
// library's distribution implementations.

#include "ktile/graph.hpp"
#include "ktile/rational.hpp"

#include <cstdint>
#include <random>

namespace ktile {

class Rng
{
public:
    static constexpr const char * algorithm = "mt19937_64";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    auto next() -> std::uint64_t { return engine_(); }

    /// Uniform in [0, bound) by rejection, so every platform draws the same values.
    auto below(std::uint64_t bound) -> std::uint64_t
    {
        if (bound == 0)
            throw std::invalid_argument("Rng::below: bound must be positive");
        auto limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do
            x = engine_();
        while (x >= limit);
        return x % bound;
    }

    /// Uniform in [lo, hi].
    auto between(std::uint64_t lo, std::uint64_t hi) -> std::uint64_t { return lo + below(hi - lo + 1); }

    /// True with probability p (p a rational in [0, 1]).
    auto chance(const rational & p) -> bool
    {
        auto num = num_of(p), den = den_of(p);
        if (den > std::numeric_limits<std::uint64_t>::max())
            throw std::invalid_argument("Rng::chance: denominator too large");
        return integer(below(den.convert_to<std::uint64_t>())) < num;
    }

    template <typename T>
    auto shuffle(std::vector<T> & v) -> void
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// G(n, p): each pair is an edge independently with probability p, pairs
/// drawn in (u, v) lexicographic order.
inline auto random_graph(std::size_t n, const rational & p, Rng & rng) -> Graph
{
    Graph g(n);
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            if (rng.chance(p))
                g.add_edge(u, v);
    return g;
}

} // namespace ktile
