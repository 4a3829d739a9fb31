#pragma once

#include "ktile/ktile.hpp"

#include <fstream>
#include <string>
#include <vector>

namespace ktile::fixtures {

inline auto load_corpus() -> std::vector<Graph>
{
    std::ifstream in(KTILE_CORPUS);
    if (! in)
        throw std::runtime_error(std::string("cannot open corpus ") + KTILE_CORPUS);
    std::vector<Graph> out;
    for (std::string line; std::getline(in, line);)
        if (! line.empty())
            out.push_back(parse_graph6(line));
    return out;
}

/// Random graph with order in [lo, hi] and edge probability drawn from `ps`.
inline auto random_host(Rng & rng, std::size_t lo, std::size_t hi, const std::vector<rational> & ps) -> Graph
{
    auto n = static_cast<std::size_t>(rng.between(lo, hi));
    return random_graph(n, ps[rng.below(ps.size())], rng);
}

inline auto probabilities() -> std::vector<rational>
{
    return {make_rational(3, 10), make_rational(1, 2), make_rational(7, 10)};
}

/// Random connected pattern from the corpus with chromatic number >= 2.
inline auto random_pattern(Rng & rng, const std::vector<Graph> & corpus, std::size_t max_order = 7) -> Graph
{
    for (;;) {
        auto & g = corpus[rng.below(corpus.size())];
        if (g.size() <= max_order)
            return g;
    }
}

} // namespace ktile::fixtures
