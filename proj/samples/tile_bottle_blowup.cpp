// Builds a perfect K_{1,2,2}-tiling of a balanced complete tripartite graph,
// checks it, and compares with the exact solver on a small host.

#include "ktile/ktile.hpp"

#include <iostream>

int main()
{
    using namespace ktile;
    auto out = lemma62_perfect_tiling(BlowUpTarget::clique, BottleSpec{3, 1, 2}, 1);
    std::cout << "host classes:";
    for (auto s : out.host.class_sizes())
        std::cout << " " << s;
    std::cout << "\ncopies: " << out.tiling.copies.size()
              << "\nperfect: " << (is_perfect_tiling(out.host.graph, out.tiling) ? "yes" : "no") << "\n";

    auto res = max_tiling(out.host.graph, {bottle_graph(3, 1, 2)});
    std::cout << "solver covers " << res.covered_count << " of " << out.host.graph.size() << " ("
              << to_string(res.optimality) << ")\n";
}
