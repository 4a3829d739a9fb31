#pragma once

// Maximum bipartite matching by augmenting paths (Kuhn). Left vertices are
// tried in index order and their edges in list order, so results are
// deterministic.

#include <cstddef>
#include <limits>
#include <vector>

namespace ktile {

struct BipartiteMatching
{
    static constexpr std::size_t unmatched = std::numeric_limits<std::size_t>::max();

    std::size_t size = 0;
    /// match_left[l] is the right partner of l, or unmatched.
    std::vector<std::size_t> match_left;
    std::vector<std::size_t> match_right;
};

/// `adj[l]` lists the right vertices (< right_count) left vertex l may use.
inline auto maximum_matching(const std::vector<std::vector<std::size_t>> & adj, std::size_t right_count) -> BipartiteMatching
{
    BipartiteMatching m;
    m.match_left.assign(adj.size(), BipartiteMatching::unmatched);
    m.match_right.assign(right_count, BipartiteMatching::unmatched);
    std::vector<std::size_t> seen(right_count, 0);
    std::size_t stamp = 0;

    auto augment = [&](auto & self, std::size_t l) -> bool {
        for (auto r : adj[l]) {
            if (seen[r] == stamp)
                continue;
            seen[r] = stamp;
            if (m.match_right[r] == BipartiteMatching::unmatched || self(self, m.match_right[r])) {
                m.match_left[l] = r;
                m.match_right[r] = l;
                return true;
            }
        }
        return false;
    };

    for (std::size_t l = 0; l < adj.size(); ++l) {
        ++stamp;
        if (augment(augment, l))
            ++m.size;
    }
    return m;
}

} // namespace ktile
