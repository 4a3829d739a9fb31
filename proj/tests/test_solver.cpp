#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ktile;

namespace {

// Counts vertex sets that carry a copy of the pattern by trying every
// injective map, independent of the solver's search order.
auto brute_copy_sets(const Graph & host, const Graph & pattern) -> std::set<std::vector<vertex>>
{
    std::set<std::vector<vertex>> out;
    std::vector<vertex> image(pattern.size());
    std::vector<char> used(host.size(), 0);
    auto place = [&](auto & self, std::size_t p) -> void {
        if (p == pattern.size()) {
            for (auto [a, b] : pattern.edges())
                if (! host.adjacent(image[a], image[b]))
                    return;
            auto s = image;
            std::sort(s.begin(), s.end());
            out.insert(s);
            return;
        }
        for (vertex v = 0; v < host.size(); ++v)
            if (! used[v]) {
                used[v] = 1;
                image[p] = v;
                self(self, p + 1);
                used[v] = 0;
            }
    };
    place(place, 0);
    return out;
}

auto k3_only() { return std::vector<Graph>{complete_graph(3)}; }

} // namespace

TEST(Enumerate, CopyCountExamples)
{
    EXPECT_EQ(enumerate_copies(complete_graph(4), complete_graph(3)).copies.size(), 4u);
    EXPECT_EQ(enumerate_copies(cycle_graph(5), complete_graph(3)).copies.size(), 0u);
    EXPECT_EQ(enumerate_copies(complete_multipartite({3, 3}).graph, path_graph(3)).copies.size(), 18u);
}

TEST(Enumerate, AgreesWithBruteForce)
{
    Rng rng(51);
    std::vector<Graph> patterns = {complete_graph(2), complete_graph(3), path_graph(3), cycle_graph(4), cycle_graph(5),
                                   complete_multipartite({1, 3}).graph};
    for (int trial = 0; trial < 60; ++trial) {
        auto host = fixtures::random_host(rng, 4, 8, fixtures::probabilities());
        auto & pat = patterns[rng.below(patterns.size())];
        auto cat = enumerate_copies(host, pat);
        auto brute = brute_copy_sets(host, pat);
        ASSERT_EQ(cat.copies.size(), brute.size());
        std::set<std::vector<vertex>> got;
        for (auto & c : cat.copies) {
            got.insert(c.vertices.to_vector());
            Tiling t{{unpartitioned(pat)}, {c.witness}};
            ASSERT_TRUE(is_valid_tiling(host, t).valid);
        }
        ASSERT_EQ(got, brute);
        for (std::size_t i = 1; i < cat.copies.size(); ++i)
            ASSERT_TRUE(lex_less(cat.copies[i - 1].vertices, cat.copies[i].vertices));
    }
}

TEST(Enumerate, MustTouchAndCap)
{
    auto host = complete_graph(6);
    EnumerateOptions eo;
    eo.must_touch = vertex_set::of(6, std::vector<vertex>{0});
    auto cat = enumerate_copies(host, complete_graph(3), eo);
    EXPECT_EQ(cat.copies.size(), 10u);
    for (auto & c : cat.copies)
        EXPECT_TRUE(c.vertices.test(0));

    EnumerateOptions capped;
    capped.cap = 5;
    auto few = enumerate_copies(host, complete_graph(3), capped);
    EXPECT_EQ(few.copies.size(), 5u);
    EXPECT_TRUE(few.truncated);
    EXPECT_FALSE(enumerate_copies(host, complete_graph(3)).truncated);
}

TEST(Solver, Examples)
{
    auto r = max_tiling(complete_graph(6), k3_only());
    EXPECT_EQ(r.covered_count, 6u);
    EXPECT_EQ(r.optimality, Optimality::proven_optimal);
    EXPECT_TRUE(is_perfect_tiling(complete_graph(6), r.tiling));

    auto m = max_tiling(cycle_graph(5), std::vector<Graph>{complete_graph(2)});
    EXPECT_EQ(m.covered_count, 4u);
    EXPECT_EQ(coverage_deficit(m, 5), 1u);

    auto host = complete_multipartite({1, 6, 5});
    auto b = max_tiling(host.graph, k3_only());
    EXPECT_EQ(b.covered_count, 3u);
    EXPECT_EQ(b.optimality, Optimality::proven_optimal);
    EXPECT_EQ(max_tiling_oracle(host.graph, k3_only()).covered_count, 3u);
}

TEST(Solver, OracleExamples)
{
    auto k4e = complete_graph(4);
    k4e.remove_edge(0, 1);
    EXPECT_EQ(max_tiling_oracle(k4e, k3_only()).covered_count, 3u);
    auto c4 = blow_up(complete_graph(2), 2).graph;
    auto o = max_tiling_oracle(c4, std::vector<Graph>{complete_graph(2)});
    EXPECT_EQ(o.covered_count, 4u);
    EXPECT_EQ(coverage_deficit(o, 4), 0u);
    EXPECT_TRUE(is_perfect_tiling(c4, o.tiling));
    EXPECT_THROW(max_tiling_oracle(Graph(17), k3_only()), std::invalid_argument);
}

TEST(Solver, AgreesWithOracleOnRandomHosts)
{
    Rng rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        auto host = fixtures::random_host(rng, 3, 13, fixtures::probabilities());
        auto r = max_tiling(host, k3_only());
        auto o = max_tiling_oracle(host, k3_only());
        ASSERT_EQ(r.optimality, Optimality::proven_optimal);
        ASSERT_EQ(r.covered_count, o.covered_count) << emit_graph6(host);
        ASSERT_TRUE(is_valid_tiling(host, r.tiling).valid);
        ASSERT_TRUE(is_valid_tiling(host, o.tiling).valid);
        ASSERT_EQ(o.tiling.covered_count(), o.covered_count);
    }
}

TEST(Solver, MixedPatternsAgreeWithOracle)
{
    Rng rng(63);
    std::vector<Graph> pats = {complete_graph(3), cycle_graph(4)};
    for (int trial = 0; trial < 60; ++trial) {
        auto host = fixtures::random_host(rng, 4, 12, fixtures::probabilities());
        auto r = max_tiling(host, pats);
        auto o = max_tiling_oracle(host, pats);
        ASSERT_EQ(r.covered_count, o.covered_count) << emit_graph6(host);
        ASSERT_TRUE(is_valid_tiling(host, r.tiling).valid);
    }
}

TEST(Solver, WeightedObjectiveAgreesWithOracle)
{
    Rng rng(67);
    for (int trial = 0; trial < 60; ++trial) {
        auto host = fixtures::random_host(rng, 4, 12, fixtures::probabilities());
        vertex_set w(host.size());
        for (vertex v = 0; v < host.size(); ++v)
            if (rng.below(2))
                w.set(v);
        SolveOptions opt;
        opt.weights = w;
        auto r = max_tiling(host, std::vector<Graph>{path_graph(3)}, opt);
        auto o = max_tiling_oracle(host, detail::as_partitioned({path_graph(3)}), w);
        ASSERT_EQ(r.objective, o.objective);
        ASSERT_EQ(r.objective, r.tiling.covered(host.size()).intersection_count(w));
    }
}

TEST(Solver, BudgetExhaustionIsReported)
{
    Rng rng(71);
    auto host = random_graph(40, make_rational(1, 2), rng);
    SolveOptions opt;
    opt.node_budget = 5;
    auto r = max_tiling(host, std::vector<Graph>{cycle_graph(5)}, opt);
    EXPECT_EQ(r.optimality, Optimality::best_found);
    EXPECT_TRUE(is_valid_tiling(host, r.tiling).valid);
}

TEST(Solver, IsDeterministic)
{
    Rng a(73), b(73);
    auto ha = random_graph(14, make_rational(1, 2), a);
    auto hb = random_graph(14, make_rational(1, 2), b);
    auto ra = max_tiling(ha, k3_only()), rb = max_tiling(hb, k3_only());
    EXPECT_EQ(ra.tiling.copies, rb.tiling.copies);
    EXPECT_EQ(ra.nodes, rb.nodes);
}

TEST(Solver, MonotoneUnderEdgeAddition)
{
    Rng rng(79);
    for (int trial = 0; trial < 40; ++trial) {
        auto host = fixtures::random_host(rng, 5, 12, fixtures::probabilities());
        auto before = max_tiling(host, k3_only()).covered_count;
        auto u = rng.below(host.size()), v = rng.below(host.size());
        if (u != v)
            host.add_edge(u, v);
        EXPECT_GE(max_tiling(host, k3_only()).covered_count, before);
    }
}
