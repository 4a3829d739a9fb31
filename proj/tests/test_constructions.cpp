#include "support.hpp"

#include <gtest/gtest.h>

using namespace ktile;

namespace {

auto q(long long p, long long d = 1) { return make_rational(p, d); }

auto prop_one_spec() -> ExtremalOneSpec { return {2, 1, 2, 15, q(1, 15), 2}; }

} // namespace

TEST(ExtremalOne, DegreeDisplaysHold)
{
    auto s = prop_one_spec();
    auto ex = extremal_one(s);
    EXPECT_EQ(ex.graph.graph.size(), 15u);
    EXPECT_EQ(ex.window, 2u);
    EXPECT_EQ(ex.C.size(), 4u);
    EXPECT_EQ(ex.A.size(), 1u);
    EXPECT_TRUE(extremal_one_degree_conditions(s, ex));
    EXPECT_EQ(ex.graph.graph.sorted_degrees(),
              (std::vector<std::size_t>{1, 1, 1, 1, 3, 3, 4, 4, 5, 5, 6, 8, 10, 10, 14}));
}

TEST(ExtremalOne, CIsIndependentAndMissesTheRestOfV1)
{
    auto ex = extremal_one(prop_one_spec());
    auto & g = ex.graph.graph;
    for (auto u : ex.C)
        for (auto v : ex.C)
            EXPECT_FALSE(g.adjacent(u, v));
    auto a_set = vertex_set::of(g.size(), ex.A);
    for (auto u : ex.C)
        for (auto v : ex.a) {
            if (! a_set.test(v)) {
                EXPECT_FALSE(g.adjacent(u, v));
            }
        }
}

TEST(ExtremalOne, FailsTheLineOnlyInsideTheWindow)
{
    auto s = prop_one_spec();
    auto ex = extremal_one(s);
    auto line = komlos_line(params_from_partition(bottle_graph(2, 1, 2)));
    auto bad = degree_sequence_violations(ex.graph.graph, line);
    EXPECT_EQ(bad, (std::vector<std::size_t>{3, 4}));
    for (auto i : bad) {
        EXPECT_GE(i, s.k);
        EXPECT_LE(i, s.k + ex.window);
    }
}

TEST(ExtremalOne, EveryTilingMissesTwoVerticesOfC)
{
    auto s = prop_one_spec();
    auto ex = extremal_one(s);
    SolveOptions opt;
    opt.weights = vertex_set::of(15, ex.C);
    auto r = max_tiling(ex.graph.graph, {bottle_graph(2, 1, 2)}, opt);
    EXPECT_EQ(r.optimality, Optimality::proven_optimal);
    EXPECT_EQ(r.objective, 2u);
    EXPECT_GE(ex.C.size() - r.objective, 2u);
}

TEST(ExtremalOne, RejectsBadParameters)
{
    auto s = prop_one_spec();
    s.n = 16;
    EXPECT_THROW(extremal_one(s), std::invalid_argument);
    s = prop_one_spec();
    s.eta = q(1, 20);
    EXPECT_THROW(extremal_one(s), std::invalid_argument);
    s = prop_one_spec();
    s.k = 8;
    EXPECT_THROW(extremal_one(s), std::invalid_argument);
}

TEST(ExtremalTwo, DegreeClausesForC5)
{
    auto c5 = cycle_graph(5);
    EXPECT_TRUE(check_neighbourhoods_partite(c5).holds);
    auto ex = extremal_two(c5, 40, q(1, 20));
    EXPECT_EQ(ex.graph.class_sizes(), (std::vector<std::size_t>{11, 13, 16}));
    EXPECT_EQ(ex.v_prime.size(), 3u);
    EXPECT_EQ(ex.low_degree, 16u);
    EXPECT_EQ(ex.high_degree, 24u);
    auto vp = vertex_set::of(40, ex.v_prime);
    for (vertex v = 0; v < 40; ++v) {
        if (vp.test(v))
            EXPECT_EQ(ex.graph.graph.degree(v), ex.low_degree);
        else
            EXPECT_GE(ex.graph.graph.degree(v), ex.high_degree);
    }
}

// C5 meets the literal neighbourhood hypothesis but not the saturated one,
// and copies of C5 do pass through V'.
TEST(ExtremalTwo, C5CopiesReachVPrime)
{
    auto c5 = cycle_graph(5);
    EXPECT_FALSE(check_neighbourhoods_saturated(c5).holds);
    auto ex = extremal_two(c5, 40, q(1, 20));
    EnumerateOptions eo;
    eo.must_touch = vertex_set::of(40, ex.v_prime);
    eo.cap = 1;
    EXPECT_EQ(enumerate_copies(ex.graph.graph, c5, eo).copies.size(), 1u);
}

TEST(ExtremalTwo, SaturatedPatternsMissVPrime)
{
    auto b = bottle_graph(3, 1, 2).graph;
    EXPECT_TRUE(check_neighbourhoods_saturated(b).holds);
    auto ex = extremal_two(b, 20, q(1, 20));
    EnumerateOptions eo;
    eo.must_touch = vertex_set::of(20, ex.v_prime);
    EXPECT_TRUE(enumerate_copies(ex.graph.graph, b, eo).copies.empty());
    EXPECT_FALSE(enumerate_copies(ex.graph.graph, b).copies.empty());
}

TEST(ExtremalThree, TriangleInstance)
{
    auto host = extremal_three(complete_graph(3), 18, q(1, 3), q(1, 18));
    EXPECT_EQ(host.class_sizes(), (std::vector<std::size_t>{1, 9, 8}));
    auto r = max_tiling(host.graph, std::vector<Graph>{complete_graph(3)});
    EXPECT_EQ(r.covered_count, 3u);
    EXPECT_LT(rational(r.covered_count), (q(1, 3) - q(1, 18)) * 18);
    EXPECT_THROW(extremal_three(complete_graph(3), 17, q(1, 3), q(1, 18)), std::invalid_argument);
}

TEST(ExtremalThree, ClassSizesSumToN)
{
    for (std::size_t n : {18u, 36u, 54u}) {
        auto host = extremal_three(complete_graph(3), n, q(1, 3), q(1, 18));
        std::size_t sum = 0;
        for (auto s : host.class_sizes())
            sum += s;
        EXPECT_EQ(sum, n);
    }
}

TEST(Apex, Examples)
{
    Rng rng(81);
    auto g = random_graph(10, q(2, 5), rng);
    EXPECT_EQ(apex_augment(g, 0), g);
    auto a = apex_augment(g, 3);
    for (vertex v = 10; v < 13; ++v)
        EXPECT_EQ(a.degree(v), 12u);
    auto before = g.sorted_degrees();
    auto after = a.sorted_degrees();
    for (std::size_t i = 0; i < 10; ++i)
        EXPECT_EQ(after[i], before[i] + 3);
}

TEST(Lemma62, AllTargetsGivePerfectTilings)
{
    for (auto spec : {BottleSpec{2, 1, 2}, BottleSpec{3, 1, 2}, BottleSpec{3, 2, 3}})
        for (std::size_t m : {1u, 2u})
            for (auto target : {BlowUpTarget::bottle, BlowUpTarget::blown_bottle, BlowUpTarget::narrow_bottle,
                                BlowUpTarget::clique}) {
                auto out = lemma62_perfect_tiling(target, spec, m);
                auto check = is_valid_tiling(out.host.graph, out.tiling);
                ASSERT_TRUE(check.valid) << to_string(target) << ": " << check.violation;
                ASSERT_TRUE(is_perfect_tiling(out.host.graph, out.tiling)) << to_string(target);
            }
}

TEST(Lemma62, StarIntoK33)
{
    auto out = lemma62_perfect_tiling(BlowUpTarget::clique, {2, 1, 2}, 1);
    EXPECT_EQ(out.t, 3u);
    EXPECT_EQ(out.host.class_sizes(), (std::vector<std::size_t>{3, 3}));
    ASSERT_EQ(out.tiling.copies.size(), 2u);
    auto idx = out.host.class_index();
    auto neck_of = [&](const Embedding & e) { return idx[e.image[out.tiling.patterns[0].classes[0][0]]]; };
    EXPECT_NE(neck_of(out.tiling.copies[0]), neck_of(out.tiling.copies[1]));
}

TEST(Lemma62, NarrowBottleResiduals)
{
    auto out = lemma62_perfect_tiling(BlowUpTarget::narrow_bottle, {3, 1, 2}, 1);
    EXPECT_EQ(out.t, 5u);
    EXPECT_EQ(out.host.class_sizes(), (std::vector<std::size_t>{5, 5, 5}));
    EXPECT_EQ(out.residual_after_first_phase, (std::vector<std::size_t>{5, 5, 5}));
    EXPECT_EQ(out.tiling.copies.size(), 3u);
    auto b = lemma62_perfect_tiling(BlowUpTarget::bottle, {3, 1, 2}, 2);
    EXPECT_EQ(b.tiling.copies.size(), b.t);
}

TEST(HStar, C5WithRelaxedNeck)
{
    auto hs = build_hstar({cycle_graph(5), q(3, 2)});
    EXPECT_EQ(hs.t, 4u);
    EXPECT_EQ(hs.host.class_sizes(), (std::vector<std::size_t>{6, 7, 7}));
    EXPECT_EQ(hs.direct_copies, 2u);
    EXPECT_EQ(hs.gadget_copies, 1u);
    EXPECT_EQ(hs.tiling.copies.size(), 4u);
    EXPECT_TRUE(is_perfect_tiling(hs.host.graph, hs.tiling));
    EXPECT_EQ(hs.host.graph.size(), 5u * hs.t);
    EXPECT_EQ(hbar_graph(chromatic_data(cycle_graph(5))).class_sizes(), (std::vector<std::size_t>{4, 3, 3}));
}

TEST(HStar, NeckAtSigmaNeedsNoGadget)
{
    for (auto & h : {cycle_graph(5), complete_multipartite({1, 2, 2}).graph, complete_multipartite({1, 3}).graph}) {
        auto p = chromatic_data(h);
        auto hs = build_hstar({h, rational(p.sigma)});
        EXPECT_EQ(hs.gadget_copies, 0u);
        EXPECT_TRUE(is_perfect_tiling(hs.host.graph, hs.tiling));
        EXPECT_EQ(hs.tiling.covered_count(), p.h * hs.t);
    }
}

TEST(HStar, RandomRelaxedNecksTilePerfectly)
{
    std::vector<Graph> pats = {cycle_graph(5), complete_multipartite({1, 3, 3}).graph, complete_multipartite({1, 4}).graph,
                               complete_multipartite({2, 5}).graph};
    for (auto & h : pats) {
        auto p = chromatic_data(h);
        for (long long b = 1; b <= 3; ++b)
            for (long long a = static_cast<long long>(p.sigma) * b; a * static_cast<long long>(p.r) <= static_cast<long long>(p.h) * b; ++a) {
                auto sp = q(a, b);
                auto hs = build_hstar({h, sp});
                ASSERT_TRUE(is_perfect_tiling(hs.host.graph, hs.tiling)) << emit_graph6(h) << " " << to_string(sp);
            }
    }
}

TEST(HOne, TriangleAtOneHalf)
{
    auto h1 = build_h1(complete_graph(3), q(1, 2));
    EXPECT_EQ(h1.host.class_sizes(), (std::vector<std::size_t>{2, 5, 5}));
    EXPECT_EQ(h1.host.graph.size(), 12u);
    EXPECT_EQ(h1.tiling.copies.size(), 2u);
    EXPECT_TRUE(is_valid_tiling(h1.host.graph, h1.tiling).valid);
    EXPECT_EQ(h1.tiling.covered_count(), 6u);
}

TEST(HOne, ProportionAndNeckInequality)
{
    auto corpus = fixtures::load_corpus();
    Rng rng(83);
    for (int trial = 0; trial < 30; ++trial) {
        auto h = fixtures::random_pattern(rng, corpus, 6);
        auto b = static_cast<long long>(rng.between(2, 5));
        auto x = q(static_cast<long long>(rng.between(1, b - 1)), b);
        auto h1 = build_h1(h, x);
        EXPECT_LT(h1.sigma1, h1.omega1);
        ASSERT_TRUE(is_valid_tiling(h1.host.graph, h1.tiling).valid);
        EXPECT_EQ(rational(h1.tiling.covered_count()) / h1.host.graph.size(), x);
    }
}
