#include "support.hpp"

#include <gtest/gtest.h>

using namespace ktile;

namespace {

// Independent graph6 reader for n < 63: expands every byte to six bits and
// walks the upper triangle column by column.
auto naive_graph6(const std::string & s) -> std::vector<std::pair<vertex, vertex>>
{
    std::size_t n = static_cast<unsigned char>(s[0]) - 63;
    std::string bits;
    for (std::size_t i = 1; i < s.size(); ++i) {
        int v = static_cast<unsigned char>(s[i]) - 63;
        for (int b = 5; b >= 0; --b)
            bits.push_back((v >> b & 1) ? '1' : '0');
    }
    std::vector<std::pair<vertex, vertex>> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k)
            if (bits[k] == '1')
                edges.emplace_back(i, j);
    std::sort(edges.begin(), edges.end());
    return edges;
}

auto sorted_edges(const Graph & g)
{
    auto e = g.edges();
    std::vector<std::pair<vertex, vertex>> out(e.begin(), e.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(VertexSet, BasicOperations)
{
    vertex_set s(70);
    s.set(3);
    s.set(64);
    s.set(69);
    EXPECT_EQ(s.count(), 3u);
    EXPECT_EQ(s.first(), 3u);
    EXPECT_EQ(s.next(3), 3u);
    EXPECT_EQ(s.next(4), 64u);
    EXPECT_EQ(s.next(70), vertex_set::npos);
    EXPECT_EQ(s.to_vector(), (std::vector<vertex>{3, 64, 69}));
    auto c = s.complement();
    EXPECT_EQ(c.count(), 67u);
    EXPECT_FALSE(c.intersects(s));
    EXPECT_EQ((c | s), vertex_set::full(70));
    EXPECT_TRUE(s.is_subset_of(vertex_set::full(70)));
}

TEST(VertexSet, MatchesStdSetOnRandomOperations)
{
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto n = static_cast<std::size_t>(rng.between(1, 200));
        vertex_set a(n), b(n);
        std::vector<char> ra(n, 0), rb(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (rng.below(2)) {
                a.set(i);
                ra[i] = 1;
            }
            if (rng.below(3) == 0) {
                b.set(i);
                rb[i] = 1;
            }
        }
        std::size_t both = 0, either = 0;
        for (std::size_t i = 0; i < n; ++i) {
            both += ra[i] && rb[i];
            either += ra[i] || rb[i];
        }
        EXPECT_EQ(a.intersection_count(b), both);
        EXPECT_EQ((a | b).count(), either);
        EXPECT_EQ((a - b).count(), a.count() - both);
    }
}

TEST(Graph, EdgesAndDegrees)
{
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(1, 2);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.degree(1), 2u);
    EXPECT_TRUE(g.adjacent(2, 1));
    g.remove_edge(1, 2);
    EXPECT_FALSE(g.adjacent(1, 2));
    EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 4), std::out_of_range);
}

TEST(Graph, CompleteMultipartiteExamples)
{
    auto star = complete_multipartite({1, 2});
    EXPECT_EQ(star.graph.size(), 3u);
    EXPECT_EQ(star.graph.edge_count(), 2u);

    auto k246 = complete_multipartite({2, 4, 6});
    EXPECT_EQ(k246.graph.size(), 12u);
    EXPECT_EQ(k246.graph.edge_count(), 44u);

    auto empty = complete_multipartite({3});
    EXPECT_EQ(empty.graph.size(), 3u);
    EXPECT_EQ(empty.graph.edge_count(), 0u);
}

TEST(Graph, BottleExamples)
{
    EXPECT_TRUE(isomorphic(bottle_graph(2, 1, 2).graph, complete_multipartite({1, 2}).graph));
    auto b = bottle_graph(3, 1, 2);
    EXPECT_EQ(b.graph.size(), 5u);
    EXPECT_EQ(b.graph.sorted_degrees(), (std::vector<std::size_t>{3, 3, 3, 3, 4}));
    EXPECT_EQ(b.class_sizes(), (std::vector<std::size_t>{1, 2, 2}));
    EXPECT_EQ(bottle_graph(3, 2, 5).graph.size(), 12u);
    EXPECT_THROW(bottle_graph(1, 1, 1), std::invalid_argument);
    EXPECT_THROW(bottle_graph(3, 3, 2), std::invalid_argument);
}

TEST(Graph, BlowUpExamples)
{
    auto k33 = blow_up(complete_graph(2), 3);
    EXPECT_TRUE(isomorphic(k33.graph, complete_multipartite({3, 3}).graph));

    auto c10 = blow_up(cycle_graph(5), 2).graph;
    EXPECT_EQ(c10.size(), 10u);
    EXPECT_EQ(c10.edge_count(), 20u);
    for (auto d : c10.degrees())
        EXPECT_EQ(d, 4u);

    auto g = path_graph(4);
    EXPECT_EQ(blow_up(g, 1).graph, g);
}

TEST(Graph, BlowUpDegreeIdentityOnCorpus)
{
    auto corpus = fixtures::load_corpus();
    for (std::size_t i = 0; i < corpus.size(); i += 7) {
        auto & g = corpus[i];
        for (std::size_t s : {2u, 3u}) {
            auto b = blow_up(g, s);
            for (vertex v = 0; v < b.graph.size(); ++v)
                ASSERT_EQ(b.graph.degree(v), s * g.degree(b.origin[v]));
            ASSERT_EQ(b.graph.sorted_degrees(), blown_up_degrees(g.sorted_degrees(), s));
        }
    }
}

TEST(Graph, InducedSubgraphAndOrdering)
{
    auto g = cycle_graph(6);
    auto keep = vertex_set::of(6, std::vector<vertex>{0, 1, 2, 4});
    auto sub = induced_subgraph(g, keep);
    EXPECT_EQ(sub.graph.size(), 4u);
    EXPECT_EQ(sub.graph.edge_count(), 2u);
    EXPECT_EQ(sub.host_vertex, (std::vector<vertex>{0, 1, 2, 4}));

    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto h = random_graph(rng.between(1, 40), make_rational(1, 3), rng);
        EXPECT_TRUE(is_degree_ordering(h, degree_ordering(h)));
    }
}

TEST(Tiling, ValidityExamples)
{
    auto k6 = complete_graph(6);
    Tiling t;
    t.patterns = {unpartitioned(complete_graph(3))};
    t.copies = {{0, {0, 1, 2}}, {0, {3, 4, 5}}};
    EXPECT_TRUE(is_valid_tiling(k6, t).valid);
    EXPECT_TRUE(is_perfect_tiling(k6, t));

    t.copies = {{0, {0, 1, 2}}, {0, {2, 3, 4}}};
    auto bad = is_valid_tiling(k6, t);
    EXPECT_FALSE(bad.valid);
    EXPECT_NE(bad.violation.find("overlap"), std::string::npos) << bad.violation;

    auto c5 = cycle_graph(5);
    t.copies = {{0, {0, 1, 2}}};
    EXPECT_FALSE(is_valid_tiling(c5, t).valid);
}

TEST(Io, EdgeListRoundTrip)
{
    auto g = parse_edge_list("3\n0 1\n1 2");
    EXPECT_EQ(g, path_graph(3));
    EXPECT_EQ(emit_edge_list(g), "3\n0 1\n1 2\n");
    EXPECT_EQ(parse_edge_list(emit_edge_list(g)), g);
    EXPECT_THROW(parse_edge_list("3\n0 5"), parse_error);
    EXPECT_THROW(parse_edge_list("3\n0 x"), parse_error);
}

TEST(Io, Graph6Examples)
{
    auto g = parse_graph6("D?{");
    EXPECT_EQ(g.size(), 5u);
    EXPECT_EQ(emit_graph6(g), "D?{");
    EXPECT_EQ(sorted_edges(g), naive_graph6("D?{"));
    EXPECT_EQ(emit_graph6(cycle_graph(5)), "Dhc");
    EXPECT_EQ(parse_graph("D?{"), g);
    EXPECT_EQ(parse_graph(">>graph6<<D?{"), g);
}

TEST(Io, Graph6AgreesWithIndependentDecoderOnCorpus)
{
    std::ifstream in(KTILE_CORPUS);
    std::size_t lines = 0;
    for (std::string s; std::getline(in, s);) {
        auto g = parse_graph6(s);
        ASSERT_EQ(sorted_edges(g), naive_graph6(s)) << s;
        ASSERT_EQ(emit_graph6(g), s);
        ++lines;
    }
    EXPECT_EQ(lines, 995u);
}

TEST(Io, Graph6RoundTripOnLargeRandomGraphs)
{
    Rng rng(3);
    for (std::size_t n : {0u, 1u, 62u, 63u, 100u, 300u}) {
        auto g = random_graph(n, make_rational(1, 2), rng);
        EXPECT_EQ(parse_graph6(emit_graph6(g)), g) << n;
        EXPECT_EQ(parse_edge_list(emit_edge_list(g)), g) << n;
    }
}

TEST(Isomorphism, SmallCases)
{
    EXPECT_TRUE(isomorphic(cycle_graph(5), parse_graph6("Dhc")));
    EXPECT_FALSE(isomorphic(cycle_graph(6), blow_up(complete_graph(3), 2).graph));
    EXPECT_FALSE(isomorphic(path_graph(4), complete_multipartite({1, 3}).graph));
}

TEST(Isomorphism, RelabellingPreservesIsomorphism)
{
    auto corpus = fixtures::load_corpus();
    Rng rng(17);
    for (std::size_t i = 0; i < corpus.size(); i += 9) {
        auto & g = corpus[i];
        std::vector<vertex> perm(g.size());
        std::iota(perm.begin(), perm.end(), vertex{0});
        rng.shuffle(perm);
        Graph h(g.size());
        for (auto [u, v] : g.edges())
            h.add_edge(perm[u], perm[v]);
        ASSERT_TRUE(isomorphic(g, h));
    }
}
