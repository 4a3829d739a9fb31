#pragma once

#include "ktile/vertex_set.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ktile {

/// Hard cap on the order of any graph; dense rows make this the memory bound.
inline constexpr std::size_t max_vertices = 4096;

/// Undirected simple graph on vertices 0..n-1 with dense adjacency rows.
class Graph
{
public:
    Graph() = default;

    explicit Graph(std::size_t n) : n_(n)
    {
        if (n > max_vertices)
            throw std::length_error("graph order " + std::to_string(n) + " exceeds " + std::to_string(max_vertices));
        rows_.assign(n, vertex_set(n));
    }

    auto size() const -> std::size_t { return n_; }

    auto add_edge(vertex u, vertex v) -> void
    {
        check(u);
        check(v);
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        rows_[u].set(v);
        rows_[v].set(u);
    }

    auto remove_edge(vertex u, vertex v) -> void
    {
        check(u);
        check(v);
        rows_[u].reset(v);
        rows_[v].reset(u);
    }

    auto adjacent(vertex u, vertex v) const -> bool { return rows_[u].test(v); }
    auto neighbours(vertex v) const -> const vertex_set & { return rows_[v]; }
    auto degree(vertex v) const -> std::size_t { return rows_[v].count(); }

    auto degrees() const -> std::vector<std::size_t>
    {
        std::vector<std::size_t> d(n_);
        for (vertex v = 0; v < n_; ++v)
            d[v] = degree(v);
        return d;
    }

    /// Degrees in non-decreasing order (d_1 <= ... <= d_n).
    auto sorted_degrees() const -> std::vector<std::size_t>
    {
        auto d = degrees();
        std::sort(d.begin(), d.end());
        return d;
    }

    auto edge_count() const -> std::size_t
    {
        std::size_t twice = 0;
        for (auto & r : rows_)
            twice += r.count();
        return twice / 2;
    }

    /// Edges (u, v) with u < v in lexicographic order.
    auto edges() const -> std::vector<std::pair<vertex, vertex>>
    {
        std::vector<std::pair<vertex, vertex>> out;
        for (vertex u = 0; u < n_; ++u)
            rows_[u].for_each([&](vertex v) {
                if (u < v)
                    out.emplace_back(u, v);
            });
        return out;
    }

    auto all_vertices() const -> vertex_set { return vertex_set::full(n_); }

    /// Labelled equality.
    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    auto check(vertex v) const -> void
    {
        if (v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " + std::to_string(n_));
    }

    std::size_t n_ = 0;
    std::vector<vertex_set> rows_;
};

/// A graph with an ordered list of vertex classes. The classes either
/// partition the vertex set exactly, or the list is empty when the graph
/// carries no class structure. For bottle graphs class 0 is the neck.
struct PartitionedGraph
{
    Graph graph;
    std::vector<std::vector<vertex>> classes;

    auto class_sizes() const -> std::vector<std::size_t>
    {
        std::vector<std::size_t> s;
        for (auto & c : classes)
            s.push_back(c.size());
        return s;
    }

    /// class_index()[v] is the class containing v.
    auto class_index() const -> std::vector<std::size_t>
    {
        std::vector<std::size_t> idx(graph.size(), classes.size());
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (auto v : classes[c])
                idx[v] = c;
        return idx;
    }

    auto has_classes() const -> bool { return ! classes.empty(); }
};

/// A pattern with no class structure.
inline auto unpartitioned(Graph g) -> PartitionedGraph { return PartitionedGraph{std::move(g), {}}; }

/// True when `classes` partitions the vertex set of `g`.
inline auto is_partition(std::size_t n, const std::vector<std::vector<vertex>> & classes) -> bool
{
    std::vector<int> seen(n, 0);
    for (auto & c : classes)
        for (auto v : c) {
            if (v >= n || seen[v])
                return false;
            seen[v] = 1;
        }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

/// Edge iff endpoints lie in different classes; vertices are numbered class
/// by class in the given order.
inline auto complete_multipartite(std::span<const std::size_t> class_sizes) -> PartitionedGraph
{
    if (class_sizes.empty())
        throw std::invalid_argument("complete_multipartite: empty class list");
    for (auto s : class_sizes)
        if (s == 0)
            throw std::invalid_argument("complete_multipartite: class sizes must be positive");

    std::size_t n = std::accumulate(class_sizes.begin(), class_sizes.end(), std::size_t{0});
    PartitionedGraph result{Graph(n), {}};
    vertex next = 0;
    for (auto s : class_sizes) {
        std::vector<vertex> cls(s);
        std::iota(cls.begin(), cls.end(), next);
        next += s;
        result.classes.push_back(std::move(cls));
    }
    for (std::size_t a = 0; a < result.classes.size(); ++a)
        for (std::size_t b = a + 1; b < result.classes.size(); ++b)
            for (auto u : result.classes[a])
                for (auto v : result.classes[b])
                    result.graph.add_edge(u, v);
    return result;
}

inline auto complete_multipartite(std::initializer_list<std::size_t> class_sizes) -> PartitionedGraph
{
    return complete_multipartite(std::span<const std::size_t>(class_sizes.begin(), class_sizes.size()));
}

/// r-partite bottle graph: one neck class (index 0) and r-1 width classes.
/// neck == width is allowed and gives the balanced complete r-partite graph.
inline auto bottle_graph(std::size_t r, std::size_t neck, std::size_t width) -> PartitionedGraph
{
    if (r < 2)
        throw std::invalid_argument("bottle_graph: need r >= 2");
    if (neck == 0 || width == 0)
        throw std::invalid_argument("bottle_graph: neck and width must be positive");
    if (neck > width)
        throw std::invalid_argument("bottle_graph: neck exceeds width");
    std::vector<std::size_t> sizes(r, width);
    sizes[0] = neck;
    return complete_multipartite(sizes);
}

inline auto complete_graph(std::size_t t) -> Graph
{
    Graph g(t);
    for (vertex u = 0; u < t; ++u)
        for (vertex v = u + 1; v < t; ++v)
            g.add_edge(u, v);
    return g;
}

inline auto cycle_graph(std::size_t t) -> Graph
{
    if (t < 3)
        throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    Graph g(t);
    for (vertex v = 0; v < t; ++v)
        g.add_edge(v, (v + 1) % t);
    return g;
}

inline auto path_graph(std::size_t t) -> Graph
{
    Graph g(t);
    for (vertex v = 0; v + 1 < t; ++v)
        g.add_edge(v, v + 1);
    return g;
}

struct BlowUp
{
    Graph graph;
    /// origin[v] is the vertex of the original graph that v replaces.
    std::vector<vertex> origin;
};

/// G(t): each vertex x becomes t clones x*t .. x*t+t-1, and each edge a
/// complete bipartite graph between clone sets.
inline auto blow_up(const Graph & g, std::size_t t) -> BlowUp
{
    if (t == 0)
        throw std::invalid_argument("blow_up: t must be positive");
    if (g.size() != 0 && t > max_vertices / g.size())
        throw std::length_error("blow_up: t * n exceeds the vertex cap");

    std::size_t n = g.size();
    BlowUp result{Graph(n * t), std::vector<vertex>(n * t)};
    for (vertex x = 0; x < n; ++x)
        for (std::size_t c = 0; c < t; ++c)
            result.origin[x * t + c] = x;
    for (auto [x, y] : g.edges())
        for (std::size_t a = 0; a < t; ++a)
            for (std::size_t b = 0; b < t; ++b)
                result.graph.add_edge(x * t + a, y * t + b);
    return result;
}

/// Blow-up that carries the class structure along: the clones of a class-c
/// vertex form part of class c.
inline auto blow_up(const PartitionedGraph & g, std::size_t t) -> PartitionedGraph
{
    auto b = blow_up(g.graph, t);
    PartitionedGraph result{std::move(b.graph), {}};
    for (auto & cls : g.classes) {
        std::vector<vertex> blown;
        for (auto x : cls)
            for (std::size_t c = 0; c < t; ++c)
                blown.push_back(x * t + c);
        std::sort(blown.begin(), blown.end());
        result.classes.push_back(std::move(blown));
    }
    return result;
}

struct InducedSubgraph
{
    Graph graph;
    /// host_vertex[i] is the host vertex behind subgraph vertex i.
    std::vector<vertex> host_vertex;
};

inline auto induced_subgraph(const Graph & g, const vertex_set & keep) -> InducedSubgraph
{
    InducedSubgraph result{Graph(keep.count()), keep.to_vector()};
    auto & hv = result.host_vertex;
    for (std::size_t i = 0; i < hv.size(); ++i)
        for (std::size_t j = i + 1; j < hv.size(); ++j)
            if (g.adjacent(hv[i], hv[j]))
                result.graph.add_edge(i, j);
    return result;
}

/// Vertices ordered by non-decreasing degree. order[i] is the vertex at
/// (zero-based) position i; position[v] inverts it. The one-based index used
/// by the swapping-pair condition is position[v] + 1.
struct VertexOrdering
{
    std::vector<vertex> order;
    std::vector<std::size_t> position;

    auto index_of(vertex v) const -> std::size_t { return position[v] + 1; }
};

/// Degree ordering with ties broken by vertex label.
inline auto degree_ordering(const Graph & g) -> VertexOrdering
{
    VertexOrdering o;
    o.order.resize(g.size());
    std::iota(o.order.begin(), o.order.end(), vertex{0});
    auto d = g.degrees();
    std::stable_sort(o.order.begin(), o.order.end(), [&](vertex a, vertex b) { return d[a] < d[b]; });
    o.position.resize(g.size());
    for (std::size_t i = 0; i < o.order.size(); ++i)
        o.position[o.order[i]] = i;
    return o;
}

/// True when `o` is a permutation of the vertices along which degrees never decrease.
inline auto is_degree_ordering(const Graph & g, const VertexOrdering & o) -> bool
{
    if (o.order.size() != g.size() || o.position.size() != g.size())
        return false;
    std::vector<int> seen(g.size(), 0);
    for (std::size_t i = 0; i < o.order.size(); ++i) {
        auto v = o.order[i];
        if (v >= g.size() || seen[v] || o.position[v] != i)
            return false;
        seen[v] = 1;
        if (i > 0 && g.degree(o.order[i - 1]) > g.degree(v))
            return false;
    }
    return true;
}

} // namespace ktile
