#pragma once

#include "ktile/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ktile {

/// One copy of a pattern in a host: pattern vertex p lands on image[p].
struct Embedding
{
    /// Index into Tiling::patterns.
    std::size_t pattern = 0;
    std::vector<vertex> image;

    friend auto operator==(const Embedding &, const Embedding &) -> bool = default;
};

/// Vertex-disjoint copies of one or more patterns.
struct Tiling
{
    std::vector<PartitionedGraph> patterns;
    std::vector<Embedding> copies;

    auto covered(std::size_t host_n) const -> vertex_set
    {
        vertex_set s(host_n);
        for (auto & e : copies)
            for (auto v : e.image)
                s.set(v);
        return s;
    }

    /// Sum of the orders of the copies; equals covered().count() for a valid tiling.
    auto covered_count() const -> std::size_t
    {
        std::size_t c = 0;
        for (auto & e : copies)
            c += e.image.size();
        return c;
    }

    /// Host vertices sitting in width classes (every class but the neck,
    /// class 0) of their copy. Only defined when the patterns carry classes.
    auto omega_class_vertices(std::size_t host_n) const -> vertex_set
    {
        vertex_set s(host_n);
        for (auto & e : copies) {
            auto & pat = patterns.at(e.pattern);
            if (! pat.has_classes())
                throw std::invalid_argument("omega_class_vertices: pattern has no class structure");
            for (std::size_t c = 1; c < pat.classes.size(); ++c)
                for (auto p : pat.classes[c])
                    s.set(e.image[p]);
        }
        return s;
    }

    /// copy_of(n)[v] is the index of the copy covering v, or npos.
    auto copy_of(std::size_t host_n) const -> std::vector<std::size_t>
    {
        std::vector<std::size_t> owner(host_n, vertex_set::npos);
        for (std::size_t i = 0; i < copies.size(); ++i)
            for (auto v : copies[i].image)
                if (v < host_n)
                    owner[v] = i;
        return owner;
    }

    /// Host vertices of class c of copy i.
    auto class_image(std::size_t copy, std::size_t cls) const -> std::vector<vertex>
    {
        auto & e = copies.at(copy);
        std::vector<vertex> out;
        for (auto p : patterns.at(e.pattern).classes.at(cls))
            out.push_back(e.image[p]);
        return out;
    }
};

struct TilingCheck
{
    bool valid = true;
    /// Empty when valid; otherwise describes the first violation found.
    std::string violation;

    explicit operator bool() const { return valid; }
};

/// Every copy must be an injective, edge-preserving map into the host, and
/// the copies must be pairwise vertex-disjoint.
inline auto is_valid_tiling(const Graph & host, const Tiling & tiling) -> TilingCheck
{
    auto fail = [](std::string why) { return TilingCheck{false, std::move(why)}; };

    std::vector<std::size_t> owner(host.size(), vertex_set::npos);
    for (std::size_t i = 0; i < tiling.copies.size(); ++i) {
        auto & e = tiling.copies[i];
        auto tag = "copy " + std::to_string(i);
        if (e.pattern >= tiling.patterns.size())
            return fail(tag + ": unknown pattern " + std::to_string(e.pattern));
        auto & pat = tiling.patterns[e.pattern].graph;
        if (e.image.size() != pat.size())
            return fail(tag + ": image has " + std::to_string(e.image.size()) + " vertices, pattern has " + std::to_string(pat.size()));
        for (auto v : e.image) {
            if (v >= host.size())
                return fail(tag + ": vertex " + std::to_string(v) + " outside host");
            if (owner[v] == i)
                return fail(tag + ": not injective at host vertex " + std::to_string(v));
            if (owner[v] != vertex_set::npos)
                return fail(tag + " overlaps copy " + std::to_string(owner[v]) + " at host vertex " + std::to_string(v));
            owner[v] = i;
        }
        for (auto [p, q] : pat.edges())
            if (! host.adjacent(e.image[p], e.image[q]))
                return fail(tag + ": pattern edge " + std::to_string(p) + "-" + std::to_string(q) + " maps to non-edge " +
                            std::to_string(e.image[p]) + "-" + std::to_string(e.image[q]));
    }
    return {};
}

/// Valid and covering every host vertex.
inline auto is_perfect_tiling(const Graph & host, const Tiling & tiling) -> bool
{
    return is_valid_tiling(host, tiling) && tiling.covered_count() == host.size();
}

} // namespace ktile
