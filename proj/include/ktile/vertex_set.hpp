#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace ktile {

using vertex = std::size_t;

/// Dense bitset over vertices 0..capacity-1. Adjacency rows and every set of
/// vertices (copies, covered sets, tiling masks) use this type.
class vertex_set
{
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    vertex_set() = default;
    explicit vertex_set(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

    static auto full(std::size_t capacity) -> vertex_set
    {
        vertex_set s(capacity);
        for (auto & w : s.words_)
            w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    template <typename Range>
    static auto of(std::size_t capacity, const Range & vertices) -> vertex_set
    {
        vertex_set s(capacity);
        for (auto v : vertices)
            s.set(v);
        return s;
    }

    auto capacity() const -> std::size_t { return capacity_; }

    auto set(vertex v) -> void { words_[v / 64] |= bit(v); }
    auto reset(vertex v) -> void { words_[v / 64] &= ~bit(v); }
    auto test(vertex v) const -> bool { return (words_[v / 64] & bit(v)) != 0; }

    auto count() const -> std::size_t
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    auto any() const -> bool
    {
        return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
    }
    auto none() const -> bool { return ! any(); }

    auto first() const -> vertex { return next(0); }

    /// Smallest member >= from, or npos.
    auto next(vertex from) const -> vertex
    {
        if (from >= capacity_)
            return npos;
        std::size_t wi = from / 64;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from % 64));
        while (true) {
            if (w != 0)
                return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size())
                return npos;
            w = words_[wi];
        }
    }

    template <typename F>
    auto for_each(F && f) const -> void
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            auto w = words_[wi];
            while (w != 0) {
                f(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    auto to_vector() const -> std::vector<vertex>
    {
        std::vector<vertex> out;
        for_each([&](vertex v) { out.push_back(v); });
        return out;
    }

    auto intersects(const vertex_set & other) const -> bool
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    auto intersection_count(const vertex_set & other) const -> std::size_t
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    auto is_subset_of(const vertex_set & other) const -> bool
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    auto operator&=(const vertex_set & o) -> vertex_set &
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    auto operator|=(const vertex_set & o) -> vertex_set &
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    auto operator-=(const vertex_set & o) -> vertex_set &
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend auto operator&(vertex_set a, const vertex_set & b) -> vertex_set { return a &= b; }
    friend auto operator|(vertex_set a, const vertex_set & b) -> vertex_set { return a |= b; }
    friend auto operator-(vertex_set a, const vertex_set & b) -> vertex_set { return a -= b; }

    auto complement() const -> vertex_set { return full(capacity_) - *this; }

    friend auto operator==(const vertex_set &, const vertex_set &) -> bool = default;

    /// Lexicographic comparison of the sorted member lists.
    friend auto lex_less(const vertex_set & a, const vertex_set & b) -> bool
    {
        auto av = a.to_vector(), bv = b.to_vector();
        return av < bv;
    }

private:
    static auto bit(vertex v) -> std::uint64_t { return std::uint64_t{1} << (v % 64); }

    auto trim() -> void
    {
        if (capacity_ % 64 != 0 && ! words_.empty())
            words_.back() &= (std::uint64_t{1} << (capacity_ % 64)) - 1;
    }

    std::size_t capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace ktile
