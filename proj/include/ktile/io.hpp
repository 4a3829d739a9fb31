#pragma once

// Edge-list and graph6 reading/writing.
//
// Edge list: first non-blank line is the vertex count, every further line is
// "u v" with zero-based endpoints. Lines starting with '#' are comments.
// The canonical form lists each edge once as "u v" with u < v, sorted.

#include "ktile/graph.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ktile {

class parse_error : public std::runtime_error
{
public:
    parse_error(std::size_t line, const std::string & what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    auto line() const -> std::size_t { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline auto trim(std::string_view s) -> std::string_view
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline auto parse_uint(std::string_view tok, std::size_t line) -> std::size_t
{
    if (tok.empty() || tok.size() > 9)
        throw parse_error(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    std::size_t v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9')
            throw parse_error(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
}

} // namespace detail

inline auto parse_edge_list(std::string_view text) -> Graph
{
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    std::optional<Graph> g;

    while (std::getline(in, raw)) {
        ++line_no;
        auto line = detail::trim(raw);
        if (line.empty() || line.front() == '#')
            continue;

        std::istringstream fields{std::string(line)};
        std::string a, b, extra;
        fields >> a >> b >> extra;

        if (! g) {
            if (! b.empty())
                throw parse_error(line_no, "first line must hold only the vertex count");
            auto n = detail::parse_uint(a, line_no);
            if (n > max_vertices)
                throw parse_error(line_no, "vertex count exceeds " + std::to_string(max_vertices));
            g.emplace(n);
            continue;
        }

        if (b.empty() || ! extra.empty())
            throw parse_error(line_no, "expected 'u v'");
        auto u = detail::parse_uint(a, line_no), v = detail::parse_uint(b, line_no);
        if (u >= g->size() || v >= g->size())
            throw parse_error(line_no, "endpoint out of range");
        if (u == v)
            throw parse_error(line_no, "self-loop");
        g->add_edge(u, v);
    }

    if (! g)
        throw parse_error(line_no, "missing vertex count");
    return *g;
}

inline auto emit_edge_list(const Graph & g) -> std::string
{
    std::string out = std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

/// Decodes one graph6 string (optional ">>graph6<<" header, trailing newline ignored).
inline auto parse_graph6(std::string_view text) -> Graph
{
    auto s = detail::trim(text);
    while (! s.empty() && (s.back() == '\n'))
        s.remove_suffix(1);
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header)
        s.remove_prefix(header.size());

    std::size_t pos = 0;
    auto next = [&]() -> unsigned {
        if (pos >= s.size())
            throw parse_error(1, "graph6 string truncated");
        auto c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126)
            throw parse_error(1, "graph6 byte out of range at offset " + std::to_string(pos - 1));
        return c - 63u;
    };

    std::size_t n = 0;
    auto first = next();
    if (first < 63)
        n = first;
    else {
        auto second = next();
        if (second < 63) {
            n = (std::size_t{second} << 12) | (std::size_t{next()} << 6) | next();
        }
        else {
            // eight-byte form; anything this large exceeds the vertex cap anyway
            std::size_t v = 0;
            for (int i = 0; i < 6; ++i)
                v = (v << 6) | next();
            n = v;
        }
    }
    if (n > max_vertices)
        throw parse_error(1, "graph6 order exceeds " + std::to_string(max_vertices));

    Graph g(n);
    unsigned word = 0;
    int bits_left = 0;
    for (vertex j = 1; j < n; ++j)
        for (vertex i = 0; i < j; ++i) {
            if (bits_left == 0) {
                word = next();
                bits_left = 6;
            }
            --bits_left;
            if ((word >> bits_left) & 1u)
                g.add_edge(i, j);
        }
    if (pos != s.size())
        throw parse_error(1, "trailing bytes after graph6 string");
    return g;
}

inline auto emit_graph6(const Graph & g) -> std::string
{
    std::string out;
    auto n = g.size();
    if (n < 63)
        out.push_back(static_cast<char>(n + 63));
    else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    unsigned word = 0;
    int filled = 0;
    for (vertex j = 1; j < n; ++j)
        for (vertex i = 0; i < j; ++i) {
            word = (word << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + 63));
                word = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((word << (6 - filled)) + 63));
    return out;
}

/// Auto-detects the format: an edge list starts with a decimal vertex count,
/// which can never begin a graph6 string.
inline auto parse_graph(std::string_view text) -> Graph
{
    auto s = detail::trim(text);
    while (! s.empty() && (s.front() == '\n' || s.front() == '#')) {
        if (s.front() == '#') {
            auto nl = s.find('\n');
            s = nl == std::string_view::npos ? std::string_view{} : s.substr(nl + 1);
        }
        else
            s.remove_prefix(1);
        s = detail::trim(s);
    }
    if (! s.empty() && s.front() >= '0' && s.front() <= '9')
        return parse_edge_list(text);
    return parse_graph6(s);
}

inline auto read_graph_file(const std::string & path) -> Graph
{
    std::ifstream in(path);
    if (! in)
        throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

} // namespace ktile
