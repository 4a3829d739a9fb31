#pragma once

// Exact rational arithmetic used by every threshold formula.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ktile {

using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline auto make_rational(const integer & num, const integer & den = 1) -> rational
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    return rational(num, den);
}

inline auto num_of(const rational & q) -> integer { return boost::multiprecision::numerator(q); }
inline auto den_of(const rational & q) -> integer { return boost::multiprecision::denominator(q); }

inline auto is_integral(const rational & q) -> bool { return den_of(q) == 1; }

inline auto floor_of(const rational & q) -> integer
{
    integer n = num_of(q), d = den_of(q);
    integer quot = n / d;
    if (n < 0 && quot * d != n)
        --quot;
    return quot;
}

inline auto ceil_of(const rational & q) -> integer { return -floor_of(-q); }

/// Converts an integral rational to an unsigned count, throwing if it is
/// fractional or negative. `what` names the quantity in the error message.
inline auto to_count(const rational & q, std::string_view what) -> std::size_t
{
    if (! is_integral(q))
        throw std::invalid_argument(std::string(what) + " is not an integer");
    if (q < 0)
        throw std::invalid_argument(std::string(what) + " is negative");
    return num_of(q).convert_to<std::size_t>();
}

inline auto to_double(const rational & q) -> double { return q.convert_to<double>(); }

/// "p/q", or "p" when the denominator is one.
inline auto to_string(const rational & q) -> std::string
{
    if (is_integral(q))
        return num_of(q).str();
    return num_of(q).str() + "/" + den_of(q).str();
}

/// Accepts "p/q", "p", or a plain decimal such as "0.25".
inline auto parse_rational(std::string_view text) -> rational
{
    auto parse_int = [&](std::string_view s) -> integer {
        if (s.empty())
            throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
        std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
        if (start == s.size())
            throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
        return integer(std::string(s));
    };

    if (auto slash = text.find('/'); slash != std::string_view::npos)
        return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot);
        auto frac = text.substr(dot + 1);
        bool negative = ! whole.empty() && whole.front() == '-';
        integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        integer w = (whole.empty() || whole == "-" || whole == "+") ? integer(0) : parse_int(whole);
        integer f = frac.empty() ? integer(0) : parse_int(frac);
        if (negative)
            f = -f;
        return make_rational(w * scale + f, scale);
    }

    return rational(parse_int(text));
}

} // namespace ktile
