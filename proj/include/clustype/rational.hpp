#ifndef CLUSTYPE_RATIONAL_HPP
#define CLUSTYPE_RATIONAL_HPP

#include "clustype/error.hpp"

#include <boost/rational.hpp>
#include <boost/safe_numerics/safe_integer.hpp>

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

namespace clustype {

// 64-bit integers that throw on overflow instead of wrapping, so every
// intersection number is either exact or an error.
using Integer = boost::safe_numerics::safe<std::int64_t>;
using Rational = boost::rational<Integer>;

inline Rational rat(std::int64_t num, std::int64_t den = 1)
{
    return Rational(Integer(num), Integer(den));
}

inline std::int64_t numerator_of(const Rational& q)
{
    return static_cast<std::int64_t>(q.numerator());
}

inline std::int64_t denominator_of(const Rational& q)
{
    return static_cast<std::int64_t>(q.denominator());
}

inline bool is_integral(const Rational& q)
{
    return q.denominator() == 1;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q)
{
    std::string out = std::to_string(numerator_of(q));
    if (!is_integral(q)) {
        out += '/';
        out += std::to_string(denominator_of(q));
    }
    return out;
}

namespace detail {

inline std::int64_t parse_int64(std::string_view text, std::string_view whole)
{
    std::int64_t value = 0;
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty()) {
        throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(whole) + "'");
    }
    return value;
}

} // namespace detail

/// Parses "p", "-p" or "p/q" (q nonzero).
inline Rational parse_rational(std::string_view text)
{
    auto trimmed = text;
    while (!trimmed.empty() && trimmed.front() == ' ') {
        trimmed.remove_prefix(1);
    }
    while (!trimmed.empty() && trimmed.back() == ' ') {
        trimmed.remove_suffix(1);
    }
    const auto slash = trimmed.find('/');
    if (slash == std::string_view::npos) {
        return rat(detail::parse_int64(trimmed, text));
    }
    const auto num = detail::parse_int64(trimmed.substr(0, slash), text);
    const auto den = detail::parse_int64(trimmed.substr(slash + 1), text);
    if (den == 0) {
        throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    return rat(num, den);
}

} // namespace clustype

#endif // CLUSTYPE_RATIONAL_HPP
