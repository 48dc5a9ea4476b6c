#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pk::logic {

/// Mathematical integers; never overflow.
using Integer = boost::multiprecision::cpp_int;
/// Exact rationals, always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// Floor division for a positive divisor. Matches SMT-LIB `div` when d > 0.
Integer floor_div(const Integer& n, const Integer& d);
/// Remainder paired with floor_div; always in [0, d) for d > 0.
Integer floor_mod(const Integer& n, const Integer& d);

/// "p" for integral values, "p/q" otherwise; negative values carry a leading '-'.
std::string to_string(const Rational& q);

/// Parses "123", "-4", "1.25", "3/4". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace pk::logic
