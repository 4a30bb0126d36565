#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace edd {

// Exact scalars. cpp_rational keeps itself canonical: positive denominator,
// numerator and denominator coprime.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& q) { return numerator(q); }
inline Int rat_den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// "3", "-3", "3/2". No whitespace.
std::optional<Rational> parse_rational(std::string_view text);

// Inverse of parse_rational: "n" or "n/d" with d > 1.
std::string to_string(const Rational& q);
std::string to_string(const Int& n);

}  // namespace edd
