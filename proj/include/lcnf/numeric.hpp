#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lcnf {

using big_int = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

/// Smallest integer >= r.
[[nodiscard]] big_int ceil(const rational& r);
/// Largest integer <= r.
[[nodiscard]] big_int floor(const rational& r);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
[[nodiscard]] std::string to_string(const rational& r);

/// Parses "p", "p/q" or a finite decimal such as "0.25". Throws std::invalid_argument.
[[nodiscard]] rational parse_rational(const std::string& text);

/// 2^e as an exact rational; e may be negative.
[[nodiscard]] rational pow2(long long e);

} // namespace lcnf
