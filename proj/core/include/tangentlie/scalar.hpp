#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tangentlie {

/// Exact arbitrary-precision rational number.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Absolute tolerance used by float-mode zero tests unless the caller overrides it.
inline constexpr double kDefaultTolerance = 1e-9;

/// The two arithmetic modes: exact rationals and IEEE doubles.
template <class S>
concept Scalar = std::same_as<S, Rational> || std::same_as<S, double>;

template <Scalar S>
inline constexpr bool is_exact_v = std::same_as<S, Rational>;

/// Parses "p/q", "p", or a decimal literal such as "-0.25" or "1e-3" exactly.
/// Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Converts a double to the rational spelled by its shortest round-trip decimal
/// representation, so 0.3 becomes 3/10 rather than the binary expansion.
Rational rational_from_double(double x);

template <Scalar S>
bool is_zero(const S& x, double tol = kDefaultTolerance) {
  if constexpr (is_exact_v<S>) {
    return x == 0;
  } else {
    return std::abs(x) <= tol;
  }
}

template <Scalar S>
double to_double(const S& x) {
  if constexpr (is_exact_v<S>) {
    return x.template convert_to<double>();
  } else {
    return x;
  }
}

template <Scalar To, Scalar From>
To scalar_cast(const From& x) {
  if constexpr (std::same_as<To, From>) {
    return x;
  } else if constexpr (is_exact_v<To>) {
    return rational_from_double(x);
  } else {
    return to_double(x);
  }
}

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string format_rational(const Rational& x);

/// Shortest round-trip decimal spelling.
std::string format_double(double x);

template <Scalar S>
std::string format_scalar(const S& x) {
  if constexpr (is_exact_v<S>) {
    return format_rational(x);
  } else {
    return format_double(x);
  }
}

/// Exact square root if x is the square of a rational, otherwise false.
bool rational_sqrt(const Rational& x, Rational& root);

}  // namespace tangentlie
