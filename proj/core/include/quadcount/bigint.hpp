#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace quadcount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// base^exp for a non-negative exponent.
[[nodiscard]] inline BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    exp >>= 1;
    if (exp != 0) b *= b;
  }
  return result;
}

/// base^exp as an exact rational; negative exponents allowed for base != 0.
[[nodiscard]] inline Rational rpow(const BigInt& base, std::int64_t exp) {
  if (exp >= 0) return Rational(ipow(base, static_cast<std::uint64_t>(exp)));
  return Rational(BigInt(1), ipow(base, static_cast<std::uint64_t>(-exp)));
}

/// The integer value of r, or nullopt if r has a nontrivial denominator.
[[nodiscard]] inline std::optional<BigInt> to_integer(const Rational& r) {
  if (boost::multiprecision::denominator(r) != 1) return std::nullopt;
  return boost::multiprecision::numerator(r);
}

[[nodiscard]] inline std::string to_string(const BigInt& v) { return v.str(); }
[[nodiscard]] inline std::string to_string(const Rational& v) { return v.str(); }

}  // namespace quadcount
