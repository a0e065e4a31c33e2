#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quadcount/bigint.hpp"

namespace quadcount {

/// Element of Z[zeta_p] in the basis 1, zeta, ..., zeta^{p-2} (reduced modulo
/// the p-th cyclotomic polynomial). The reduced form is unique, so equality is
/// coefficient-wise.
class CycInt {
 public:
  /// Zero of Z[zeta_p].
  explicit CycInt(std::uint32_t p);

  static CycInt from_integer(std::uint32_t p, const BigInt& n);
  /// zeta_p^k for any integer k.
  static CycInt from_exponent(std::uint32_t p, std::int64_t k);
  /// sum_k counts[k] * zeta_p^k, counts.size() == p. This is how character
  /// sums are accumulated: first a histogram of exponents, then one reduction.
  static CycInt from_exponent_counts(std::uint32_t p, std::span<const BigInt> counts);
  static CycInt from_exponent_counts(std::uint32_t p, std::span<const std::uint64_t> counts);

  [[nodiscard]] std::uint32_t p() const noexcept { return p_; }
  [[nodiscard]] const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] bool is_zero() const;

  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  CycInt& operator*=(const BigInt& n);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  friend CycInt operator*(CycInt a, const BigInt& n) { return a *= n; }
  friend CycInt operator*(const BigInt& n, CycInt a) { return a *= n; }
  CycInt operator-() const;
  bool operator==(const CycInt& o) const = default;

  /// The rational integer n if this equals n * 1.
  [[nodiscard]] std::optional<BigInt> to_integer() const;
  /// Evaluation at zeta_p = exp(2 pi i / p).
  [[nodiscard]] std::complex<double> to_complex() const;
  /// {"p": p, "coeffs": [...]}
  [[nodiscard]] std::string to_json() const;
  /// e.g. "1+2z"
  [[nodiscard]] std::string to_string() const;

 private:
  void check_same(const CycInt& o) const;

  std::uint32_t p_;
  std::vector<BigInt> coeffs_;  // size p - 1
};

/// num / q^qexp, the shape of every Haar integral.
struct QScaled {
  CycInt num;
  std::int64_t qexp = 0;
  std::uint32_t q = 0;

  /// The exact rational value, if num is a rational integer.
  [[nodiscard]] std::optional<Rational> to_rational() const;
};

}  // namespace quadcount
