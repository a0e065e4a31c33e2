#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quadcount/bigint.hpp"
#include "quadcount/field.hpp"

namespace quadcount {

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which compares below every finite degree, so "deg x < P" admits x = 0.
class Degree {
 public:
  static constexpr Degree minus_infinity() noexcept { return Degree(); }
  constexpr explicit Degree(std::size_t d) noexcept : value_(d), finite_(true) {}

  [[nodiscard]] constexpr bool is_minus_infinity() const noexcept { return !finite_; }
  /// The finite value. Throws for minus infinity.
  [[nodiscard]] std::size_t value() const;
  /// deg < bound, true for minus infinity.
  [[nodiscard]] constexpr bool below(std::size_t bound) const noexcept { return !finite_ || value_ < bound; }

  constexpr std::strong_ordering operator<=>(const Degree& other) const noexcept {
    if (finite_ != other.finite_) return finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return value_ <=> other.value_;
  }
  constexpr bool operator==(const Degree&) const noexcept = default;

 private:
  constexpr Degree() noexcept = default;
  std::size_t value_ = 0;
  bool finite_ = false;
};

/// Element of F_q[t]: coefficients low to high with trailing zeros trimmed.
/// The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<FqElem> coeffs);

  [[nodiscard]] const std::vector<FqElem>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] Degree degree() const noexcept {
    return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1);
  }
  /// Number of stored coefficients, deg + 1 (0 for the zero polynomial).
  [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
  /// Coefficient of t^i, zero beyond the degree.
  [[nodiscard]] FqElem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : FqElem{}; }
  [[nodiscard]] FqElem leading() const noexcept { return coeffs_.empty() ? FqElem{} : coeffs_.back(); }
  [[nodiscard]] bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  bool operator==(const Poly&) const = default;
  /// Canonical order: by degree, then lexicographically from the leading
  /// coefficient down (comparing packed field indices).
  std::strong_ordering operator<=>(const Poly& other) const noexcept;

 private:
  std::vector<FqElem> coeffs_;
};

/// unit * prod factors[i].first ^ factors[i].second, factors monic irreducible,
/// pairwise distinct, sorted canonically.
struct Factorization {
  FqElem unit;
  std::vector<std::pair<Poly, unsigned>> factors;
};

class PolyRing;

/// Forward range over polynomials identified by a packed index
/// sum_{i<len} c_i q^i of their low coefficients, optionally with a monic
/// t^len term on top. Iteration order is increasing index, which is the
/// canonical Poly order within one degree.
class PolyIndexRange {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Poly;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Poly;

    iterator() = default;
    iterator(const PolyIndexRange* range, std::uint64_t index) : range_(range), index_(index) {}
    Poly operator*() const;
    iterator& operator++() {
      ++index_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++index_;
      return old;
    }
    bool operator==(const iterator& other) const noexcept { return index_ == other.index_; }

   private:
    const PolyIndexRange* range_ = nullptr;
    std::uint64_t index_ = 0;
  };

  PolyIndexRange(const PolyRing& ring, std::size_t len, bool monic);

  [[nodiscard]] iterator begin() const { return {this, 0}; }
  [[nodiscard]] iterator end() const { return {this, count_}; }
  [[nodiscard]] std::uint64_t size() const noexcept { return count_; }
  [[nodiscard]] Poly at(std::uint64_t index) const;

 private:
  const PolyRing* ring_;
  std::size_t len_;
  bool monic_;
  std::uint64_t count_;
};

/// Arithmetic and arithmetic functions in F_q[t].
class PolyRing {
 public:
  explicit PolyRing(FieldCtx field) : field_(std::move(field)) {}

  [[nodiscard]] const FieldCtx& field() const noexcept { return field_; }
  [[nodiscard]] std::uint32_t q() const noexcept { return field_.q(); }

  [[nodiscard]] Poly zero() const { return {}; }
  [[nodiscard]] Poly one() const { return constant(field_.one()); }
  [[nodiscard]] Poly t() const { return monomial(field_.one(), 1); }
  [[nodiscard]] Poly constant(FqElem c) const;
  [[nodiscard]] Poly monomial(FqElem c, std::size_t k) const;
  /// Integer coefficients (low to high) reduced into the prime field.
  [[nodiscard]] Poly from_ints(std::span<const std::int64_t> coeffs) const;
  [[nodiscard]] Poly from_ints(std::initializer_list<std::int64_t> coeffs) const {
    return from_ints(std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
  }

  [[nodiscard]] Poly add(const Poly& a, const Poly& b) const;
  [[nodiscard]] Poly sub(const Poly& a, const Poly& b) const;
  [[nodiscard]] Poly neg(const Poly& a) const;
  [[nodiscard]] Poly mul(const Poly& a, const Poly& b) const;
  [[nodiscard]] Poly scale(const Poly& a, FqElem c) const;
  /// Quotient and remainder with deg(rem) < deg(b). Throws for b = 0.
  [[nodiscard]] std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const;
  [[nodiscard]] Poly div(const Poly& a, const Poly& b) const { return divmod(a, b).first; }
  [[nodiscard]] Poly mod(const Poly& a, const Poly& b) const;
  [[nodiscard]] Poly pow(const Poly& a, unsigned e) const;
  [[nodiscard]] Poly powmod(const Poly& a, const BigInt& e, const Poly& m) const;
  [[nodiscard]] Poly derivative(const Poly& a) const;
  /// a scaled to leading coefficient 1; zero stays zero.
  [[nodiscard]] Poly monic(const Poly& a) const;
  [[nodiscard]] bool is_monic(const Poly& a) const noexcept { return !a.is_zero() && a.leading() == field_.one(); }

  /// Monic generator of (a, b); gcd(a, 0) = monic(a). Throws for gcd(0, 0).
  [[nodiscard]] Poly gcd(const Poly& a, const Poly& b) const;

  /// |a| = q^deg(a), |0| = 0.
  [[nodiscard]] BigInt abs(const Poly& a) const;

  /// Complete factorization into monic irreducibles. Throws for r = 0.
  [[nodiscard]] Factorization factorize(const Poly& r) const;
  [[nodiscard]] bool is_irreducible(const Poly& r) const;

  /// Function field totient: number of residues mod r coprime to r.
  [[nodiscard]] BigInt euler_phi(const Poly& r) const;
  [[nodiscard]] BigInt euler_phi(const Poly& r, const Factorization& fac) const;
  [[nodiscard]] int moebius(const Poly& r) const;
  [[nodiscard]] int moebius(const Poly& r, const Factorization& fac) const;

  /// Jacobi symbol (a/r) for monic r of positive degree, built from Legendre
  /// symbols a^{(|w|-1)/2} mod w over the factorization of r.
  [[nodiscard]] int jacobi_symbol(const Poly& a, const Poly& r) const;
  [[nodiscard]] int jacobi_symbol(const Poly& a, const Poly& r, const Factorization& fac) const;
  /// Legendre symbol (a/w) for monic irreducible w (not checked).
  [[nodiscard]] int legendre_symbol(const Poly& a, const Poly& w) const;

  /// s with s^2 = r if r is a square in F_q[t]. For monic r the root is monic;
  /// otherwise the leading unit must be a square in F_q and its smaller root
  /// is folded in. Throws for r = 0.
  [[nodiscard]] std::optional<Poly> square_root(const Poly& r) const;

  /// The q^d monic polynomials of degree d in canonical order.
  [[nodiscard]] PolyIndexRange monic_of_degree(std::size_t d) const { return {*this, d, true}; }
  /// The q^d polynomials of degree < d (zero first) in index order.
  [[nodiscard]] PolyIndexRange below_degree(std::size_t d) const { return {*this, d, false}; }
  /// Packed index sum_{i<len} c_i q^i of the low len coefficients.
  [[nodiscard]] std::uint64_t index_of(const Poly& a, std::size_t len) const;
  [[nodiscard]] Poly from_index(std::uint64_t index, std::size_t len, bool monic) const;

  /// Human readable form, e.g. "t^2+2t+1"; extension field coefficients are
  /// written as bracketed coordinate tuples "[1 2]".
  [[nodiscard]] std::string to_string(const Poly& a) const;

 private:
  FieldCtx field_;
};

}  // namespace quadcount
