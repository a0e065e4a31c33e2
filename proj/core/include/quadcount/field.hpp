#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace quadcount {

/// Raised when a finite field cannot be constructed from the given parameters.
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of F_q, stored as the packed index sum_i c_i p^i of its coordinates
/// c_0..c_{nu-1} in the power basis of the field modulus. Every coordinate lies
/// in [0, p) by construction, so equality of indices is coefficient-wise
/// equality.
class FqElem {
 public:
  constexpr FqElem() noexcept = default;
  constexpr explicit FqElem(std::uint32_t index) noexcept : index_(index) {}

  [[nodiscard]] constexpr std::uint32_t index() const noexcept { return index_; }
  [[nodiscard]] constexpr bool is_zero() const noexcept { return index_ == 0; }

  constexpr auto operator<=>(const FqElem&) const noexcept = default;

 private:
  std::uint32_t index_ = 0;
};

/// The finite field F_q = F_p[u]/(m(u)) for an odd prime p.
///
/// Immutable after construction. Copies share the precomputed log/exp/trace
/// tables, so passing a FieldCtx by value is cheap.
class FieldCtx {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Builds F_{p^nu}. When `modulus` is omitted the lexicographically smallest
  /// monic irreducible polynomial of degree nu is used, where polynomials are
  /// ordered by their packed index sum_{i<nu} m_i p^i. A given modulus is the
  /// full coefficient list m_0..m_nu (low to high, m_nu = 1).
  FieldCtx(std::uint32_t p, unsigned nu,
           std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Builds F_q from a prime power q, deriving p and nu.
  static FieldCtx from_order(std::uint32_t q);

  [[nodiscard]] std::uint32_t p() const noexcept { return p_; }
  [[nodiscard]] unsigned nu() const noexcept { return nu_; }
  [[nodiscard]] std::uint32_t q() const noexcept { return q_; }
  [[nodiscard]] const std::vector<std::uint32_t>& modulus() const noexcept {
    return tables_->modulus;
  }

  [[nodiscard]] FqElem zero() const noexcept { return FqElem{0}; }
  [[nodiscard]] FqElem one() const noexcept { return FqElem{1}; }
  /// Image of an integer under Z -> F_p -> F_q.
  [[nodiscard]] FqElem from_int(std::int64_t n) const noexcept;
  [[nodiscard]] FqElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  [[nodiscard]] std::vector<std::uint32_t> coeffs(FqElem a) const;
  /// All q elements in index order.
  [[nodiscard]] std::vector<FqElem> elements() const;

  [[nodiscard]] FqElem add(FqElem a, FqElem b) const noexcept;
  [[nodiscard]] FqElem sub(FqElem a, FqElem b) const noexcept;
  [[nodiscard]] FqElem neg(FqElem a) const noexcept;
  [[nodiscard]] FqElem mul(FqElem a, FqElem b) const noexcept;
  [[nodiscard]] FqElem inv(FqElem a) const;
  [[nodiscard]] FqElem div(FqElem a, FqElem b) const;
  /// a^e for any integer e (negative e requires a != 0). 0^0 = 1.
  [[nodiscard]] FqElem pow(FqElem a, std::int64_t e) const;

  /// Tr_{F_q/F_p}(a) = sum_{i<nu} a^{p^i}, as a residue in [0, p).
  [[nodiscard]] std::uint32_t trace(FqElem a) const noexcept { return tables_->trace[a.index()]; }
  /// k with e_q(a) = zeta_p^k.
  [[nodiscard]] std::uint32_t char_exponent(FqElem a) const noexcept { return trace(a); }
  /// Euler criterion a^{(q-1)/2} = 1. Throws for a = 0.
  [[nodiscard]] bool is_square_unit(FqElem a) const;
  /// A square root of a square unit (the one with smaller index), if any.
  [[nodiscard]] std::optional<FqElem> sqrt(FqElem a) const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept {
    return a.p_ == b.p_ && a.nu_ == b.nu_ && a.tables_->modulus == b.tables_->modulus;
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> exp;    // exp[k] = index of g^k, k in [0, q-1)
    std::vector<std::uint32_t> log;    // log[index] for index != 0
    std::vector<std::uint32_t> zech;   // zech[k] = log(1 + g^k), or q-1 when 1 + g^k = 0
    std::vector<std::uint32_t> trace;  // trace[index]
  };

  std::uint32_t p_;
  unsigned nu_;
  std::uint32_t q_;
  std::shared_ptr<const Tables> tables_;
};

/// True iff n is prime (trial division; n is small here).
[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

}  // namespace quadcount
