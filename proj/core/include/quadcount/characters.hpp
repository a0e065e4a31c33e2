#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "quadcount/cyclotomic.hpp"
#include "quadcount/poly.hpp"

namespace quadcount {

/// theta = sum_{i>=1} b_{-i} t^{-i} with finitely many nonzero b_{-i}.
/// Zero entries are never stored; the zero tail has depth 0.
class LaurentTail {
 public:
  LaurentTail() = default;

  void set(unsigned i, FqElem c);
  [[nodiscard]] FqElem get(unsigned i) const;
  [[nodiscard]] const std::map<unsigned, FqElem>& entries() const noexcept { return entries_; }
  [[nodiscard]] unsigned depth() const noexcept { return entries_.empty() ? 0 : entries_.rbegin()->first; }
  [[nodiscard]] bool is_zero() const noexcept { return entries_.empty(); }
  /// min index with a nonzero entry (|theta| = q^{-order}); 0 for the zero tail.
  [[nodiscard]] unsigned order() const noexcept { return entries_.empty() ? 0 : entries_.begin()->first; }

  bool operator==(const LaurentTail&) const = default;

 private:
  std::map<unsigned, FqElem> entries_;
};

/// Coefficient of t^j (j <= -1) in the expansion of x/r at infinity, by long
/// division of x t^{|j|} by r.
[[nodiscard]] FqElem laurent_coeff_of_ratio(const PolyRing& ring, const Poly& x, const Poly& r, int j);

/// k with psi(x/r) = zeta_p^k.
[[nodiscard]] std::uint32_t psi_rational(const PolyRing& ring, const Poly& x, const Poly& r);

/// psi(y/r) for a fixed modulus r as a linear form on the coefficients of y:
/// the t^{-1} coefficient of y/r is sum_j y_j lambda_j with lambda_j the
/// t^{-1} coefficient of t^j/r. Precomputed for deg y <= max_degree.
class PsiFunctional {
 public:
  PsiFunctional(const PolyRing& ring, const Poly& r, std::size_t max_degree);

  /// k with psi(y/r) = zeta_p^k. Throws if deg y exceeds max_degree.
  [[nodiscard]] std::uint32_t operator()(const Poly& y) const;

 private:
  const FieldCtx* field_;
  std::vector<FqElem> lambda_;
};

/// k with psi(theta v) = zeta_p^k for polynomial v.
[[nodiscard]] std::uint32_t psi_tail_times(const FieldCtx& field, const LaurentTail& tail, const Poly& v);

using TailFunctional = std::function<CycInt(const LaurentTail&)>;

/// Integral of F over the ball {|theta| < q^M} (M <= 0) with the Haar measure
/// giving {|theta| < 1} mass 1. F must depend only on entries with index <= D.
/// Evaluated as q^{-D} times the sum of F over the tails supported on
/// indices (-M, D]; if D + M <= 0 the integrand is constant and the result is
/// F(0) q^M.
[[nodiscard]] QScaled haar_integral(const FieldCtx& field, std::int64_t M, std::int64_t D, const TailFunctional& F);

}  // namespace quadcount
