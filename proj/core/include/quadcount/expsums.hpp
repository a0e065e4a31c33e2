#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quadcount/characters.hpp"
#include "quadcount/cyclotomic.hpp"
#include "quadcount/poly.hpp"

namespace quadcount {

/// Diagonal form a_1 x_1^2 + ... + a_n x_n^2 with every a_i a unit.
class QuadForm {
 public:
  explicit QuadForm(std::vector<FqElem> coeffs);

  [[nodiscard]] const std::vector<FqElem>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] std::size_t n() const noexcept { return coeffs_.size(); }
  /// a_1 ... a_n
  [[nodiscard]] FqElem det(const FieldCtx& field) const;
  /// f(x) as a polynomial.
  [[nodiscard]] Poly evaluate(const PolyRing& ring, const std::vector<Poly>& x) const;

  bool operator==(const QuadForm&) const = default;

 private:
  std::vector<FqElem> coeffs_;
};

enum class CaseTag { SplitEven, NonSplitEven, Odd };

[[nodiscard]] std::string to_string(CaseTag tag);

/// tau_r = sum_{|x|<|r|} psi(x^2/r), by direct summation.
[[nodiscard]] CycInt gauss_sum_direct(const PolyRing& ring, const Poly& r);
/// tau_{w^k} for monic irreducible w: |w|^{k/2} for even k, |w|^{(k-1)/2} tau_w for odd k.
[[nodiscard]] CycInt gauss_sum_prime_power_closed(const PolyRing& ring, const Poly& w, unsigned k);

/// S_{a,r} = sum_{|x|<|r|} psi(a x^2/r).
[[nodiscard]] CycInt s_quad_direct(const PolyRing& ring, const Poly& a, const Poly& r);
/// (a/w^k) tau_{w^k}; a must be coprime to w.
[[nodiscard]] CycInt s_quad_prime_power_closed(const PolyRing& ring, const Poly& a, const Poly& w, unsigned k);

/// S_{a,r}(f) = sum_{|b|<|r|} psi(a f(b)/r), summed over all of (F_q[t]/r)^n.
[[nodiscard]] CycInt s_form_direct(const PolyRing& ring, const QuadForm& f, const Poly& a, const Poly& r);
/// S_r(f) = sum over a coprime to r, |a| < |r|, of S_{a,r}(f).
[[nodiscard]] CycInt s_r_form_direct(const PolyRing& ring, const QuadForm& f, const Poly& r);
/// S_{w^k}(f) from the prime power evaluation.
[[nodiscard]] CycInt s_prime_power_form_closed(const PolyRing& ring, const QuadForm& f, const Poly& w, unsigned k);
/// S_r(f) for monic r in closed form.
[[nodiscard]] BigInt s_r_form_closed(const PolyRing& ring, const QuadForm& f, const Poly& r);
[[nodiscard]] BigInt s_r_form_closed(const PolyRing& ring, const QuadForm& f, const Poly& r, const Factorization& fac);

/// S(a/r + theta) = sum_{|x|<q^P} psi((a/r + theta) f(x)).
[[nodiscard]] CycInt exp_sum_S(const PolyRing& ring, const QuadForm& f, const Poly& a, const Poly& r,
                               const LaurentTail& tail, unsigned P);

/// I_r, the integral of S(theta) over |theta| < 1/(|r| q^P), by exact finite averaging.
[[nodiscard]] QScaled i_r_direct(const PolyRing& ring, const QuadForm& f, const Poly& r, unsigned P);
/// I_r in closed form. Depends on r only through deg r.
[[nodiscard]] Rational i_r_closed(const PolyRing& ring, const QuadForm& f, const Poly& r, unsigned P);
[[nodiscard]] Rational i_r_closed_by_degree(const PolyRing& ring, const QuadForm& f, std::size_t rho, unsigned P);

}  // namespace quadcount
