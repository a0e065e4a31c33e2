#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadcount/bigint.hpp"
#include "quadcount/expsums.hpp"
#include "quadcount/poly.hpp"

namespace quadcount {

/// A closed form was asked for outside the range where it is known to hold.
class UnsupportedRange : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

[[nodiscard]] CaseTag classify(const FieldCtx& field, const QuadForm& f);

/// One diagonal form in n variables per attainable case: the all-ones form,
/// and for even n also its twin with the last coefficient a non-square.
/// Split forms come first.
[[nodiscard]] std::vector<QuadForm> representative_forms(const FieldCtx& field, std::size_t n);

/// Symmetric Gram matrix G of f(x) = x^T G x.
using GramMatrix = std::vector<std::vector<FqElem>>;

struct Diagonalization {
  QuadForm form;
  /// S with S^T G S = diag(form.coeffs()); columns are the new basis vectors.
  GramMatrix transform;
};

/// Congruence diagonalization by symmetric elimination. Throws for
/// non-symmetric or degenerate input.
[[nodiscard]] Diagonalization diagonalize(const FieldCtx& field, const GramMatrix& gram);

/// sum over monic r of degree rho of phi(r): (q-1) q^{2 rho - 1}, and 1 for rho = 0.
[[nodiscard]] BigInt phi_degree_sum(std::uint32_t q, unsigned rho);

/// sum_{|r| <= q^M, r monic} (+-1)^{deg r} phi(r) / |r|^c in closed form.
[[nodiscard]] Rational phi_geometric_sum(std::uint32_t q, unsigned M, std::int64_t c, bool alternating);

/// N(P) = #{x in F_q[t]^n : |x| < q^P, f(x) = 0} from the closed forms (n >= 3, P >= 1).
[[nodiscard]] BigInt n_exact(const FieldCtx& field, const QuadForm& f, unsigned P);
/// As n_exact, but also accepts P = 0 where N(0) = 1.
[[nodiscard]] BigInt n_exact_from_zero(const FieldCtx& field, const QuadForm& f, unsigned P);

/// Contribution of the moduli of degree rho to the circle method sum:
/// sum_{deg r = rho, monic} S_r(f) |r|^{-n} I_r.
[[nodiscard]] Rational circle_stratum(const PolyRing& ring, const QuadForm& f, unsigned P, std::size_t rho);
/// N(P) reassembled from S_r(f) and I_r over all monic r with deg r <= P. Any n >= 1.
[[nodiscard]] BigInt n_circle(const PolyRing& ring, const QuadForm& f, unsigned P);

/// (N(P) - q N(P-1))/(q-1) + 1.
[[nodiscard]] BigInt primitive_from_counts(const BigInt& n_P, const BigInt& n_Pm1, std::uint32_t q);
/// Primitive count up to units, from N(P) and N(P-1) (closed forms for n >= 3,
/// the circle sum otherwise).
[[nodiscard]] BigInt n_primitive(const PolyRing& ring, const QuadForm& f, unsigned P);

/// (N(P+1) - (q+1) N(P) + q N(P-1))/(q-1). Throws if not a non-negative integer.
[[nodiscard]] BigInt mor_from_counts(const BigInt& n_plus, const BigInt& n_0, const BigInt& n_minus, std::uint32_t q);
/// Number of degree P morphisms from the projective line to the quadric (n >= 3, P >= 1).
[[nodiscard]] BigInt mor_exact(const FieldCtx& field, const QuadForm& f, unsigned P);

/// sum_{|r| <= q^{P-1}} S_r(f) |r|^{-n} I_r in closed form (n >= 3, P >= 1).
[[nodiscard]] Rational low_arc_sum_closed(const FieldCtx& field, const QuadForm& f, unsigned P);

enum class Method { ExactFormula, CircleReassembly, BruteForce, Convolution };
enum class Quantity { N, Primitive, Mor };

[[nodiscard]] std::string to_string(Method m);
[[nodiscard]] std::string to_string(Quantity q);

struct CountReport {
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::vector<FqElem> coeffs;
  CaseTag tag = CaseTag::Odd;
  unsigned P = 0;
  Quantity quantity = Quantity::N;
  BigInt value;
  Method method = Method::ExactFormula;
  double runtime_ms = 0.0;
};

}  // namespace quadcount
