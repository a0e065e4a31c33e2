#include <stdexcept>

#include "quadcount/poly.hpp"

namespace quadcount {

BigInt PolyRing::euler_phi(const Poly& r) const {
  if (r.is_zero()) throw std::domain_error("euler_phi(0) is undefined");
  return euler_phi(r, factorize(r));
}

BigInt PolyRing::euler_phi(const Poly& r, const Factorization& fac) const {
  if (r.is_zero()) throw std::domain_error("euler_phi(0) is undefined");
  BigInt phi = 1;
  for (const auto& [w, k] : fac.factors) {
    const BigInt norm = abs(w);
    phi *= ipow(norm, k - 1) * (norm - 1);
  }
  return phi;
}

int PolyRing::moebius(const Poly& r) const {
  if (r.is_zero()) throw std::domain_error("moebius(0) is undefined");
  return moebius(r, factorize(r));
}

int PolyRing::moebius(const Poly& r, const Factorization& fac) const {
  if (r.is_zero()) throw std::domain_error("moebius(0) is undefined");
  int sign = 1;
  for (const auto& entry : fac.factors) {
    if (entry.second >= 2) return 0;
    sign = -sign;
  }
  return sign;
}

int PolyRing::legendre_symbol(const Poly& a, const Poly& w) const {
  const Poly red = mod(a, w);
  if (red.is_zero()) return 0;
  const Poly v = powmod(red, (abs(w) - 1) / 2, w);
  if (v == one()) return 1;
  if (v == constant(field_.neg(field_.one()))) return -1;
  throw std::logic_error("Euler criterion produced a value outside {1, -1}; modulus is not irreducible");
}

int PolyRing::jacobi_symbol(const Poly& a, const Poly& r) const {
  if (!is_monic(r) || r.is_constant()) throw std::invalid_argument("jacobi_symbol needs a monic modulus of positive degree");
  return jacobi_symbol(a, r, factorize(r));
}

int PolyRing::jacobi_symbol(const Poly& a, const Poly& r, const Factorization& fac) const {
  if (!is_monic(r) || r.is_constant()) throw std::invalid_argument("jacobi_symbol needs a monic modulus of positive degree");
  int value = 1;
  for (const auto& [w, k] : fac.factors) {
    const int l = legendre_symbol(a, w);
    if (l == 0) return 0;
    if (l < 0 && k % 2 == 1) value = -value;
  }
  return value;
}

std::optional<Poly> PolyRing::square_root(const Poly& r) const {
  if (r.is_zero()) throw std::domain_error("square_root(0) is undefined");
  const auto fac = factorize(r);
  const auto unit_root = field_.sqrt(fac.unit);
  if (!unit_root) return std::nullopt;
  Poly s = constant(*unit_root);
  for (const auto& [w, k] : fac.factors) {
    if (k % 2 != 0) return std::nullopt;
    s = mul(s, pow(w, k / 2));
  }
  return s;
}

}  // namespace quadcount
