#include "quadcount/expsums.hpp"

#include <stdexcept>

namespace quadcount {

QuadForm::QuadForm(std::vector<FqElem> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("quadratic form needs at least one variable");
  for (auto c : coeffs_) {
    if (c.is_zero()) throw std::invalid_argument("quadratic form coefficients must be units");
  }
}

FqElem QuadForm::det(const FieldCtx& field) const {
  FqElem d = field.one();
  for (auto c : coeffs_) d = field.mul(d, c);
  return d;
}

Poly QuadForm::evaluate(const PolyRing& ring, const std::vector<Poly>& x) const {
  if (x.size() != coeffs_.size()) throw std::invalid_argument("wrong number of variables");
  Poly acc;
  for (std::size_t i = 0; i < x.size(); ++i) acc = ring.add(acc, ring.scale(ring.mul(x[i], x[i]), coeffs_[i]));
  return acc;
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::SplitEven: return "SplitEven";
    case CaseTag::NonSplitEven: return "NonSplitEven";
    case CaseTag::Odd: return "Odd";
  }
  return "?";
}

namespace {

void require_monic(const PolyRing& ring, const Poly& r, const char* what) {
  if (!ring.is_monic(r)) throw std::invalid_argument(std::string(what) + ": modulus must be monic");
}

void require_prime(const PolyRing& ring, const Poly& w, unsigned k, const char* what) {
  if (!ring.is_monic(w) || !ring.is_irreducible(w)) {
    throw std::invalid_argument(std::string(what) + ": expected a monic irreducible polynomial");
  }
  if (k == 0) throw std::invalid_argument(std::string(what) + ": exponent must be at least 1");
}

std::vector<Poly> residues(const PolyRing& ring, std::size_t d) {
  std::vector<Poly> out;
  for (const Poly& x : ring.below_degree(d)) out.push_back(x);
  return out;
}

// Sum over the n-fold product of `domain` of zeta^{exponent(sum_i term[i][x_i])},
// where term[i][j] is the i-th summand for the j-th element of the domain.
template <typename Exponent>
CycInt sum_over_tuples(const PolyRing& ring, const std::vector<std::vector<Poly>>& term, Exponent&& exponent) {
  const std::uint32_t p = ring.field().p();
  const std::size_t n = term.size();
  const std::size_t m = term.front().size();
  std::vector<std::uint64_t> counts(p, 0);
  std::vector<std::size_t> idx(n, 0);
  std::vector<Poly> partial(n + 1);  // partial[i] = sum of the first i terms
  for (std::size_t i = 0; i < n; ++i) partial[i + 1] = ring.add(partial[i], term[i][0]);
  while (true) {
    ++counts[exponent(partial[n]) % p];
    std::size_t level = n;
    while (level > 0) {
      --level;
      if (++idx[level] < m) break;
      idx[level] = 0;
      if (level == 0) return CycInt::from_exponent_counts(p, counts);
    }
    for (std::size_t i = level; i < n; ++i) partial[i + 1] = ring.add(partial[i], term[i][idx[i]]);
  }
}

}  // namespace

CycInt gauss_sum_direct(const PolyRing& ring, const Poly& r) {
  return s_quad_direct(ring, ring.one(), r);
}

CycInt gauss_sum_prime_power_closed(const PolyRing& ring, const Poly& w, unsigned k) {
  require_prime(ring, w, k, "gauss_sum_prime_power_closed");
  const BigInt norm = ring.abs(w);
  if (k % 2 == 0) return CycInt::from_integer(ring.field().p(), ipow(norm, k / 2));
  return gauss_sum_direct(ring, w) * ipow(norm, (k - 1) / 2);
}

CycInt s_quad_direct(const PolyRing& ring, const Poly& a, const Poly& r) {
  require_monic(ring, r, "s_quad_direct");
  const std::uint32_t p = ring.field().p();
  const std::size_t d = r.degree().value();
  const PsiFunctional psi(ring, r, a.size() + 2 * d);
  std::vector<std::uint64_t> counts(p, 0);
  for (const Poly& x : ring.below_degree(d)) ++counts[psi(ring.mul(a, ring.mul(x, x)))];
  return CycInt::from_exponent_counts(p, counts);
}

CycInt s_quad_prime_power_closed(const PolyRing& ring, const Poly& a, const Poly& w, unsigned k) {
  require_prime(ring, w, k, "s_quad_prime_power_closed");
  const int l = ring.legendre_symbol(a, w);
  if (l == 0) throw std::invalid_argument("s_quad_prime_power_closed: a must be coprime to the prime");
  const int symbol = (l < 0 && k % 2 == 1) ? -1 : 1;
  return gauss_sum_prime_power_closed(ring, w, k) * BigInt(symbol);
}

CycInt s_form_direct(const PolyRing& ring, const QuadForm& f, const Poly& a, const Poly& r) {
  require_monic(ring, r, "s_form_direct");
  const auto domain = residues(ring, r.degree().value());
  std::vector<std::vector<Poly>> term(f.n());
  for (std::size_t i = 0; i < f.n(); ++i) {
    const Poly ai = ring.scale(a, f.coeffs()[i]);
    for (const Poly& b : domain) term[i].push_back(ring.mod(ring.mul(ai, ring.mul(b, b)), r));
  }
  const PsiFunctional psi(ring, r, r.size());
  return sum_over_tuples(ring, term, [&](const Poly& v) { return psi(v); });
}

CycInt s_r_form_direct(const PolyRing& ring, const QuadForm& f, const Poly& r) {
  require_monic(ring, r, "s_r_form_direct");
  CycInt total(ring.field().p());
  for (const Poly& a : ring.below_degree(r.degree().value())) {
    if (ring.gcd(a, r) == ring.one()) total += s_form_direct(ring, f, a, r);
  }
  return total;
}

namespace {

// (-1)^{n/2} a_1 ... a_n for even n.
FqElem even_discriminant(const FieldCtx& F, const QuadForm& f) {
  FqElem d = f.det(F);
  if ((f.n() / 2) % 2 == 1) d = F.neg(d);
  return d;
}

}  // namespace

CycInt s_prime_power_form_closed(const PolyRing& ring, const QuadForm& f, const Poly& w, unsigned k) {
  require_prime(ring, w, k, "s_prime_power_form_closed");
  const FieldCtx& F = ring.field();
  const BigInt norm = ring.abs(w);
  const BigInt phi = ipow(norm, k - 1) * (norm - 1);
  const std::size_t n = f.n();
  if (n % 2 == 1) {
    if (k % 2 == 1) return CycInt(F.p());
    // |w^k|^{n/2} with k even
    return CycInt::from_integer(F.p(), phi * ipow(norm, k / 2 * n));
  }
  const int l = ring.legendre_symbol(ring.constant(even_discriminant(F, f)), w);
  const int symbol = (l < 0 && k % 2 == 1) ? -1 : 1;
  return CycInt::from_integer(F.p(), BigInt(symbol) * phi * ipow(norm, k * n / 2));
}

BigInt s_r_form_closed(const PolyRing& ring, const QuadForm& f, const Poly& r) {
  require_monic(ring, r, "s_r_form_closed");
  return s_r_form_closed(ring, f, r, ring.factorize(r));
}

BigInt s_r_form_closed(const PolyRing& ring, const QuadForm& f, const Poly& r, const Factorization& fac) {
  require_monic(ring, r, "s_r_form_closed");
  if (r.is_constant()) return 1;
  const FieldCtx& F = ring.field();
  const std::size_t n = f.n();
  const std::size_t d = r.degree().value();
  const BigInt phi = ring.euler_phi(r, fac);
  const BigInt q(F.q());
  if (n % 2 == 0) {
    const int symbol = ring.jacobi_symbol(ring.constant(even_discriminant(F, f)), r, fac);
    return BigInt(symbol) * phi * ipow(q, d * n / 2);
  }
  for (const auto& entry : fac.factors) {
    if (entry.second % 2 != 0) return 0;
  }
  if (d % 2 != 0) throw std::logic_error("square modulus of odd degree");
  return phi * ipow(q, d / 2 * n);
}

CycInt exp_sum_S(const PolyRing& ring, const QuadForm& f, const Poly& a, const Poly& r, const LaurentTail& tail,
                 unsigned P) {
  require_monic(ring, r, "exp_sum_S");
  const FieldCtx& F = ring.field();
  const auto domain = residues(ring, P);
  std::vector<std::vector<Poly>> term(f.n());
  for (std::size_t i = 0; i < f.n(); ++i) {
    for (const Poly& x : domain) term[i].push_back(ring.scale(ring.mul(x, x), f.coeffs()[i]));
  }
  const PsiFunctional psi(ring, r, a.size() + 2 * P);
  return sum_over_tuples(ring, term, [&](const Poly& v) {
    return psi(ring.mul(a, v)) + psi_tail_times(F, tail, v);
  });
}

QScaled i_r_direct(const PolyRing& ring, const QuadForm& f, const Poly& r, unsigned P) {
  require_monic(ring, r, "i_r_direct");
  const std::size_t rho = r.degree().value();
  if (rho > P) throw std::invalid_argument("i_r_direct: deg r must not exceed P");
  if (P == 0) throw std::invalid_argument("i_r_direct: P must be at least 1");
  const Poly one = ring.one();
  const auto M = -static_cast<std::int64_t>(rho + P);
  const auto D = static_cast<std::int64_t>(2 * P - 1);
  return haar_integral(ring.field(), M, D,
                       [&](const LaurentTail& theta) { return exp_sum_S(ring, f, ring.zero(), one, theta, P); });
}

Rational i_r_closed(const PolyRing& ring, const QuadForm& f, const Poly& r, unsigned P) {
  require_monic(ring, r, "i_r_closed");
  return i_r_closed_by_degree(ring, f, r.degree().value(), P);
}

Rational i_r_closed_by_degree(const PolyRing& ring, const QuadForm& f, std::size_t rho, unsigned P) {
  if (rho > P) throw std::invalid_argument("i_r_closed: deg r must not exceed P");
  const BigInt q(ring.q());
  const auto n = static_cast<std::int64_t>(f.n());
  const auto PP = static_cast<std::int64_t>(P);
  if (rho == P) return rpow(q, PP * (n - 2));
  BigInt sum = 0;
  const auto top = static_cast<std::int64_t>(P - rho - 1);
  for (std::int64_t k = 0; k <= top; ++k) {
    const Poly tk = ring.monomial(ring.field().one(), static_cast<std::size_t>(top - k));
    sum += ipow(q, static_cast<std::uint64_t>(n * k)) * s_r_form_closed(ring, f, tk);
  }
  return rpow(q, static_cast<std::int64_t>(rho) * n + n + 1 - 2 * PP) * Rational(sum);
}

}  // namespace quadcount
