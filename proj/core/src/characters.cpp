#include "quadcount/characters.hpp"

#include <stdexcept>

namespace quadcount {

void LaurentTail::set(unsigned i, FqElem c) {
  if (i == 0) throw std::invalid_argument("tail indices start at 1");
  if (c.is_zero()) {
    entries_.erase(i);
  } else {
    entries_[i] = c;
  }
}

FqElem LaurentTail::get(unsigned i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? FqElem{} : it->second;
}

FqElem laurent_coeff_of_ratio(const PolyRing& ring, const Poly& x, const Poly& r, int j) {
  if (r.is_zero()) throw std::domain_error("Laurent expansion of x/0");
  if (j >= 0) throw std::invalid_argument("only negative Laurent indices are supported");
  const auto shift = static_cast<std::size_t>(-j);
  const Poly shifted = ring.mul(x, ring.monomial(ring.field().one(), shift));
  // The polynomial part of x t^{|j|} / r carries the coefficient of t^j at t^0.
  return ring.div(shifted, r).coeff(0);
}

std::uint32_t psi_rational(const PolyRing& ring, const Poly& x, const Poly& r) {
  if (r.is_zero()) throw std::domain_error("psi(x/0)");
  const std::size_t d = r.degree().value();
  if (d == 0) return 0;
  // (x mod r)/r = c t^{d-1} / (l t^d) + lower terms
  const Poly red = ring.mod(x, r);
  const FieldCtx& F = ring.field();
  return F.char_exponent(F.div(red.coeff(d - 1), r.leading()));
}

PsiFunctional::PsiFunctional(const PolyRing& ring, const Poly& r, std::size_t max_degree) : field_(&ring.field()) {
  if (r.is_zero()) throw std::domain_error("psi(x/0)");
  if (r.is_constant()) return;
  const std::size_t d = r.degree().value();
  const FqElem lead_inv = field_->inv(r.leading());
  lambda_.resize(max_degree + 1);
  Poly power = ring.one();  // t^j mod r
  const Poly t = ring.t();
  for (std::size_t j = 0; j <= max_degree; ++j) {
    lambda_[j] = field_->mul(power.coeff(d - 1), lead_inv);
    power = ring.mod(ring.mul(power, t), r);
  }
}

std::uint32_t PsiFunctional::operator()(const Poly& y) const {
  if (lambda_.empty()) return 0;
  if (y.size() > lambda_.size()) throw std::out_of_range("PsiFunctional: degree above the precomputed range");
  FqElem acc = field_->zero();
  for (std::size_t j = 0; j < y.size(); ++j) acc = field_->add(acc, field_->mul(y.coeff(j), lambda_[j]));
  return field_->char_exponent(acc);
}

std::uint32_t psi_tail_times(const FieldCtx& field, const LaurentTail& tail, const Poly& v) {
  FqElem acc = field.zero();
  for (const auto& [i, b] : tail.entries()) {
    acc = field.add(acc, field.mul(b, v.coeff(i - 1)));
  }
  return field.char_exponent(acc);
}

QScaled haar_integral(const FieldCtx& field, std::int64_t M, std::int64_t D, const TailFunctional& F) {
  if (M > 0) throw std::invalid_argument("haar_integral: the ball must lie inside |theta| < 1 (M <= 0)");
  if (D < 0) throw std::invalid_argument("haar_integral: depth must be non-negative");
  const std::uint32_t q = field.q();
  if (D + M <= 0) return QScaled{F(LaurentTail{}), -M, q};

  const auto lo = static_cast<unsigned>(1 - M);  // first free index
  const auto len = static_cast<unsigned>(D + M);
  std::uint64_t count = 1;
  for (unsigned i = 0; i < len; ++i) {
    if (count > (std::uint64_t{1} << 40) / q) throw std::overflow_error("haar_integral: too many cosets");
    count *= q;
  }

#ifndef NDEBUG
  {
    // The declared depth is trusted; perturbing one index deeper must not change F.
    LaurentTail deeper;
    deeper.set(static_cast<unsigned>(D + 1), field.one());
    if (!(F(deeper) == F(LaurentTail{}))) throw std::logic_error("haar_integral: integrand deeper than declared");
  }
#endif

  CycInt total(field.p());
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    LaurentTail tail;
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < len; ++i) {
      tail.set(lo + i, FqElem{static_cast<std::uint32_t>(rest % q)});
      rest /= q;
    }
    total += F(tail);
  }
  return QScaled{std::move(total), D, q};
}

}  // namespace quadcount
