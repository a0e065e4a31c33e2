#include "quadcount/field.hpp"

#include <algorithm>
#include <string>

namespace quadcount {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

// Dense polynomials over F_p as coefficient vectors, low to high. Used only
// while building the field tables.
using PrimePoly = std::vector<std::uint32_t>;

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PrimePoly prime_poly_mod(PrimePoly a, const PrimePoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  // m is monic
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * static_cast<std::uint64_t>(m[i])) % p);
    }
    trim(a);
  }
  return a;
}

bool has_factor_of_degree_at_most(const PrimePoly& m, unsigned max_deg, std::uint32_t p) {
  // Trial division by every monic polynomial of degree 1..max_deg.
  for (unsigned d = 1; d <= max_deg; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      PrimePoly divisor(d + 1, 0);
      std::uint64_t rest = idx;
      for (unsigned i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      divisor[d] = 1;
      if (prime_poly_mod(m, divisor, p).empty()) return true;
    }
  }
  return false;
}

bool is_irreducible(const PrimePoly& m, std::uint32_t p) {
  const unsigned deg = static_cast<unsigned>(m.size() - 1);
  if (deg == 0) return false;
  if (deg == 1) return true;
  return !has_factor_of_degree_at_most(m, deg / 2, p);
}

std::uint32_t pack(const PrimePoly& a, std::uint32_t p, unsigned nu) {
  std::uint32_t idx = 0;
  for (unsigned i = nu; i-- > 0;) {
    idx = idx * p + (i < a.size() ? a[i] : 0);
  }
  return idx;
}

PrimePoly unpack(std::uint32_t idx, std::uint32_t p, unsigned nu) {
  PrimePoly a(nu, 0);
  for (unsigned i = 0; i < nu; ++i) {
    a[i] = idx % p;
    idx /= p;
  }
  return a;
}

std::uint32_t slow_mul(std::uint32_t x, std::uint32_t y, const PrimePoly& m, std::uint32_t p, unsigned nu) {
  const PrimePoly a = unpack(x, p, nu);
  const PrimePoly b = unpack(y, p, nu);
  PrimePoly prod(2 * nu, 0);
  for (unsigned i = 0; i < nu; ++i) {
    for (unsigned j = 0; j < nu; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return pack(prime_poly_mod(std::move(prod), m, p), p, nu);
}

std::uint32_t slow_add(std::uint32_t x, std::uint32_t y, std::uint32_t p, unsigned nu) {
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (unsigned i = 0; i < nu; ++i) {
    out += ((x % p + y % p) % p) * scale;
    x /= p;
    y /= p;
    scale *= p;
  }
  return out;
}

}  // namespace

FieldCtx::FieldCtx(std::uint32_t p, unsigned nu, std::optional<std::vector<std::uint32_t>> modulus)
    : p_(p), nu_(nu), q_(1) {
  if (p % 2 == 0) throw FieldError("characteristic must be odd, got p = " + std::to_string(p));
  if (!is_prime(p)) throw FieldError("p = " + std::to_string(p) + " is not prime");
  if (nu == 0) throw FieldError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < nu; ++i) {
    q *= p;
    if (q > kMaxOrder) throw FieldError("field order exceeds supported maximum " + std::to_string(kMaxOrder));
  }
  q_ = static_cast<std::uint32_t>(q);

  auto tables = std::make_shared<Tables>();
  if (modulus) {
    PrimePoly m = *modulus;
    if (m.size() != nu + 1 || m.back() != 1) {
      throw FieldError("modulus must be monic of degree " + std::to_string(nu));
    }
    for (auto c : m) {
      if (c >= p) throw FieldError("modulus coefficient out of range [0, p)");
    }
    if (!is_irreducible(m, p)) throw FieldError("modulus is reducible over F_p");
    tables->modulus = std::move(m);
  } else {
    // Lexicographically smallest by packed index of the non-leading part.
    std::uint64_t count = q;
    bool found = false;
    for (std::uint64_t idx = 0; idx < count && !found; ++idx) {
      PrimePoly m = unpack(static_cast<std::uint32_t>(idx), p, nu);
      m.push_back(1);
      if (is_irreducible(m, p)) {
        tables->modulus = std::move(m);
        found = true;
      }
    }
    if (!found) throw FieldError("no irreducible modulus found");  // unreachable
  }

  const PrimePoly& m = tables->modulus;
  const std::uint32_t units = q_ - 1;

  // Find a primitive element by walking powers.
  tables->exp.assign(units, 0);
  tables->log.assign(q_, 0);
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = 1;
    bool primitive = true;
    for (std::uint32_t k = 0; k < units; ++k) {
      if (k > 0 && x == 1) {
        primitive = false;
        break;
      }
      tables->exp[k] = x;
      x = slow_mul(x, g, m, p, nu);
    }
    if (primitive && x == 1) break;
  }
  for (std::uint32_t k = 0; k < units; ++k) tables->log[tables->exp[k]] = k;

  tables->zech.assign(units, units);
  for (std::uint32_t k = 0; k < units; ++k) {
    const std::uint32_t s = slow_add(1, tables->exp[k], p, nu);
    tables->zech[k] = (s == 0) ? units : tables->log[s];
  }

  tables_ = tables;

  // Trace: sum of the Frobenius conjugates a^{p^i}; the result lies in F_p.
  tables->trace.assign(q_, 0);
  for (std::uint32_t idx = 0; idx < q_; ++idx) {
    FqElem acc = zero();
    FqElem conj{idx};
    for (unsigned i = 0; i < nu; ++i) {
      acc = add(acc, conj);
      conj = pow(conj, p);
    }
    if (acc.index() >= p) throw std::logic_error("trace left the prime field");
    tables->trace[idx] = acc.index();
  }
}

FieldCtx FieldCtx::from_order(std::uint32_t q) {
  if (q < 3) throw FieldError("field order must be an odd prime power");
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned nu = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++nu;
  }
  if (rest != 1) throw FieldError(std::to_string(q) + " is not a prime power");
  return FieldCtx(p, nu);
}

FqElem FieldCtx::from_int(std::int64_t n) const noexcept {
  const auto pp = static_cast<std::int64_t>(p_);
  return FqElem{static_cast<std::uint32_t>(((n % pp) + pp) % pp)};
}

FqElem FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > nu_) throw std::invalid_argument("too many coordinates for field element");
  std::uint32_t idx = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw std::invalid_argument("field coordinate out of range [0, p)");
    idx = idx * p_ + coeffs[i];
  }
  return FqElem{idx};
}

std::vector<std::uint32_t> FieldCtx::coeffs(FqElem a) const { return unpack(a.index(), p_, nu_); }

std::vector<FqElem> FieldCtx::elements() const {
  std::vector<FqElem> out;
  out.reserve(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out.emplace_back(i);
  return out;
}

FqElem FieldCtx::add(FqElem a, FqElem b) const noexcept {
  if (nu_ == 1) return FqElem{(a.index() + b.index()) % p_};
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::uint32_t units = q_ - 1;
  const std::uint32_t la = tables_->log[a.index()];
  const std::uint32_t lb = tables_->log[b.index()];
  const std::uint32_t z = tables_->zech[(lb + units - la) % units];
  if (z == units) return zero();
  return FqElem{tables_->exp[(la + z) % units]};
}

FqElem FieldCtx::neg(FqElem a) const noexcept {
  if (a.is_zero()) return a;
  if (nu_ == 1) return FqElem{p_ - a.index()};
  const std::uint32_t units = q_ - 1;
  return FqElem{tables_->exp[(tables_->log[a.index()] + units / 2) % units]};
}

FqElem FieldCtx::sub(FqElem a, FqElem b) const noexcept { return add(a, neg(b)); }

FqElem FieldCtx::mul(FqElem a, FqElem b) const noexcept {
  if (a.is_zero() || b.is_zero()) return zero();
  if (nu_ == 1) return FqElem{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.index()) * b.index() % p_)};
  const std::uint32_t units = q_ - 1;
  return FqElem{tables_->exp[(tables_->log[a.index()] + tables_->log[b.index()]) % units]};
}

FqElem FieldCtx::inv(FqElem a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero in F_q");
  const std::uint32_t units = q_ - 1;
  return FqElem{tables_->exp[(units - tables_->log[a.index()]) % units]};
}

FqElem FieldCtx::div(FqElem a, FqElem b) const { return mul(a, inv(b)); }

FqElem FieldCtx::pow(FqElem a, std::int64_t e) const {
  if (e == 0) return one();
  if (a.is_zero()) {
    if (e < 0) throw std::domain_error("negative power of zero in F_q");
    return zero();
  }
  const auto units = static_cast<std::int64_t>(q_ - 1);
  const std::int64_t k = ((static_cast<std::int64_t>(tables_->log[a.index()]) * (e % units)) % units + units) % units;
  return FqElem{tables_->exp[static_cast<std::size_t>(k)]};
}

bool FieldCtx::is_square_unit(FqElem a) const {
  if (a.is_zero()) throw std::domain_error("squareness is only defined for units of F_q");
  return pow(a, (q_ - 1) / 2) == one();
}

std::optional<FqElem> FieldCtx::sqrt(FqElem a) const {
  if (a.is_zero()) return zero();
  const std::uint32_t l = tables_->log[a.index()];
  if (l % 2 != 0) return std::nullopt;
  const std::uint32_t units = q_ - 1;
  const FqElem r1{tables_->exp[l / 2]};
  const FqElem r2{tables_->exp[(l / 2 + units / 2) % units]};
  return std::min(r1, r2);
}

}  // namespace quadcount
