#include "quadcount/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quadcount {

namespace {

// Reduce a length-p vector over x^p = 1 to the basis of length p-1:
// zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
std::vector<BigInt> reduce(std::vector<BigInt> full) {
  const BigInt top = full.back();
  full.pop_back();
  if (top != 0) {
    for (auto& c : full) c -= top;
  }
  return full;
}

}  // namespace

CycInt::CycInt(std::uint32_t p) : p_(p), coeffs_(p < 2 ? 0 : p - 1) {
  if (p < 2) throw std::invalid_argument("cyclotomic order must be prime");
}

CycInt CycInt::from_integer(std::uint32_t p, const BigInt& n) {
  CycInt c(p);
  c.coeffs_[0] = n;
  return c;
}

CycInt CycInt::from_exponent(std::uint32_t p, std::int64_t k) {
  const auto pp = static_cast<std::int64_t>(p);
  const auto e = static_cast<std::size_t>(((k % pp) + pp) % pp);
  std::vector<BigInt> full(p);
  full[e] = 1;
  CycInt c(p);
  c.coeffs_ = reduce(std::move(full));
  return c;
}

CycInt CycInt::from_exponent_counts(std::uint32_t p, std::span<const BigInt> counts) {
  if (counts.size() != p) throw std::invalid_argument("exponent histogram must have p entries");
  CycInt c(p);
  c.coeffs_ = reduce(std::vector<BigInt>(counts.begin(), counts.end()));
  return c;
}

CycInt CycInt::from_exponent_counts(std::uint32_t p, std::span<const std::uint64_t> counts) {
  if (counts.size() != p) throw std::invalid_argument("exponent histogram must have p entries");
  std::vector<BigInt> full(counts.begin(), counts.end());
  CycInt c(p);
  c.coeffs_ = reduce(std::move(full));
  return c;
}

bool CycInt::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

void CycInt::check_same(const CycInt& o) const {
  if (p_ != o.p_) throw std::invalid_argument("mixing cyclotomic integers of different order");
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
  check_same(o);
  std::vector<BigInt> full(p_);
  const std::size_t n = coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (o.coeffs_[j] == 0) continue;
      full[(i + j) % p_] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = reduce(std::move(full));
  return *this;
}

CycInt& CycInt::operator*=(const BigInt& n) {
  for (auto& c : coeffs_) c *= n;
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt c = *this;
  for (auto& v : c.coeffs_) v = -v;
  return c;
}

std::optional<BigInt> CycInt::to_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return std::nullopt;
  }
  return coeffs_[0];
}

std::complex<double> CycInt::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p_);
    z += coeffs_[k].convert_to<double>() * std::polar(1.0, angle);
  }
  return z;
}

std::string CycInt::to_json() const {
  std::string s = "{\"p\":" + std::to_string(p_) + ",\"coeffs\":[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += coeffs_[i].str();
  }
  return s + "]}";
}

std::string CycInt::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    if (!s.empty() && c > 0) s += '+';
    if (k == 0) {
      s += c.str();
      continue;
    }
    if (c == -1) {
      s += '-';
    } else if (c != 1) {
      s += c.str();
    }
    s += 'z';
    if (k > 1) s += '^' + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

std::optional<Rational> QScaled::to_rational() const {
  const auto n = num.to_integer();
  if (!n) return std::nullopt;
  return Rational(*n) * rpow(BigInt(q), -qexp);
}

}  // namespace quadcount
