#include "quadcount/poly.hpp"

#include <stdexcept>

namespace quadcount {

std::size_t Degree::value() const {
  if (!finite_) throw std::domain_error("degree of the zero polynomial is minus infinity");
  return value_;
}

Poly::Poly(std::vector<FqElem> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::strong_ordering Poly::operator<=>(const Poly& other) const noexcept {
  if (auto c = coeffs_.size() <=> other.coeffs_.size(); c != 0) return c;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (auto c = coeffs_[i] <=> other.coeffs_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

PolyIndexRange::PolyIndexRange(const PolyRing& ring, std::size_t len, bool monic)
    : ring_(&ring), len_(len), monic_(monic), count_(1) {
  for (std::size_t i = 0; i < len; ++i) {
    if (count_ > (std::uint64_t{1} << 62) / ring.q()) throw std::overflow_error("polynomial range too large");
    count_ *= ring.q();
  }
}

Poly PolyIndexRange::at(std::uint64_t index) const { return ring_->from_index(index, len_, monic_); }

Poly PolyIndexRange::iterator::operator*() const { return range_->at(index_); }

Poly PolyRing::constant(FqElem c) const { return Poly({c}); }

Poly PolyRing::monomial(FqElem c, std::size_t k) const {
  std::vector<FqElem> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly PolyRing::from_ints(std::span<const std::int64_t> coeffs) const {
  std::vector<FqElem> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field_.from_int(c));
  return Poly(std::move(v));
}

Poly PolyRing::add(const Poly& a, const Poly& b) const {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<FqElem> out(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = field_.add(i < x.size() ? x[i] : FqElem{}, i < y.size() ? y[i] : FqElem{});
  }
  return Poly(std::move(out));
}

Poly PolyRing::neg(const Poly& a) const {
  std::vector<FqElem> out(a.coeffs());
  for (auto& c : out) c = field_.neg(c);
  return Poly(std::move(out));
}

Poly PolyRing::sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }

Poly PolyRing::mul(const Poly& a, const Poly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<FqElem> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      out[i + j] = field_.add(out[i + j], field_.mul(x[i], y[j]));
    }
  }
  return Poly(std::move(out));
}

Poly PolyRing::scale(const Poly& a, FqElem c) const {
  std::vector<FqElem> out(a.coeffs());
  for (auto& v : out) v = field_.mul(v, c);
  return Poly(std::move(out));
}

std::pair<Poly, Poly> PolyRing::divmod(const Poly& a, const Poly& b) const {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {Poly{}, a};
  std::vector<FqElem> rem(a.coeffs());
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  const FqElem lead_inv = field_.inv(b.leading());
  std::vector<FqElem> quot(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    const FqElem c = field_.mul(rem[k], lead_inv);
    quot[k - db] = c;
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i <= db; ++i) {
      rem[k - db + i] = field_.sub(rem[k - db + i], field_.mul(c, d[i]));
    }
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly PolyRing::mod(const Poly& a, const Poly& b) const { return divmod(a, b).second; }

Poly PolyRing::pow(const Poly& a, unsigned e) const {
  Poly result = one();
  Poly base = a;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

Poly PolyRing::powmod(const Poly& a, const BigInt& e, const Poly& m) const {
  if (e < 0) throw std::domain_error("negative exponent in powmod");
  Poly result = mod(one(), m);
  if (e == 0) return result;
  const Poly base = mod(a, m);
  const std::size_t top = boost::multiprecision::msb(e);
  for (std::size_t bit = top + 1; bit-- > 0;) {
    result = mod(mul(result, result), m);
    if (boost::multiprecision::bit_test(e, bit)) result = mod(mul(result, base), m);
  }
  return result;
}

Poly PolyRing::derivative(const Poly& a) const {
  if (a.size() <= 1) return {};
  std::vector<FqElem> out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    out[i - 1] = field_.mul(a.coeff(i), field_.from_int(static_cast<std::int64_t>(i)));
  }
  return Poly(std::move(out));
}

Poly PolyRing::monic(const Poly& a) const {
  if (a.is_zero()) return a;
  return scale(a, field_.inv(a.leading()));
}

Poly PolyRing::gcd(const Poly& a, const Poly& b) const {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

BigInt PolyRing::abs(const Poly& a) const {
  if (a.is_zero()) return 0;
  return ipow(BigInt(q()), a.size() - 1);
}

std::uint64_t PolyRing::index_of(const Poly& a, std::size_t len) const {
  std::uint64_t idx = 0;
  for (std::size_t i = len; i-- > 0;) idx = idx * q() + a.coeff(i).index();
  return idx;
}

Poly PolyRing::from_index(std::uint64_t index, std::size_t len, bool monic) const {
  std::vector<FqElem> v(len + (monic ? 1 : 0));
  for (std::size_t i = 0; i < len; ++i) {
    v[i] = FqElem{static_cast<std::uint32_t>(index % q())};
    index /= q();
  }
  if (monic) v[len] = field_.one();
  return Poly(std::move(v));
}

std::string PolyRing::to_string(const Poly& a) const {
  if (a.is_zero()) return "0";
  auto coeff_str = [&](FqElem c) {
    if (field_.nu() == 1) return std::to_string(c.index());
    std::string s = "[";
    const auto cs = field_.coeffs(c);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(cs[i]);
    }
    return s + "]";
  };
  std::string out;
  for (std::size_t i = a.size(); i-- > 0;) {
    const FqElem c = a.coeff(i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    const bool unit_coeff = c == field_.one();
    if (i == 0) {
      out += coeff_str(c);
    } else {
      if (!unit_coeff) out += coeff_str(c);
      out += 't';
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out;
}

}  // namespace quadcount
