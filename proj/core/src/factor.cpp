#include <map>
#include <random>
#include <stdexcept>

#include "quadcount/poly.hpp"

namespace quadcount {

namespace {

// Inverse Frobenius on a polynomial whose exponents are all multiples of p:
// sum c_{ip} t^{ip} -> sum c_{ip}^{1/p} t^i, where c^{1/p} = c^{q/p}.
Poly pth_root(const PolyRing& ring, const Poly& a) {
  const FieldCtx& F = ring.field();
  const std::uint32_t p = F.p();
  const std::int64_t root_exp = F.q() / p;
  std::vector<FqElem> out((a.size() + p - 1) / p);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.pow(a.coeff(i * p), root_exp);
  return Poly(std::move(out));
}

void add_factor(std::map<Poly, unsigned>& acc, const Poly& g, unsigned mult) { acc[g] += mult; }

// Square-free decomposition of a monic polynomial into (square-free part, multiplicity).
void squarefree(const PolyRing& ring, const Poly& f, unsigned scale, std::vector<std::pair<Poly, unsigned>>& out) {
  if (f.is_constant()) return;
  const Poly df = ring.derivative(f);
  if (df.is_zero()) {
    squarefree(ring, pth_root(ring, f), scale * ring.field().p(), out);
    return;
  }
  Poly c = ring.gcd(f, df);
  Poly w = ring.div(f, c);
  unsigned i = 1;
  while (!w.is_constant()) {
    const Poly y = ring.gcd(w, c);
    const Poly fac = ring.div(w, y);
    if (!fac.is_constant()) out.emplace_back(fac, i * scale);
    w = y;
    c = ring.div(c, y);
    ++i;
  }
  if (!c.is_constant()) squarefree(ring, pth_root(ring, c), scale * ring.field().p(), out);
}

// Cantor-Zassenhaus splitting of a monic square-free g whose irreducible
// factors all have degree d.
void equal_degree(const PolyRing& ring, const Poly& g, std::size_t d, std::mt19937_64& rng,
                  std::vector<Poly>& out) {
  const std::size_t n = g.degree().value();
  if (n == d) {
    out.push_back(g);
    return;
  }
  const BigInt e = (ipow(BigInt(ring.q()), d) - 1) / 2;
  std::uniform_int_distribution<std::uint32_t> coeff(0, ring.q() - 1);
  while (true) {
    std::vector<FqElem> v(n);
    for (auto& c : v) c = FqElem{coeff(rng)};
    const Poly a(std::move(v));
    if (a.is_constant()) continue;
    const Poly b = ring.sub(ring.powmod(a, e, g), ring.one());
    if (b.is_zero()) continue;
    const Poly h = ring.gcd(g, b);
    const std::size_t dh = h.degree().value();
    if (dh == 0 || dh == n) continue;
    equal_degree(ring, h, d, rng, out);
    equal_degree(ring, ring.div(g, h), d, rng, out);
    return;
  }
}

// Distinct-degree factorization of a monic square-free polynomial.
std::vector<Poly> split_squarefree(const PolyRing& ring, Poly g, std::mt19937_64& rng) {
  std::vector<Poly> out;
  const Poly t = ring.t();
  Poly h = ring.mod(t, g);
  for (std::size_t d = 1; !g.is_constant() && 2 * d <= g.degree().value(); ++d) {
    h = ring.powmod(h, BigInt(ring.q()), g);
    const Poly fac = ring.gcd(g, ring.sub(h, t));
    if (!fac.is_constant()) {
      equal_degree(ring, fac, d, rng, out);
      g = ring.div(g, fac);
      h = ring.mod(h, g);
    }
  }
  if (!g.is_constant()) out.push_back(g);
  return out;
}

}  // namespace

Factorization PolyRing::factorize(const Poly& r) const {
  if (r.is_zero()) throw std::domain_error("cannot factorize the zero polynomial");
  Factorization result{r.leading(), {}};
  const Poly m = monic(r);
  if (m.is_constant()) return result;

  // Fixed seed: the splitting is randomized but the output is canonical anyway.
  std::mt19937_64 rng(0x5eedULL);
  std::vector<std::pair<Poly, unsigned>> sqf;
  squarefree(*this, m, 1, sqf);
  std::map<Poly, unsigned> acc;
  for (const auto& [part, mult] : sqf) {
    for (const Poly& irr : split_squarefree(*this, part, rng)) add_factor(acc, irr, mult);
  }
  result.factors.assign(acc.begin(), acc.end());
  return result;
}

bool PolyRing::is_irreducible(const Poly& r) const {
  if (r.is_constant()) return false;
  const auto fac = factorize(r);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace quadcount
