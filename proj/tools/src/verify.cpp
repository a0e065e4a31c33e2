#include "quadcount/cli/verify.hpp"

#include <functional>
#include <map>

#include "quadcount/quadcount.hpp"

namespace quadcount::cli {

namespace {

class Recorder {
 public:
  explicit Recorder(std::vector<Check>& out) : out_(out) {}

  template <typename A, typename B>
  void equal(const std::string& name, const std::string& params, const A& lhs, const B& rhs) {
    out_.push_back(Check{name, params, render(lhs), render(rhs), lhs == rhs});
  }

 private:
  static std::string render(const CycInt& v) { return v.to_string(); }
  static std::string render(const BigInt& v) { return v.str(); }
  static std::string render(const Rational& v) { return v.str(); }
  static std::string render(int v) { return std::to_string(v); }

  std::vector<Check>& out_;
};

std::string form_label(const FieldCtx& F, const QuadForm& f) {
  std::string s = "f=(";
  for (std::size_t i = 0; i < f.n(); ++i) {
    if (i) s += ',';
    s += std::to_string(f.coeffs()[i].index());
  }
  return s + ") " + to_string(classify(F, f));
}

std::vector<Poly> monic_up_to(const PolyRing& R, std::size_t maxdeg) {
  std::vector<Poly> out;
  for (std::size_t d = 0; d <= maxdeg; ++d) {
    for (const Poly& r : R.monic_of_degree(d)) out.push_back(r);
  }
  return out;
}

std::vector<std::size_t> n_range(const VerifyBounds& b, std::size_t lo, std::size_t hi) {
  if (b.n != 0) return {b.n};
  std::vector<std::size_t> out;
  for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

void suite_gauss(const FieldCtx& F, const VerifyBounds& b, Recorder& rec) {
  const PolyRing R(F);
  for (std::size_t d = 1; d <= b.maxdeg; ++d) {
    for (const Poly& w : R.monic_of_degree(d)) {
      if (!R.is_irreducible(w)) continue;
      for (unsigned k = 1; k <= b.maxk; ++k) {
        const std::string params = "w=" + R.to_string(w) + " k=" + std::to_string(k);
        const Poly wk = R.pow(w, k);
        rec.equal("gauss_sum", params, gauss_sum_direct(R, wk), gauss_sum_prime_power_closed(R, w, k));
        // every unit residue mod w, and the same shifted by w when that is a different residue mod w^k
        for (const Poly& b : R.below_degree(d)) {
          if (b.is_zero()) continue;
          std::vector<Poly> numerators{b};
          if (k > 1) numerators.push_back(R.add(b, w));
          for (const Poly& a : numerators) {
            rec.equal("s_quad", params + " a=" + R.to_string(a), s_quad_direct(R, a, wk),
                      s_quad_prime_power_closed(R, a, w, k));
          }
        }
      }
    }
  }
}

void suite_srf(const FieldCtx& F, const VerifyBounds& b, Recorder& rec) {
  const PolyRing R(F);
  const auto moduli = monic_up_to(R, b.maxdeg);
  for (std::size_t n : n_range(b, 1, b.nmax)) {
    for (const QuadForm& f : representative_forms(F, n)) {
      const std::string fl = form_label(F, f);
      for (const Poly& r : moduli) {
        const std::string params = fl + " r=" + R.to_string(r);
        const CycInt direct = s_r_form_direct(R, f, r);
        rec.equal("s_r_form", params, direct, CycInt::from_integer(F.p(), s_r_form_closed(R, f, r)));
        if (n % 2 == 1 && !R.square_root(r)) rec.equal("odd_vanishing", params, direct, CycInt(F.p()));
      }
      // multiplicativity over coprime pairs of positive degree
      for (const Poly& r1 : moduli) {
        for (const Poly& r2 : moduli) {
          if (r1.is_constant() || r2.is_constant() || !(r1 < r2)) continue;
          if (R.gcd(r1, r2) != R.one()) continue;
          const Poly prod = R.mul(r1, r2);
          const std::string params = fl + " r1=" + R.to_string(r1) + " r2=" + R.to_string(r2);
          rec.equal("multiplicative_closed", params, s_r_form_closed(R, f, prod),
                    BigInt(s_r_form_closed(R, f, r1) * s_r_form_closed(R, f, r2)));
          if (prod.degree().value() <= b.maxdeg) {
            rec.equal("multiplicative_direct", params, s_r_form_direct(R, f, prod),
                      s_r_form_direct(R, f, r1) * s_r_form_direct(R, f, r2));
          }
        }
      }
    }
  }
}

void suite_lemma31(const FieldCtx& F, const VerifyBounds& b, Recorder& rec) {
  const PolyRing R(F);
  const std::uint32_t q = F.q();
  for (std::size_t n : n_range(b, 1, b.nmax)) {
    for (const QuadForm& f : representative_forms(F, n)) {
      const std::string fl = form_label(F, f);
      for (unsigned P = 1; P <= b.pmax; ++P) {
        for (const Poly& r : monic_up_to(R, P)) {
          const std::size_t rho = r.degree().value();
          // tails with |theta| < 1/(|r| q^P), free on indices rho+P+1 .. 2P
          const std::size_t lo = rho + P + 1;
          const std::size_t len = 2 * P >= lo ? 2 * P - lo + 1 : 0;
          std::vector<LaurentTail> tails;
          std::uint64_t count = 1;
          for (std::size_t i = 0; i < len; ++i) count *= q;
          for (std::uint64_t idx = 0; idx < count; ++idx) {
            LaurentTail t;
            std::uint64_t rest = idx;
            for (std::size_t i = 0; i < len; ++i) {
              t.set(static_cast<unsigned>(lo + i), FqElem{static_cast<std::uint32_t>(rest % q)});
              rest /= q;
            }
            tails.push_back(t);
          }
          const BigInt rn = ipow(R.abs(r), n);
          for (const Poly& a : R.below_degree(rho)) {
            if (R.gcd(a, r) != R.one()) continue;
            const CycInt sar = s_form_direct(R, f, a, r);
            for (const LaurentTail& theta : tails) {
              std::string params = fl + " P=" + std::to_string(P) + " r=" + R.to_string(r) + " a=" + R.to_string(a) +
                                   " theta=";
              for (const auto& [i, c] : theta.entries()) params += std::to_string(c.index()) + "t^-" + std::to_string(i) + ";";
              rec.equal("lemma31", params, exp_sum_S(R, f, a, r, theta, P) * rn,
                        sar * exp_sum_S(R, f, R.zero(), R.one(), theta, P));
            }
          }
        }
      }
    }
  }
}

void suite_lemma32(const FieldCtx& F, const VerifyBounds& b, Recorder& rec) {
  const PolyRing R(F);
  for (std::size_t n : n_range(b, 2, std::min<std::size_t>(b.nmax, 4))) {
    for (const QuadForm& f : representative_forms(F, n)) {
      const std::string fl = form_label(F, f);
      for (unsigned P = 1; P <= b.pmax; ++P) {
        for (const Poly& r : monic_up_to(R, P)) {
          const auto direct = i_r_direct(R, f, r, P).to_rational();
          const std::string params = fl + " P=" + std::to_string(P) + " r=" + R.to_string(r);
          rec.equal("i_r", params, direct.value_or(Rational(-1)), i_r_closed(R, f, r, P));
        }
      }
    }
  }
}

// brute force where the budget allows, the convolution path otherwise
BigInt oracle_n(const PolyRing& R, const QuadForm& f, unsigned P, const OracleConfig& cfg) {
  try {
    return brute_n(R, f, P, cfg);
  } catch (const BudgetExceeded&) {
    return convolution_count(R, f, P, cfg);
  }
}

void suite_counts(const FieldCtx& F, const VerifyBounds& b, Recorder& rec) {
  const PolyRing R(F);
  for (std::size_t n : n_range(b, 3, b.nmax)) {
    for (const QuadForm& f : representative_forms(F, n)) {
      for (unsigned P = 1; P <= b.pmax; ++P) {
        const std::string params = form_label(F, f) + " P=" + std::to_string(P);
        const BigInt exact = n_exact(F, f, P);
        rec.equal("oracle_vs_exact", params, oracle_n(R, f, P, b.oracle), exact);
        rec.equal("circle_vs_exact", params, n_circle(R, f, P), exact);
        Rational low = 0;
        for (std::size_t rho = 0; rho < P; ++rho) low += circle_stratum(R, f, P, rho);
        rec.equal("low_arcs", params, low, low_arc_sum_closed(F, f, P));
      }
    }
  }
}

void suite_mor(const FieldCtx& F, const VerifyBounds& b, Recorder& rec) {
  const PolyRing R(F);
  for (std::size_t n : n_range(b, 3, b.nmax)) {
    for (const QuadForm& f : representative_forms(F, n)) {
      for (unsigned P = 1; P <= b.pmax; ++P) {
        const std::string params = form_label(F, f) + " P=" + std::to_string(P);
        const BigInt exact = mor_exact(F, f, P);
        rec.equal("mor_vs_counts", params, exact,
                  mor_from_counts(n_exact(F, f, P + 1), n_exact(F, f, P), n_exact_from_zero(F, f, P - 1), F.q()));
        rec.equal("mor_vs_brute", params, exact, brute_mor(R, f, P, b.oracle));
      }
    }
  }
}

void suite_phis(const FieldCtx& F, const VerifyBounds& b, Recorder& rec) {
  const PolyRing R(F);
  const std::uint32_t q = F.q();
  const std::size_t maxdeg = std::max<std::size_t>(b.maxdeg, 1);
  std::vector<BigInt> phi_sum(maxdeg + 1, 0);
  std::vector<int> mu_sum(maxdeg + 1, 0);
  for (std::size_t d = 0; d <= maxdeg; ++d) {
    for (const Poly& r : R.monic_of_degree(d)) {
      const auto fac = R.factorize(r);
      phi_sum[d] += R.euler_phi(r, fac);
      mu_sum[d] += R.moebius(r, fac);
    }
    rec.equal("phi_degree_sum", "rho=" + std::to_string(d), phi_sum[d], phi_degree_sum(q, static_cast<unsigned>(d)));
    const int expected_mu = d == 0 ? 1 : d == 1 ? -static_cast<int>(q) : 0;
    rec.equal("moebius_degree_sum", "rho=" + std::to_string(d), mu_sum[d], expected_mu);
  }
  for (bool alternating : {false, true}) {
    for (std::int64_t c = 1; c <= 4; ++c) {
      Rational acc = 0;
      for (std::size_t M = 0; M <= maxdeg; ++M) {
        const Rational term = Rational(phi_sum[M]) / rpow(BigInt(q), static_cast<std::int64_t>(M) * c);
        acc += (alternating && M % 2 == 1) ? Rational(-term) : term;
        const std::string params = std::string(alternating ? "signed" : "unsigned") + " c=" + std::to_string(c) +
                                   " M=" + std::to_string(M);
        rec.equal("phi_geometric_sum", params, acc, phi_geometric_sum(q, static_cast<unsigned>(M), c, alternating));
      }
    }
  }
}

using Suite = std::function<void(const FieldCtx&, const VerifyBounds&, Recorder&)>;

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table{
      {"gauss", suite_gauss},   {"srf", suite_srf}, {"lemma31", suite_lemma31}, {"lemma32", suite_lemma32},
      {"counts", suite_counts}, {"mor", suite_mor}, {"phis", suite_phis},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& entry : suites()) v.push_back(entry.first);
    return v;
  }();
  return names;
}

std::vector<Check> run_suite(const std::string& suite, const FieldCtx& field, const VerifyBounds& bounds) {
  auto it = suites().find(suite);
  if (it == suites().end()) throw UnknownSuite("unknown verification suite '" + suite + "'");
  std::vector<Check> out;
  Recorder rec(out);
  it->second(field, bounds, rec);
  return out;
}

}  // namespace quadcount::cli
