#include "quadcount/formulas.hpp"

#include <map>

namespace quadcount {

namespace {

BigInt require_integer(const Rational& v, const char* what) {
  auto n = to_integer(v);
  if (!n) throw std::logic_error(std::string(what) + ": closed form produced the non-integer " + v.str());
  return *n;
}

// Exact powers of q as rationals.
struct Pow {
  BigInt q;
  Rational operator()(std::int64_t e) const { return rpow(q, e); }
};

Rational sign(unsigned P) { return P % 2 == 0 ? Rational(1) : Rational(-1); }

void require_closed_form_range(const QuadForm& f, const char* what) {
  if (f.n() < 3) throw UnsupportedRange(std::string(what) + ": closed forms need n >= 3");
}

}  // namespace

CaseTag classify(const FieldCtx& field, const QuadForm& f) {
  if (f.n() % 2 == 1) return CaseTag::Odd;
  FqElem d = f.det(field);
  if ((f.n() / 2) % 2 == 1) d = field.neg(d);
  return field.is_square_unit(d) ? CaseTag::SplitEven : CaseTag::NonSplitEven;
}

std::vector<QuadForm> representative_forms(const FieldCtx& field, std::size_t n) {
  if (n == 0) throw std::invalid_argument("representative_forms: n must be positive");
  std::vector<FqElem> ones(n, field.one());
  if (n % 2 == 1) return {QuadForm(ones)};
  FqElem nonsquare = field.one();
  for (const FqElem a : field.elements()) {
    if (!a.is_zero() && !field.is_square_unit(a)) {
      nonsquare = a;
      break;
    }
  }
  std::vector<FqElem> twisted = ones;
  twisted.back() = nonsquare;
  QuadForm a(ones);
  QuadForm b(twisted);
  if (classify(field, a) == CaseTag::SplitEven) return {a, b};
  return {b, a};
}

Diagonalization diagonalize(const FieldCtx& F, const GramMatrix& gram) {
  const std::size_t n = gram.size();
  if (n == 0) throw std::invalid_argument("diagonalize: empty matrix");
  for (const auto& row : gram) {
    if (row.size() != n) throw std::invalid_argument("diagonalize: matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gram[i][j] != gram[j][i]) throw std::invalid_argument("diagonalize: matrix is not symmetric");
    }
  }
  GramMatrix A = gram;
  GramMatrix S(n, std::vector<FqElem>(n, F.zero()));
  for (std::size_t i = 0; i < n; ++i) S[i][i] = F.one();

  // Replace basis vector j by e_j + c e_k (columns of S), updating A = S^T G S.
  auto add_multiple = [&](std::size_t j, std::size_t k, FqElem c) {
    for (std::size_t i = 0; i < n; ++i) S[i][j] = F.add(S[i][j], F.mul(c, S[i][k]));
    for (std::size_t i = 0; i < n; ++i) A[i][j] = F.add(A[i][j], F.mul(c, A[i][k]));
    for (std::size_t i = 0; i < n; ++i) A[j][i] = F.add(A[j][i], F.mul(c, A[k][i]));
  };
  auto swap_basis = [&](std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < n; ++i) std::swap(S[i][j], S[i][k]);
    std::swap(A[j], A[k]);
    for (std::size_t i = 0; i < n; ++i) std::swap(A[i][j], A[i][k]);
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (A[k][k].is_zero()) {
      std::size_t j = k + 1;
      while (j < n && A[j][j].is_zero()) ++j;
      if (j < n) {
        swap_basis(k, j);
      } else {
        j = k + 1;
        while (j < n && A[k][j].is_zero()) ++j;
        if (j == n) throw std::invalid_argument("diagonalize: degenerate form");
        // A[k][k] becomes 2 A[k][j] != 0 since the characteristic is odd.
        add_multiple(k, j, F.one());
      }
    }
    const FqElem pivot_inv = F.inv(A[k][k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (A[i][k].is_zero()) continue;
      add_multiple(i, k, F.neg(F.mul(A[i][k], pivot_inv)));
    }
  }
  std::vector<FqElem> diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    diag[i] = A[i][i];
    if (diag[i].is_zero()) throw std::invalid_argument("diagonalize: degenerate form");
  }
  return Diagonalization{QuadForm(std::move(diag)), std::move(S)};
}

BigInt phi_degree_sum(std::uint32_t q, unsigned rho) {
  if (rho == 0) return 1;
  return BigInt(q - 1) * ipow(BigInt(q), 2 * rho - 1);
}

Rational phi_geometric_sum(std::uint32_t q, unsigned M, std::int64_t c, bool alternating) {
  const Pow Q{BigInt(q)};
  const Rational qm1(q - 1);
  const auto m = static_cast<std::int64_t>(M);
  if (!alternating) {
    if (c == 2) return 1 + qm1 * m / Rational(q);
    const Rational den = 1 - Q(2 - c);
    return (1 - Q(1 - c)) / den - qm1 * Q(1 - c) * Q(m * (2 - c)) / den;
  }
  if (c == 2) return M % 2 == 0 ? Rational(1) : Rational(1) / Rational(q);
  const Rational den = 1 + Q(2 - c);
  return (1 + Q(1 - c)) / den + sign(M) * qm1 * Q(1 - c) * Q(m * (2 - c)) / den;
}

BigInt n_exact(const FieldCtx& field, const QuadForm& f, unsigned P) {
  require_closed_form_range(f, "n_exact");
  if (P == 0) throw std::invalid_argument("n_exact: P must be at least 1");
  const Pow Q{BigInt(field.q())};
  const Rational q(field.q());
  const auto n = static_cast<std::int64_t>(f.n());
  const auto p = static_cast<std::int64_t>(P);
  Rational v;
  switch (classify(field, f)) {
    case CaseTag::SplitEven: {
      if (n == 4) {
        v = (q * q - 1) / q * p * Q(2 * p) + Q(2 * p);
      } else {
        const std::int64_t h = n / 2;
        const Rational den = Q(h - 1) - q;
        v = (Q(h) - 1) / den * Q(p * (n - 2)) - (q - 1) * (Q(h - 1) + 1) / den * Q(h * p);
      }
      break;
    }
    case CaseTag::NonSplitEven: {
      if (n == 4) {
        v = P % 2 == 0 ? Q(2 * p) : (q * q - q + 1) / q * Q(2 * p);
      } else {
        const std::int64_t h = n / 2;
        const Rational den = Q(h - 1) + q;
        v = (Q(h) + 1) / den * Q(p * (n - 2)) - sign(P) * (q - 1) * (Q(h - 1) - 1) / den * Q(h * p);
      }
      break;
    }
    case CaseTag::Odd: {
      if (n == 3) {
        const Rational lead = (q * q - 1) / (2 * q) * p * Q(p);
        v = P % 2 == 0 ? lead + Q(p) : lead + (q * q + 1) / (2 * q) * Q(p);
      } else {
        const Rational den = Q(n - 2) - q;
        const Rational main = (Q(n - 1) - 1) / den * Q(p * (n - 2));
        const Rational tail = Q((n - 1) * p / 2);
        if (P % 2 == 0) {
          v = main - (q - 1) * (Q(n - 2) + 1) / den * tail;
        } else {
          v = main - (q * q - 1) * Q((n - 3) / 2) / den * tail;
        }
      }
      break;
    }
  }
  return require_integer(v, "n_exact");
}

BigInt n_exact_from_zero(const FieldCtx& field, const QuadForm& f, unsigned P) {
  if (P == 0) {
    require_closed_form_range(f, "n_exact");
    return 1;
  }
  return n_exact(field, f, P);
}

Rational circle_stratum(const PolyRing& ring, const QuadForm& f, unsigned P, std::size_t rho) {
  if (rho > P) throw std::invalid_argument("circle_stratum: rho must not exceed P");
  BigInt s_total = 0;
  for (const Poly& r : ring.monic_of_degree(rho)) s_total += s_r_form_closed(ring, f, r);
  const Rational integral = i_r_closed_by_degree(ring, f, rho, P);
  return Rational(s_total) * integral / Rational(ipow(BigInt(ring.q()), rho * f.n()));
}

BigInt n_circle(const PolyRing& ring, const QuadForm& f, unsigned P) {
  if (P == 0) return 1;
  Rational total = 0;
  for (std::size_t rho = 0; rho <= P; ++rho) total += circle_stratum(ring, f, P, rho);
  return require_integer(total, "n_circle");
}

BigInt primitive_from_counts(const BigInt& n_P, const BigInt& n_Pm1, std::uint32_t q) {
  const BigInt num = n_P - BigInt(q) * n_Pm1;
  if (num % (q - 1) != 0) throw std::invalid_argument("primitive_from_counts: inconsistent counts");
  return num / (q - 1) + 1;
}

BigInt n_primitive(const PolyRing& ring, const QuadForm& f, unsigned P) {
  if (P == 0) throw std::invalid_argument("n_primitive: P must be at least 1");
  const FieldCtx& F = ring.field();
  if (f.n() >= 3) return primitive_from_counts(n_exact(F, f, P), n_exact_from_zero(F, f, P - 1), F.q());
  return primitive_from_counts(n_circle(ring, f, P), n_circle(ring, f, P - 1), F.q());
}

BigInt mor_from_counts(const BigInt& n_plus, const BigInt& n_0, const BigInt& n_minus, std::uint32_t q) {
  const BigInt num = n_plus - BigInt(q + 1) * n_0 + BigInt(q) * n_minus;
  if (num % (q - 1) != 0) throw std::invalid_argument("mor_from_counts: numerator not divisible by q-1");
  BigInt v = num / (q - 1);
  if (v < 0) throw std::invalid_argument("mor_from_counts: negative morphism count");
  return v;
}

BigInt mor_exact(const FieldCtx& field, const QuadForm& f, unsigned P) {
  require_closed_form_range(f, "mor_exact");
  if (P == 0) throw std::invalid_argument("mor_exact: P must be at least 1");
  const Pow Q{BigInt(field.q())};
  const Rational q(field.q());
  const auto n = static_cast<std::int64_t>(f.n());
  const auto p = static_cast<std::int64_t>(P);
  Rational v;
  switch (classify(field, f)) {
    case CaseTag::SplitEven: {
      if (n == 4) {
        v = (q * q - 1) * (q * q - 1) / (q * q) * p * Q(2 * p) + (q * q - 1) * (q + 1) * (q + 1) / (q * q) * Q(2 * p);
      } else {
        const std::int64_t h = n / 2;
        v = (Q(h) - 1) * (Q(n - 2) - 1) * (Q(n - 3) - 1) / (Q(n - 2) * (Q(h - 2) - 1) * (q - 1)) * Q(p * (n - 2)) -
            (Q(n - 2) - 1) * (Q(h) - 1) / (Q(h) * (Q(h - 2) - 1)) * Q(h * p);
      }
      break;
    }
    case CaseTag::NonSplitEven: {
      if (n == 4) {
        v = P % 2 == 0 ? (Q(4) - 1) / (q * q) * Q(2 * p) : Rational(0);
      } else {
        const std::int64_t h = n / 2;
        v = (Q(h) + 1) * (Q(n - 2) - 1) * (Q(n - 3) - 1) / (Q(n - 2) * (Q(h - 2) + 1) * (q - 1)) * Q(p * (n - 2)) +
            sign(P) * (Q(n - 2) - 1) * (Q(h) + 1) / (Q(h) * (Q(h - 2) + 1)) * Q(h * p);
      }
      break;
    }
    case CaseTag::Odd: {
      if (n == 3) {
        v = P % 2 == 0 ? (q * q - 1) / q * Q(p) : Rational(0);
      } else {
        v = (Q(n - 1) - 1) * (Q(n - 2) - 1) / (Q(n - 2) * (q - 1)) * Q(p * (n - 2));
        if (P % 2 == 1) v -= (Q(n - 1) - 1) / Q((n - 1) / 2) * Q((n - 1) * p / 2);
      }
      break;
    }
  }
  const BigInt out = require_integer(v, "mor_exact");
  if (out < 0) throw std::logic_error("mor_exact: negative count");
  return out;
}

Rational low_arc_sum_closed(const FieldCtx& field, const QuadForm& f, unsigned P) {
  require_closed_form_range(f, "low_arc_sum_closed");
  if (P == 0) throw std::invalid_argument("low_arc_sum_closed: P must be at least 1");
  const Pow Q{BigInt(field.q())};
  const Rational q(field.q());
  const auto n = static_cast<std::int64_t>(f.n());
  const auto p = static_cast<std::int64_t>(P);
  switch (classify(field, f)) {
    case CaseTag::SplitEven: {
      if (n == 4) return (q * q - 1) / q * p * Q(2 * p) + Q(2 * p) / q;
      const std::int64_t h = n / 2;
      return (Q(h) - 1) / (Q(h - 1) - q) * Q(p * (n - 2)) - (q * q - 1) / (q * (1 - Q(2 - h))) * Q(h * p);
    }
    case CaseTag::NonSplitEven: {
      if (n == 4) return P % 2 == 0 ? Q(2 * p - 1) : Q(2 * p + 1);
      const std::int64_t h = n / 2;
      return (Q(h) + 1) / (Q(h - 1) + q) * Q(p * (n - 2)) -
             sign(P) * (q * q - 1) / (q * (1 + Q(2 - h))) * Q(h * p);
    }
    case CaseTag::Odd: {
      if (n == 3) {
        const Rational lead = (q * q - 1) / (2 * q) * p * Q(p);
        return P % 2 == 0 ? lead + Q(p) / q : lead + (q * q + 1) / (2 * q) * Q(p);
      }
      const Rational main = (q - Q(2 - n)) / (1 - Q(3 - n)) * Q(p * (n - 2));
      const Rational den = Q(n - 2) - q;
      const Rational tail = Q((n - 1) * p / 2);
      if (P % 2 == 0) return main - (q * q - 1) * Q(n - 3) / den * tail;
      return main - (q * q - 1) * Q((n - 3) / 2) / den * tail;
    }
  }
  return 0;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::ExactFormula: return "exact_formula";
    case Method::CircleReassembly: return "circle_reassembly";
    case Method::BruteForce: return "brute_force";
    case Method::Convolution: return "convolution";
  }
  return "?";
}

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::N: return "N";
    case Quantity::Primitive: return "primitive";
    case Quantity::Mor: return "mor";
  }
  return "?";
}

}  // namespace quadcount
