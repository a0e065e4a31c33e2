#include "quadcount/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

namespace quadcount {

OracleConfig OracleConfig::from_env() {
  OracleConfig cfg;
  if (const char* env = std::getenv("QUADCOUNT_BUDGET"); env != nullptr && *env != '\0') {
    try {
      cfg.budget = std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("QUADCOUNT_BUDGET is not a non-negative integer: ") + env);
    }
  }
  return cfg;
}

namespace {

__extension__ typedef unsigned __int128 u128;

BigInt to_bigint(u128 v) {
  BigInt out = static_cast<std::uint64_t>(v >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(v);
  return out;
}

// q^e, or nullopt once it exceeds limit.
std::optional<std::uint64_t> bounded_pow(std::uint64_t q, std::uint64_t e, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (v > limit / q) return std::nullopt;
    v *= q;
  }
  return v;
}

unsigned worker_count(const OracleConfig& cfg, std::uint64_t work_items) {
  unsigned t = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(t, std::max<std::uint64_t>(work_items, 1)));
}

// The additive group F_q[t]_{<len}, elements packed as sum c_i q^i.
class ValueGroup {
 public:
  ValueGroup(const FieldCtx& field, std::size_t len) : field_(field), len_(len), size_(1) {
    for (std::size_t i = 0; i < len; ++i) {
      if (size_ > (1ull << 40) / field.q()) throw BudgetExceeded("value group too large to index");
      size_ *= field.q();
    }
  }

  [[nodiscard]] std::uint64_t size() const noexcept { return size_; }
  [[nodiscard]] std::size_t len() const noexcept { return len_; }

  [[nodiscard]] std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint32_t q = field_.q();
    std::uint64_t out = 0;
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < len_; ++i) {
      const auto s = field_.add(FqElem{static_cast<std::uint32_t>(a % q)}, FqElem{static_cast<std::uint32_t>(b % q)});
      out += s.index() * scale;
      a /= q;
      b /= q;
      scale *= q;
    }
    return out;
  }

  [[nodiscard]] std::uint64_t neg(std::uint64_t a) const noexcept {
    const std::uint32_t q = field_.q();
    std::uint64_t out = 0;
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < len_; ++i) {
      out += field_.neg(FqElem{static_cast<std::uint32_t>(a % q)}).index() * scale;
      a /= q;
      scale *= q;
    }
    return out;
  }

 private:
  const FieldCtx& field_;
  std::size_t len_;
  std::uint64_t size_;
};

// Shared read-only data for one enumeration.
struct Enumeration {
  const PolyRing& ring;
  const ValueGroup& group;
  std::size_t n;
  std::uint64_t per_coord;                       // q^P
  std::vector<std::vector<std::uint32_t>> vals;  // vals[i][x] = packed a_i x^2
  std::vector<Poly> polys;                       // x by index, for gcd tracking
  bool primitive;
};

bool is_unit(const Poly& g) { return !g.is_zero() && g.is_constant(); }

Poly gcd_step(const PolyRing& ring, const Poly& g, const Poly& x) {
  if (is_unit(g)) return g;
  if (g.is_zero()) return ring.monic(x);
  if (x.is_zero()) return g;
  return ring.gcd(g, x);
}

std::uint64_t count_leaf(const Enumeration& e, std::uint64_t partial, const Poly& g) {
  const std::uint32_t target = static_cast<std::uint32_t>(e.group.neg(partial));
  const auto& last = e.vals[e.n - 1];
  std::uint64_t hits = 0;
  if (!e.primitive || is_unit(g)) {
    for (std::uint64_t x = 0; x < e.per_coord; ++x) hits += (last[x] == target);
    return hits;
  }
  for (std::uint64_t x = 0; x < e.per_coord; ++x) {
    if (last[x] != target) continue;
    if (is_unit(gcd_step(e.ring, g, e.polys[x]))) ++hits;
  }
  return hits;
}

std::uint64_t count_from(const Enumeration& e, std::size_t level, std::uint64_t partial, const Poly& g) {
  if (level + 1 == e.n) return count_leaf(e, partial, g);
  std::uint64_t total = 0;
  for (std::uint64_t x = 0; x < e.per_coord; ++x) {
    const std::uint64_t next = e.group.add(partial, e.vals[level][x]);
    if (e.primitive) {
      total += count_from(e, level + 1, next, gcd_step(e.ring, g, e.polys[x]));
    } else {
      total += count_from(e, level + 1, next, g);
    }
  }
  return total;
}

std::uint64_t value_index(const PolyRing& ring, const Poly& v, std::size_t len) { return ring.index_of(v, len); }

}  // namespace

BigInt brute_count(const PolyRing& ring, const QuadForm& f, unsigned P, SolutionFilter filter,
                   const OracleConfig& cfg) {
  const bool primitive = filter == SolutionFilter::Primitive;
  if (P == 0) return primitive ? 0 : 1;
  const std::uint64_t q = ring.q();
  const std::size_t n = f.n();
  if (!bounded_pow(q, static_cast<std::uint64_t>(n) * P, cfg.budget)) {
    throw BudgetExceeded("brute force needs q^(nP) = " + ipow(BigInt(q), n * P).str() +
                         " evaluations, above the budget of " + std::to_string(cfg.budget) +
                         "; raise --budget or use the convolution method");
  }
  const ValueGroup group(ring.field(), 2 * P - 1);
  if (group.size() > (1ull << 32)) throw BudgetExceeded("value group too large for packed 32-bit values");
  const std::uint64_t per_coord = *bounded_pow(q, P, cfg.budget);

  Enumeration e{ring, group, n, per_coord, {}, {}, primitive};
  e.polys.reserve(per_coord);
  for (std::uint64_t x = 0; x < per_coord; ++x) e.polys.push_back(ring.from_index(x, P, false));
  e.vals.assign(n, std::vector<std::uint32_t>(per_coord));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint64_t x = 0; x < per_coord; ++x) {
      const Poly v = ring.scale(ring.mul(e.polys[x], e.polys[x]), f.coeffs()[i]);
      e.vals[i][x] = static_cast<std::uint32_t>(value_index(ring, v, group.len()));
    }
  }

  if (n == 1) return count_leaf(e, 0, Poly{});

  // Parallel split over the first coordinate; each worker takes a strided share.
  const unsigned workers = worker_count(cfg, per_coord);
  std::vector<std::uint64_t> partial_counts(workers, 0);
  auto work = [&](unsigned w) {
    std::uint64_t acc = 0;
    for (std::uint64_t x = w; x < per_coord; x += workers) {
      const Poly g = primitive ? gcd_step(ring, Poly{}, e.polys[x]) : Poly{};
      acc += count_from(e, 1, e.vals[0][x], g);
    }
    partial_counts[w] = acc;
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  BigInt total = 0;
  for (auto c : partial_counts) total += c;
  return total;
}

BigInt brute_n(const PolyRing& ring, const QuadForm& f, unsigned P, const OracleConfig& cfg) {
  return brute_count(ring, f, P, SolutionFilter::All, cfg);
}

BigInt brute_primitive(const PolyRing& ring, const QuadForm& f, unsigned P, const OracleConfig& cfg) {
  if (P == 0) throw std::invalid_argument("brute_primitive: P must be at least 1");
  const BigInt raw = brute_count(ring, f, P, SolutionFilter::Primitive, cfg);
  const BigInt units(ring.q() - 1);
  if (raw % units != 0) throw std::logic_error("primitive solution count not divisible by q-1");
  return raw / units;
}

BigInt brute_mor(const PolyRing& ring, const QuadForm& f, unsigned P, const OracleConfig& cfg) {
  if (P == 0) throw std::invalid_argument("brute_mor: P must be at least 1");
  return brute_primitive(ring, f, P + 1, cfg) - brute_primitive(ring, f, P, cfg);
}

BigInt brute_n_gram(const PolyRing& ring, const GramMatrix& gram, unsigned P, const OracleConfig& cfg) {
  const std::size_t n = gram.size();
  if (n == 0) throw std::invalid_argument("brute_n_gram: empty matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) throw std::invalid_argument("brute_n_gram: matrix is not square");
    for (std::size_t j = 0; j < i; ++j) {
      if (gram[i][j] != gram[j][i]) throw std::invalid_argument("brute_n_gram: matrix is not symmetric");
    }
  }
  if (P == 0) return 1;
  const std::uint64_t q = ring.q();
  if (!bounded_pow(q, static_cast<std::uint64_t>(n) * P, cfg.budget)) {
    throw BudgetExceeded("brute_n_gram: q^(nP) exceeds the budget of " + std::to_string(cfg.budget));
  }
  const FieldCtx& F = ring.field();
  const std::uint64_t per_coord = *bounded_pow(q, P, cfg.budget);
  std::vector<Poly> domain;
  for (std::uint64_t x = 0; x < per_coord; ++x) domain.push_back(ring.from_index(x, P, false));

  std::vector<std::size_t> idx(n, 0);
  std::uint64_t count = 0;
  while (true) {
    Poly acc;
    for (std::size_t i = 0; i < n; ++i) {
      const Poly& xi = domain[idx[i]];
      if (xi.is_zero()) continue;
      for (std::size_t j = i; j < n; ++j) {
        if (gram[i][j].is_zero()) continue;
        const FqElem c = i == j ? gram[i][j] : F.add(gram[i][j], gram[i][j]);
        acc = ring.add(acc, ring.scale(ring.mul(xi, domain[idx[j]]), c));
      }
    }
    if (acc.is_zero()) ++count;
    std::size_t level = n;
    while (level > 0) {
      --level;
      if (++idx[level] < per_coord) break;
      idx[level] = 0;
      if (level == 0) return count;
    }
  }
}

BigInt convolution_count(const PolyRing& ring, const QuadForm& f, unsigned P, const OracleConfig& cfg) {
  if (P == 0) return 1;
  const std::uint64_t q = ring.q();
  const std::size_t n = f.n();
  const ValueGroup group(ring.field(), 2 * P - 1);
  if (group.size() > cfg.memory_budget) {
    throw BudgetExceeded("convolution needs " + std::to_string(group.size()) + " counters, above the memory budget of " +
                         std::to_string(cfg.memory_budget));
  }
  // Counts are bounded by q^{nP}; stay well inside 128 bits.
  if (static_cast<double>(n * P) * std::log2(static_cast<double>(q)) > 120.0) {
    throw BudgetExceeded("convolution counts would overflow 128-bit counters");
  }
  const std::uint64_t G = group.size();
  const auto per_coord = *bounded_pow(q, P, G);

  // Sparse histogram of a_i x^2 for each variable.
  std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> hist(n);
  {
    std::vector<Poly> squares;
    squares.reserve(per_coord);
    for (std::uint64_t x = 0; x < per_coord; ++x) {
      const Poly p = ring.from_index(x, P, false);
      squares.push_back(ring.mul(p, p));
    }
    std::vector<std::uint64_t> dense(G);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(dense.begin(), dense.end(), 0);
      for (const Poly& s : squares) ++dense[value_index(ring, ring.scale(s, f.coeffs()[i]), group.len())];
      for (std::uint64_t v = 0; v < G; ++v) {
        if (dense[v] != 0) hist[i].emplace_back(v, dense[v]);
      }
    }
  }

  std::vector<u128> cur(G, 0);
  for (auto [v, c] : hist[0]) cur[v] = c;
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<u128> next(G, 0);
    for (std::uint64_t u = 0; u < G; ++u) {
      if (cur[u] == 0) continue;
      for (auto [v, c] : hist[i]) next[group.add(u, v)] += cur[u] * c;
    }
    cur.swap(next);
  }
  return to_bigint(cur[0]);
}

}  // namespace quadcount
