#pragma once

#include <cstdint>
#include <stdexcept>

#include "quadcount/bigint.hpp"
#include "quadcount/expsums.hpp"
#include "quadcount/formulas.hpp"
#include "quadcount/poly.hpp"

namespace quadcount {

/// Work limits for the enumeration oracles.
struct OracleConfig {
  /// Maximum number of tuples a brute-force count may visit.
  std::uint64_t budget = 100'000'000;
  /// Maximum number of dense counters for the convolution path.
  std::uint64_t memory_budget = 1ull << 26;
  /// Worker threads; 0 means hardware concurrency.
  unsigned threads = 0;

  /// Defaults, with the budget overridden by QUADCOUNT_BUDGET if set.
  static OracleConfig from_env();
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SolutionFilter { All, Primitive };

/// Number of x with deg x_i < P and f(x) = 0, by full enumeration. For
/// SolutionFilter::Primitive only tuples with coordinate gcd 1 are counted
/// (the raw count, not divided by q-1).
[[nodiscard]] BigInt brute_count(const PolyRing& ring, const QuadForm& f, unsigned P, SolutionFilter filter,
                                 const OracleConfig& cfg = {});

/// N(P) by enumeration; P = 0 gives 1.
[[nodiscard]] BigInt brute_n(const PolyRing& ring, const QuadForm& f, unsigned P, const OracleConfig& cfg = {});
/// Primitive solutions up to the q-1 unit scalars.
[[nodiscard]] BigInt brute_primitive(const PolyRing& ring, const QuadForm& f, unsigned P, const OracleConfig& cfg = {});
/// Degree P morphism count as the difference of primitive counts at P+1 and P.
[[nodiscard]] BigInt brute_mor(const PolyRing& ring, const QuadForm& f, unsigned P, const OracleConfig& cfg = {});

/// N(P) for x^T G x = 0 with a general symmetric Gram matrix, by enumeration.
[[nodiscard]] BigInt brute_n_gram(const PolyRing& ring, const GramMatrix& gram, unsigned P,
                                  const OracleConfig& cfg = {});

/// N(P) by convolving per-variable histograms of a_i x^2 over the additive
/// group of polynomials of degree < 2P-1.
[[nodiscard]] BigInt convolution_count(const PolyRing& ring, const QuadForm& f, unsigned P,
                                       const OracleConfig& cfg = {});

}  // namespace quadcount
