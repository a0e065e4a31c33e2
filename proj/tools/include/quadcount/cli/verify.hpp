#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadcount/field.hpp"
#include "quadcount/oracle.hpp"

namespace quadcount::cli {

struct VerifyBounds {
  std::size_t maxdeg = 2;
  unsigned maxk = 3;
  std::size_t nmax = 4;
  unsigned pmax = 2;
  std::size_t n = 0;  // 0: the suite's default range of n
  OracleConfig oracle;
};

/// One identity instance.
struct Check {
  std::string name;
  std::string params;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

class UnknownSuite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

[[nodiscard]] const std::vector<std::string>& suite_names();

/// Runs every instance of the named suite over F.
[[nodiscard]] std::vector<Check> run_suite(const std::string& suite, const FieldCtx& field, const VerifyBounds& bounds);

}  // namespace quadcount::cli
