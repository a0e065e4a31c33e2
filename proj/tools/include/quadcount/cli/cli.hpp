#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadcount/field.hpp"
#include "quadcount/formulas.hpp"

namespace quadcount::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kBudget = 3 };

/// A field element: a bare integer (reduced into the prime field) or a
/// bracketed coordinate tuple such as "[1 2]".
[[nodiscard]] FqElem parse_element(const FieldCtx& field, std::string_view text);
/// Comma separated elements; commas inside brackets do not split.
[[nodiscard]] std::vector<FqElem> parse_element_list(const FieldCtx& field, std::string_view text);
/// Rows separated by ';', entries by ','.
[[nodiscard]] GramMatrix parse_gram(const FieldCtx& field, std::string_view text);
/// "a..b" inclusive; b < a is the empty range.
[[nodiscard]] std::pair<unsigned, unsigned> parse_p_range(std::string_view text);

/// Runs the qcount command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadcount::cli
