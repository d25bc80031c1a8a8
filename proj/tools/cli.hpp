#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kazhlip/numeric.hpp"

namespace kazhlip::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kParseError = 2;
inline constexpr int kHypothesisFlag = 3;

// args excludes the program name. Output goes to `out` unless --out is
// given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "1,2,4,...,4096" or "1,2,3"; an ellipsis continues the arithmetic or
// geometric progression of the terms before it and must land exactly on
// the term after it. Throws std::invalid_argument.
std::vector<Rational> parse_schedule(std::string_view text);
std::vector<Real> parse_real_list(std::string_view text);

}  // namespace kazhlip::cli
