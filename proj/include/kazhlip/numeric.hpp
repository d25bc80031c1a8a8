#pragma once

// Scalar substrate. Breakpoints, slopes and displacements are exact
// rationals (GMP); values of test vectors and everything transcendental
// are MPFR floats at a process-wide working precision.

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace kazhlip {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

// Significant decimal digits used for emitted decimals.
inline constexpr unsigned kDefaultPrecision = 15;
inline constexpr unsigned kMinPrecision = 15;
// Working precision carries this many digits beyond the output precision.
inline constexpr unsigned kGuardDigits = 10;

// Sets output precision (and working precision = digits + guard digits).
// Not thread safe: call before any parallel region starts.
void set_precision(unsigned digits);
unsigned precision() noexcept;

// Reads KAZHLIP_PRECISION if set, otherwise kDefaultPrecision.
unsigned precision_from_env();

// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace; the
// result is canonical. Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

inline Real to_real(const Rational& value) { return Real(value); }

// Decimal literal or "inf"-free scientific notation.
Real parse_real(std::string_view text);

// General-format decimal with `digits` significant digits.
std::string format_real(const Real& value, unsigned digits);
std::string format_real(const Real& value);

Real sqrt2();

}  // namespace kazhlip
