#include "kazhlip/numeric.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include <gmp.h>

namespace kazhlip {

namespace {

unsigned g_output_digits = kDefaultPrecision;

// Ensures the working precision is installed even if set_precision is
// never called.
struct PrecisionInit {
  PrecisionInit() { Real::default_precision(kDefaultPrecision + kGuardDigits); }
} g_precision_init;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

void set_precision(unsigned digits) {
  if (digits < kMinPrecision) {
    throw std::invalid_argument("precision must be at least " + std::to_string(kMinPrecision) +
                                " significant digits");
  }
  g_output_digits = digits;
  Real::default_precision(digits + kGuardDigits);
}

unsigned precision() noexcept { return g_output_digits; }

unsigned precision_from_env() {
  const char* env = std::getenv("KAZHLIP_PRECISION");
  if (env == nullptr || *env == '\0') return kDefaultPrecision;
  std::string_view text = trim(env);
  if (!is_integer_literal(text) || text.front() == '-') {
    throw std::invalid_argument("KAZHLIP_PRECISION must be a positive integer");
  }
  return static_cast<unsigned>(std::stoul(std::string(text)));
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("'" + std::string(text) + "' is not a rational of the form p or p/q");
  }
  std::string num_s(num.front() == '+' ? num.substr(1) : num);
  Rational value;
  mpq_ptr raw = value.backend().data();
  if (mpz_set_str(mpq_numref(raw), num_s.c_str(), 10) != 0 ||
      mpz_set_str(mpq_denref(raw), std::string(den).c_str(), 10) != 0) {
    throw std::invalid_argument("'" + std::string(text) + "' is not a rational of the form p or p/q");
  }
  if (mpz_sgn(mpq_denref(raw)) == 0) {
    throw std::invalid_argument("'" + std::string(text) + "' has a zero denominator");
  }
  mpq_canonicalize(raw);
  return value;
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Real parse_real(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty number");
  // Restrict to plain decimal / scientific notation.
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+' || c == 'e' ||
          c == 'E')) {
      throw std::invalid_argument("'" + std::string(text) + "' is not a decimal number");
    }
  }
  try {
    return Real(std::string(text));
  } catch (const std::exception&) {
    throw std::invalid_argument("'" + std::string(text) + "' is not a decimal number");
  }
}

std::string format_real(const Real& value, unsigned digits) {
  if (value == 0) return "0";
  return value.str(static_cast<std::streamsize>(digits), std::ios_base::fmtflags(0));
}

std::string format_real(const Real& value) { return format_real(value, g_output_digits); }

Real sqrt2() { return boost::multiprecision::sqrt(Real(2)); }

}  // namespace kazhlip
