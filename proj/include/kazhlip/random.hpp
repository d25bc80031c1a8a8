#pragma once

#include <cstdint>
#include <random>

#include "kazhlip/koopman.hpp"
#include "kazhlip/plmap.hpp"

namespace kazhlip {

// Seeded generator of random maps and test vectors for property checks.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  // num / den with |num| <= max_num, 1 <= den <= max_den.
  Rational rational(std::int64_t max_num = 1000, std::int64_t max_den = 1000);
  // Positive rational num / den with 1 <= num <= max_num.
  Rational positive_rational(std::int64_t max_num = 1000, std::int64_t max_den = 1000);
  // Uniform on [lo, hi] with 2^-53 resolution, exact in Real.
  Real real(const Real& lo, const Real& hi);

  // Between 1 and max_nodes nodes, coordinates from rational().
  PLHomeo plhomeo(std::size_t max_nodes = 8, std::int64_t max_num = 1000, std::int64_t max_den = 1000);

  // Compactly supported map: identity outside [a, b], 1 to max_interior
  // random interior nodes.
  PLHomeo bump(std::size_t max_interior = 4, std::int64_t max_num = 1000, std::int64_t max_den = 1000);

  // Between 1 and max_pieces pieces with breakpoints from rational() and
  // values in [-2, 2].
  StepFunction step_function(std::size_t max_pieces = 6, std::int64_t max_num = 1000, std::int64_t max_den = 1000);
  StepFunction unit_step_function(const Exponent& p, std::size_t max_pieces = 6, std::int64_t max_num = 1000,
                                  std::int64_t max_den = 1000);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::vector<Rational> distinct_sorted(std::size_t count, std::int64_t max_num, std::int64_t max_den);

  std::mt19937_64 engine_;
};

}  // namespace kazhlip
