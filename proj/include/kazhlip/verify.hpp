#pragma once

// Seeded property suites behind `kazhlip verify`. Cases are drawn
// sequentially from one RandomSource and then checked in parallel, so the
// report does not depend on the thread count.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kazhlip/numeric.hpp"
#include "kazhlip/parallel.hpp"

namespace kazhlip {

enum class Suite { group_axioms, koopman, mazur, lemmas, all };

// "group-axioms", "koopman", "mazur", "lemmas", "all".
Suite parse_suite(std::string_view name);

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  // Smallest margin by which a case satisfied its inequality (negative on
  // failure); empty for exact identities.
  std::optional<Real> worst_slack;
  std::string note;
};

struct SuiteReport {
  std::vector<PropertyResult> properties;

  bool passed() const;
  std::string to_text() const;
};

struct VerifyOptions {
  std::uint64_t seed = 0x5eed2024;
  std::size_t cases = 1000;
  std::size_t lemma_cases = 10000;
  Execution exec = Execution::parallel;
};

SuiteReport run_verify(Suite suite, const VerifyOptions& options = {});

// Individual suites, also used by the acceptance tests.
SuiteReport verify_group_axioms(const VerifyOptions& options);
SuiteReport verify_koopman(const VerifyOptions& options);
SuiteReport verify_mazur(const VerifyOptions& options);
SuiteReport verify_lemmas(const VerifyOptions& options);

}  // namespace kazhlip
