#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bell/model.hpp"

namespace bell {

struct FuzzConfig {
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::size_t max_lambdas = 6;
  std::size_t min_lambdas = 1;
  double tolerance = 1e-9;
  unsigned threads = 1;
};

struct Counterexample {
  std::size_t trial = 0;
  std::uint64_t seed = 0;  // sample_input seed of the failing table
  std::string check;
  HiddenInput input;
  double detail = 0.0;  // the offending slack or delta
};

struct FuzzReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t max_lambdas = 0;
  std::map<std::string, std::size_t> evaluated;  // check -> number of trials run
  std::vector<Counterexample> failures;          // sorted by trial, then check

  bool ok() const noexcept { return failures.empty(); }
};

/// Names of the invariant suites, in report order.
const std::vector<std::string>& fuzz_checks();

/// Trial t draws n uniformly from [min_lambdas, max_lambdas] and the table
/// from sample_input(n, derive_seed(seed, t)). Checks: theorem1 (F >= -tol),
/// hm, theorem2, cardinality, oracle (|brute force - S_opt| <= 1e-12),
/// attainability (compose with optimal output, 1e-9), reduce (n >= 3,
/// non-increasing within 1e-12), kernel (scalar and dispatched stats equal).
/// Results do not depend on the thread count.
/// Throws std::invalid_argument on trials == 0 or an empty n range.
FuzzReport run_fuzz(const FuzzConfig& config);

}  // namespace bell
