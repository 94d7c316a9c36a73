#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "bell/model.hpp"

namespace bell {

/// Parameters of the explicit separable model realizing a feasible (m, h, s).
struct ConstructionParams {
  std::size_t n0 = 1;
  std::size_t n = 4;  // 4 * n0
  double y = 1.0 / 12.0;
  double u = 0.0;
  double u_bar = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
};

/// Slack checks plus the parameter derivation. n0 is the smallest positive
/// integer with 1/(4 n0) < 1 - h. Throws InfeasiblePoint naming the first
/// violated slack when (m, h, s) is outside P (tolerance 1e-12).
ConstructionParams construction_params(double m, double h, double s);

struct Realization {
  HiddenInput input;
  ConstructionParams params;
  double delta_m = 0.0;  // measured minus requested
  double delta_h = 0.0;
  double delta_s = 0.0;
};

/// Self-check tolerance on the reproduced measures.
inline constexpr double kRealizeTolerance = 1e-9;

/// Builds the 4 n0 x 4 table and verifies (M, H, S_opt) = (m, h, s) before
/// returning. Throws InfeasiblePoint or SelfCheckFailed.
Realization realize_with_report(double m, double h, double s);
HiddenInput realize(double m, double h, double s);

/// For each lambda, the deterministic strategy whose signed correlators
/// under the pattern (+,+,+,-) are +1 everywhere except at the argmin
/// context (lowest index on ties). Alice's a_0 is fixed to +1.
std::vector<DeterministicStrategy> optimal_strategies(const HiddenInput& input);
SeparableOutput optimal_output(const HiddenInput& input);

/// Argmin context offset of a row, lowest index on ties.
std::size_t argmin_context(std::span<const double, kContexts> row) noexcept;

struct ReductionStage {
  std::string stage;  // "input", "shift", "zero-<k>", "merge"
  double f = 0.0;
  std::size_t n = 0;
  HiddenInput table;
};

struct Reduction {
  HiddenInput reduced;
  std::vector<ReductionStage> trace;
  /// row_order[pos] = original row of the permuted table's row pos.
  std::vector<std::size_t> row_order;
  /// context_order[pos] = original context offset placed at offset pos.
  std::array<std::size_t, kContexts> context_order{0, 1, 2, 3};
};

/// One inductive step n -> n-1 of the positivity argument for F: shift the
/// Gamma-minimum from lambda_1 to lambda_3, zero out a shared context of
/// lambda_1/lambda_2 by the iterative shift, then merge lambda_1 and
/// lambda_2. F is non-increasing along the trace.
/// Throws std::invalid_argument when n < 3.
Reduction reduce(const HiddenInput& input);

}  // namespace bell
