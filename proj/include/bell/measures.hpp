#pragma once

#include <cstddef>

#include "bell/model.hpp"

namespace bell {

/// <xy> = sum_{a,b} a b p(a,b|x,y).
double correlator(const Behavior& behavior, MeasurementContext c);

/// CHSH value: max over the four one-minus sign patterns of |sum_i c_i <i>|.
double chsh_value(const Behavior& behavior);

/// Signed CHSH sum for the pattern whose single minus sits on context `minus`.
double chsh_pattern_sum(const Behavior& behavior, MeasurementContext minus);

/// M = max_{i,j} sum_lambda |p(lambda|i) - p(lambda|j)|.
double measurement_dependence(const HiddenInput& input);

/// H = 1 - (1/4) max_lambda sum_i p(lambda|i), for unbiased settings.
double hiddenness(const HiddenInput& input);

/// H' = #(Lambda) - 1, counting identically-zero rows.
std::size_t legacy_hiddenness(const HiddenInput& input);

/// Number of rows whose largest entry exceeds 1e-12 (diagnostic only).
std::size_t support_size(const HiddenInput& input);

/// S_opt = 4 - 2 sum_lambda min_i p(lambda|i).
double optimal_chsh(const HiddenInput& input);

struct FTriple {
  double k_tilde = 0.0;
  double m_tilde = 0.0;
  double h_tilde = 0.0;
  double f = 0.0;  // 2 K~ + (3/4) M~ - (1/2) H~
};

FTriple f_functional(const HiddenInput& input);

struct MeasureReport {
  double s_opt = 0.0;
  double m = 0.0;
  double h = 0.0;
  std::size_t h_legacy = 0;
  double k_tilde = 0.0;
  double m_tilde = 0.0;
  double h_tilde = 0.0;
  double f = 0.0;
};

MeasureReport measure(const HiddenInput& input);

}  // namespace bell
