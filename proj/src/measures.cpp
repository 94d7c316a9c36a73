#include "bell/measures.hpp"

#include <algorithm>
#include <cmath>

#include "bell/kernels.hpp"

namespace bell {

double correlator(const Behavior& behavior, MeasurementContext c) {
  const auto& d = behavior[c];
  double sum = 0.0;
  for (std::size_t k = 0; k < 4; ++k) sum += kOutcomePairs[k][0] * kOutcomePairs[k][1] * d[k];
  return sum;
}

double chsh_pattern_sum(const Behavior& behavior, MeasurementContext minus) {
  double sum = 0.0;
  for (const auto c : all_contexts()) sum += (c == minus ? -1.0 : 1.0) * correlator(behavior, c);
  return sum;
}

double chsh_value(const Behavior& behavior) {
  double best = 0.0;
  for (const auto c : all_contexts()) best = std::max(best, std::abs(chsh_pattern_sum(behavior, c)));
  return best;
}

double measurement_dependence(const HiddenInput& input) { return kernels::table_stats(input.flat()).m_tilde; }

double hiddenness(const HiddenInput& input) { return 1.0 - kernels::table_stats(input.flat()).h_tilde / 4.0; }

std::size_t legacy_hiddenness(const HiddenInput& input) { return input.size() - 1; }

std::size_t support_size(const HiddenInput& input) {
  std::size_t count = 0;
  for (std::size_t l = 0; l < input.size(); ++l) {
    const auto r = input.row(l);
    if (*std::max_element(r.begin(), r.end()) > 1e-12) ++count;
  }
  return count;
}

double optimal_chsh(const HiddenInput& input) { return 4.0 - 2.0 * kernels::table_stats(input.flat()).k_tilde; }

FTriple f_functional(const HiddenInput& input) {
  const auto st = kernels::table_stats(input.flat());
  return {st.k_tilde, st.m_tilde, st.h_tilde, 2.0 * st.k_tilde + 0.75 * st.m_tilde - 0.5 * st.h_tilde};
}

MeasureReport measure(const HiddenInput& input) {
  const auto ft = f_functional(input);
  MeasureReport r;
  r.s_opt = 4.0 - 2.0 * ft.k_tilde;
  r.m = ft.m_tilde;
  r.h = 1.0 - ft.h_tilde / 4.0;
  r.h_legacy = legacy_hiddenness(input);
  r.k_tilde = ft.k_tilde;
  r.m_tilde = ft.m_tilde;
  r.h_tilde = ft.h_tilde;
  r.f = ft.f;
  return r;
}

}  // namespace bell
