#include <algorithm>
#include <array>
#include <cmath>

#include "bell/context.hpp"
#include "bell/kernels.hpp"

namespace bell::kernels::scalar {

TableStats table_stats(std::span<const double> table) noexcept {
  TableStats out;
  const std::size_t n = table.size() / kContexts;
  if (n == 0) return out;

  // Context pairs (0,1) (1,2) (2,3) (3,0) (0,2) (1,3): the lane order the
  // vector variant produces.
  std::array<double, 6> pair_sums{};
  double k = 0.0;
  double h = -1.0;
  for (std::size_t l = 0; l < n; ++l) {
    const double* r = table.data() + l * kContexts;
    const double r0 = r[0], r1 = r[1], r2 = r[2], r3 = r[3];
    k += std::min(std::min(r0, r1), std::min(r2, r3));
    h = std::max(h, (r0 + r1) + (r2 + r3));
    pair_sums[0] += std::abs(r0 - r1);
    pair_sums[1] += std::abs(r1 - r2);
    pair_sums[2] += std::abs(r2 - r3);
    pair_sums[3] += std::abs(r3 - r0);
    pair_sums[4] += std::abs(r0 - r2);
    pair_sums[5] += std::abs(r1 - r3);
  }
  out.k_tilde = k;
  out.h_tilde = h;
  out.m_tilde = *std::max_element(pair_sums.begin(), pair_sums.end());
  return out;
}

}  // namespace bell::kernels::scalar
