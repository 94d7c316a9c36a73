// Compiled with -mavx2 only; nothing here may run before avx2::available().

#include <immintrin.h>

#include <algorithm>

#include "bell/context.hpp"
#include "bell/kernels.hpp"

namespace bell::kernels::avx2 {

bool available() noexcept { return __builtin_cpu_supports("avx2"); }

TableStats table_stats(std::span<const double> table) noexcept {
  TableStats out;
  const std::size_t n = table.size() / kContexts;
  if (n == 0) return out;

  const __m256d sign = _mm256_set1_pd(-0.0);
  __m256d adjacent = _mm256_setzero_pd();  // |r0-r1| |r1-r2| |r2-r3| |r3-r0|
  __m256d opposite = _mm256_setzero_pd();  // |r0-r2| |r1-r3| (upper lanes repeat)
  double k = 0.0;
  double h = -1.0;
  for (std::size_t l = 0; l < n; ++l) {
    const __m256d v = _mm256_loadu_pd(table.data() + l * kContexts);

    const __m256d rot1 = _mm256_permute4x64_pd(v, _MM_SHUFFLE(0, 3, 2, 1));
    const __m256d rot2 = _mm256_permute4x64_pd(v, _MM_SHUFFLE(1, 0, 3, 2));
    adjacent = _mm256_add_pd(adjacent, _mm256_andnot_pd(sign, _mm256_sub_pd(v, rot1)));
    opposite = _mm256_add_pd(opposite, _mm256_andnot_pd(sign, _mm256_sub_pd(v, rot2)));

    const __m256d pair_sum = _mm256_hadd_pd(v, v);  // r0+r1, r0+r1, r2+r3, r2+r3
    const __m128d row_sum =
        _mm_add_sd(_mm256_castpd256_pd128(pair_sum), _mm256_extractf128_pd(pair_sum, 1));
    h = std::max(h, _mm_cvtsd_f64(row_sum));

    const __m256d pair_min = _mm256_min_pd(v, _mm256_permute_pd(v, 0b0101));
    const __m128d row_min =
        _mm_min_sd(_mm256_castpd256_pd128(pair_min), _mm256_extractf128_pd(pair_min, 1));
    k += _mm_cvtsd_f64(row_min);
  }

  alignas(32) double a[4];
  alignas(32) double o[4];
  _mm256_store_pd(a, adjacent);
  _mm256_store_pd(o, opposite);
  out.k_tilde = k;
  out.h_tilde = h;
  out.m_tilde = std::max({a[0], a[1], a[2], a[3], o[0], o[1]});
  return out;
}

}  // namespace bell::kernels::avx2
