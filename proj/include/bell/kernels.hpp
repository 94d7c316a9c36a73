#pragma once

// Table kernels over a row-major n x 4 probability table.
//
// The scalar variant is the reference. The AVX2 variant keeps one row in a
// single __m256d and performs the same operations in the same order per lane,
// so both produce bit-identical results. The dispatched entry point picks the
// widest variant the CPU supports; BELL_TRADEOFF_ISA=scalar|avx2 overrides.

#include <span>
#include <string_view>

namespace bell::kernels {

struct TableStats {
  double k_tilde = 0.0;  // sum_lambda min_i p(lambda|i)
  double m_tilde = 0.0;  // max_{i,j} sum_lambda |p(lambda|i) - p(lambda|j)|
  double h_tilde = 0.0;  // max_lambda sum_i p(lambda|i)

  friend bool operator==(const TableStats&, const TableStats&) = default;
};

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa) noexcept;

namespace scalar {
TableStats table_stats(std::span<const double> table) noexcept;
}

namespace avx2 {
/// True when the AVX2 variant was compiled in and the CPU supports it.
bool available() noexcept;
/// Precondition: available().
TableStats table_stats(std::span<const double> table) noexcept;
}

/// The variant selected at first use.
Isa active_isa() noexcept;

/// Force a variant (tests and benchmarks). Returns false if unavailable.
bool select_isa(Isa isa) noexcept;

TableStats table_stats(std::span<const double> table) noexcept;

}  // namespace bell::kernels
