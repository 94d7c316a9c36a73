#include <atomic>
#include <cstdlib>
#include <string_view>

#include "bell/kernels.hpp"

namespace bell::kernels {

#ifndef BELL_HAVE_AVX2
namespace avx2 {
bool available() noexcept { return false; }
TableStats table_stats(std::span<const double> table) noexcept { return scalar::table_stats(table); }
}  // namespace avx2
#endif

namespace {

Isa detect() noexcept {
  if (const char* env = std::getenv("BELL_TRADEOFF_ISA")) {
    const std::string_view want(env);
    if (want == "scalar") return Isa::kScalar;
    if (want == "avx2" && avx2::available()) return Isa::kAvx2;
  }
  return avx2::available() ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& current() noexcept {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

bool select_isa(Isa isa) noexcept {
  if (isa == Isa::kAvx2 && !avx2::available()) return false;
  current().store(isa, std::memory_order_relaxed);
  return true;
}

TableStats table_stats(std::span<const double> table) noexcept {
  switch (active_isa()) {
    case Isa::kAvx2:
      return avx2::table_stats(table);
    case Isa::kScalar:
      break;
  }
  return scalar::table_stats(table);
}

}  // namespace bell::kernels
