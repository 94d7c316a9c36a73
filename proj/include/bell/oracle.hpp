#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bell/geometry.hpp"
#include "bell/model.hpp"

namespace bell::oracle {

struct BruteForceResult {
  double value = 0.0;
  /// Context offset carrying the minus sign of the maximizing pattern.
  std::size_t pattern = 0;
  /// Per-lambda maximizer for that pattern (first in DeterministicStrategy::all() order).
  std::vector<DeterministicStrategy> strategies;
};

/// S_opt by exhaustive search over deterministic local strategies, per
/// hidden variable and per sign pattern. Independent of the closed form.
BruteForceResult brute_force_sopt(const HiddenInput& input);

/// 64-bit mixing used to derive sub-seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;
/// Sub-seed `index` of `seed`: splitmix64(seed ^ splitmix64(index + 1)).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// n x 4 table whose context columns are independent uniform draws from the
/// probability simplex. Column i uses std::mt19937_64(derive_seed(seed, i)),
/// converts each output to u in [0,1) from its top 53 bits and takes the
/// exponential variate -log1p(-u); the column is those variates normalized.
/// Throws std::invalid_argument when n == 0.
HiddenInput sample_input(std::size_t n, std::uint64_t seed);

/// A measurement-independent table: one simplex draw copied to all contexts.
HiddenInput sample_independent_input(std::size_t n, std::uint64_t seed);

enum class EnumerationStatus { kBounded, kUnbounded, kEmpty };

struct VertexEnumeration {
  EnumerationStatus status = EnumerationStatus::kEmpty;
  std::vector<Point> vertices;
};

/// Vertices of {x in R^d : a . x <= b for all half-spaces}, d in {2, 3}:
/// every point where d linearly independent constraints are active and all
/// constraints hold within 1e-9, duplicates merged. Unboundedness is found
/// by adding a far bounding box and looking for vertices on it.
/// Throws std::invalid_argument for other d.
VertexEnumeration enumerate_vertices(std::span<const Halfspace> halfspaces, int dimension);

}  // namespace bell::oracle
