#pragma once

#include <array>
#include <cstddef>
#include <utility>

namespace bell {

inline constexpr std::size_t kContexts = 4;

/// One of the four measurement settings (x, y), labelled i = 1..4 in the
/// order (0,0), (0,1), (1,0), (1,1).
class MeasurementContext {
 public:
  /// Throws std::out_of_range unless 1 <= i <= 4.
  static MeasurementContext from_index(int i);
  /// Throws std::out_of_range unless x, y are bits.
  static MeasurementContext from_pair(int x, int y);

  constexpr int index() const noexcept { return index_; }
  constexpr std::size_t offset() const noexcept { return static_cast<std::size_t>(index_ - 1); }
  constexpr int x() const noexcept { return (index_ - 1) >> 1; }
  constexpr int y() const noexcept { return (index_ - 1) & 1; }

  friend constexpr bool operator==(MeasurementContext, MeasurementContext) = default;

 private:
  constexpr explicit MeasurementContext(int i) noexcept : index_(i) {}
  int index_;
};

MeasurementContext context_index(int x, int y);
std::pair<int, int> context_pair(int i);

/// All four contexts in label order.
std::array<MeasurementContext, kContexts> all_contexts();

}  // namespace bell
