#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace bell {

/// A point in the (m, h) plane or (m, h, s) space; unused trailing
/// coordinates are zero.
using Point = std::array<double, 3>;

/// The closed half-space normal . x <= offset.
struct Halfspace {
  Point normal{};
  double offset = 0.0;

  double slack(const Point& x) const noexcept {
    return offset - (normal[0] * x[0] + normal[1] * x[1] + normal[2] * x[2]);
  }
};

/// True if x satisfies every half-space within tol.
bool satisfies_all(std::span<const Halfspace> halfspaces, const Point& x, double tol) noexcept;

}  // namespace bell
