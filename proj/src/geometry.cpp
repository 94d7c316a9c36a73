#include "bell/geometry.hpp"

namespace bell {

bool satisfies_all(std::span<const Halfspace> halfspaces, const Point& x, double tol) noexcept {
  for (const auto& hs : halfspaces) {
    if (hs.slack(x) < -tol) return false;
  }
  return true;
}

}  // namespace bell
