#include "bell/context.hpp"

#include <stdexcept>
#include <string>

namespace bell {

MeasurementContext MeasurementContext::from_index(int i) {
  if (i < 1 || i > 4) throw std::out_of_range("context index out of range: " + std::to_string(i));
  return MeasurementContext(i);
}

MeasurementContext MeasurementContext::from_pair(int x, int y) {
  if ((x != 0 && x != 1) || (y != 0 && y != 1)) {
    throw std::out_of_range("setting out of range: (" + std::to_string(x) + "," + std::to_string(y) + ")");
  }
  return MeasurementContext(2 * x + y + 1);
}

MeasurementContext context_index(int x, int y) { return MeasurementContext::from_pair(x, y); }

std::pair<int, int> context_pair(int i) {
  const auto c = MeasurementContext::from_index(i);
  return {c.x(), c.y()};
}

std::array<MeasurementContext, kContexts> all_contexts() {
  return {MeasurementContext::from_index(1), MeasurementContext::from_index(2),
          MeasurementContext::from_index(3), MeasurementContext::from_index(4)};
}

}  // namespace bell
