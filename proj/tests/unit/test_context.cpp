#include <gtest/gtest.h>

#include "bell/context.hpp"

namespace bell {
namespace {

TEST(ContextTest, IndexFollowsSettingOrder) {
  EXPECT_EQ(context_index(0, 0).index(), 1);
  EXPECT_EQ(context_index(0, 1).index(), 2);
  EXPECT_EQ(context_index(1, 0).index(), 3);
  EXPECT_EQ(context_index(1, 1).index(), 4);
}

TEST(ContextTest, RoundTrip) {
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const auto [rx, ry] = context_pair(context_index(x, y).index());
      EXPECT_EQ(rx, x);
      EXPECT_EQ(ry, y);
    }
  }
  EXPECT_EQ(context_pair(context_index(1, 0).index()), std::make_pair(1, 0));
  for (const auto c : all_contexts()) EXPECT_EQ(context_index(c.x(), c.y()), c);
}

TEST(ContextTest, OutOfRange) {
  EXPECT_THROW(context_pair(0), std::out_of_range);
  EXPECT_THROW(context_pair(5), std::out_of_range);
  EXPECT_THROW(context_index(2, 0), std::out_of_range);
  EXPECT_THROW(context_index(0, -1), std::out_of_range);
}

}  // namespace
}  // namespace bell
