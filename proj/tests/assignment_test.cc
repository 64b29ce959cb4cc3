// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ksub/assignment.h"

#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace ksub {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

TEST(SupportTest, Examples) {
  EXPECT_THAT(Support(Assignment(2, {0, 0, 0})), IsEmpty());
  EXPECT_THAT(Support(Assignment(2, {2, 0, 1})), ElementsAre(0, 2));
  EXPECT_THAT(Support(Assignment(1, {1, 1, 1})), ElementsAre(0, 1, 2));
}

TEST(AssignmentTest, RejectsLabelsOutsideRange) {
  EXPECT_THROW(Assignment(2, {0, 3}), std::invalid_argument);
  EXPECT_THROW(Assignment(2, {-1}), std::invalid_argument);
  EXPECT_THROW(Assignment(3, 0), std::invalid_argument);
  Assignment a(2, 2);
  EXPECT_THROW(a.Set(2, 1), std::out_of_range);
  EXPECT_THROW(a.Set(0, 3), std::invalid_argument);
}

TEST(MeetTest, Examples) {
  EXPECT_EQ(Meet(Assignment(2, {1, 2, 0}), Assignment(2, {1, 0, 2})),
            Assignment(2, {1, 0, 0}));
  const Assignment b(2, {2, 1, 1});
  EXPECT_EQ(Meet(Assignment(3, 2), b), Assignment(3, 2));
  EXPECT_EQ(Meet(b, b), b);
}

TEST(JoinTest, Examples) {
  EXPECT_EQ(Join(Assignment(2, {1, 2, 0}), Assignment(2, {1, 0, 2})),
            Assignment(2, {1, 2, 2}));
  EXPECT_EQ(Join(Assignment(2, {1, 0}), Assignment(2, {2, 0})),
            Assignment(2, {0, 0}));
  const Assignment b(2, {2, 1, 0});
  EXPECT_EQ(Join(Assignment(3, 2), b), b);
}

TEST(LatticeTest, DimensionMismatchRejected) {
  EXPECT_THROW(Meet(Assignment(2, 2), Assignment(3, 2)), std::invalid_argument);
  EXPECT_THROW(Join(Assignment(2, 2), Assignment(2, 3)), std::invalid_argument);
  EXPECT_THROW(Precedes(Assignment(2, 2), Assignment(3, 2)),
               std::invalid_argument);
}

// meet(a,b) ⪯ a, meet(a,b) ⪯ b, join(a,a) = a, join(a,0) = a, and the
// support of join never exceeds the union of supports. Exhaustive, n <= 4.
TEST(LatticeTest, IdentitiesHoldExhaustively) {
  for (int k = 1; k <= 3; ++k) {
    const int n = k == 3 ? 3 : 4;
    const auto all = testing::AllAssignments(n, k);
    const Assignment zero(n, k);
    for (const auto& a : all) {
      EXPECT_EQ(Join(a, a), a);
      EXPECT_EQ(Join(a, zero), a);
      EXPECT_EQ(Meet(a, zero), zero);
      for (const auto& b : all) {
        const Assignment m = Meet(a, b);
        ASSERT_TRUE(Precedes(m, a));
        ASSERT_TRUE(Precedes(m, b));
        ASSERT_EQ(m, Meet(b, a));
        ASSERT_EQ(Join(a, b), Join(b, a));
      }
    }
  }
}

TEST(PrecedesTest, Examples) {
  EXPECT_TRUE(Precedes(Assignment(2, {1, 0, 0}), Assignment(2, {1, 2, 0})));
  EXPECT_FALSE(Precedes(Assignment(2, {2, 0, 0}), Assignment(2, {1, 2, 0})));
  EXPECT_TRUE(Precedes(Assignment(3, 2), Assignment(2, {2, 2, 2})));
}

TEST(EncodeTest, DecodeInvertsEncode) {
  for (const auto& a : testing::AllAssignments(3, 3)) {
    EXPECT_EQ(Decode(Encode(a), 3, 3), a);
  }
  EXPECT_EQ(Encode(Assignment(2, {1, 2})), 1u + 2u * 3u);
  EXPECT_EQ(DomainSize(10, 3), 1u << 20);
  EXPECT_EQ(DomainSize(200, 2), UINT64_MAX);
}

}  // namespace
}  // namespace ksub
