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

#include "ksub/matroid.h"

#include <bit>
#include <random>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "ksub/generators.h"

namespace ksub {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

// Downward-closed family given by a membership table; not validated.
struct FamilySystem {
  int n;
  std::vector<bool> member;
  int ground_size() const { return n; }
  bool IsIndependent(const ElementSet& s) const { return member[s.Mask()]; }
};

ElementSet Set(int n, std::initializer_list<int> elements) {
  return ElementSet::FromElements(n, std::vector<int>(elements));
}

TEST(ElementSetTest, WideSetsUseSeveralWords) {
  ElementSet s(200);
  s.Insert(3);
  s.Insert(130);
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.Contains(130));
  EXPECT_FALSE(s.Contains(131));
  EXPECT_THAT(s.Elements(), ElementsAre(3, 130));
  EXPECT_THROW(s.Insert(200), std::out_of_range);
  EXPECT_THROW(s.Mask(), std::logic_error);
}

TEST(RankTest, Examples) {
  OracleCounters c;
  EXPECT_EQ(Rank(UniformMatroid(5, 3), c), 3);
  EXPECT_EQ(c.io_calls, 5u);
  EXPECT_EQ(Rank(PartitionMatroid(4, {{0, 1}, {2, 3}}, {1, 1}), c), 2);
}

TEST(RankTest, UniformRankIsMinOfBudgetAndSize) {
  for (int n = 0; n <= 12; ++n) {
    for (int b = 0; b <= n; ++b) {
      OracleCounters c;
      ASSERT_EQ(Rank(UniformMatroid(n, b), c), std::min(b, n));
      ASSERT_EQ(c.io_calls, static_cast<std::uint64_t>(n));
    }
  }
}

TEST(RankTest, ExplicitRankIsLargestListedSet) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ExplicitMatroid m = GenBinaryMatroid(7, 1 + seed % 5, seed);
    int largest = 0;
    for (std::uint64_t mask : m.independent_sets()) {
      largest = std::max(largest, std::popcount(mask));
    }
    OracleCounters c;
    EXPECT_EQ(Rank(m, c), largest);
    EXPECT_EQ(m.rank(), largest);
  }
}

TEST(FeasibleExtensionsTest, Examples) {
  OracleCounters c;
  EXPECT_THAT(FeasibleExtensions(UniformMatroid(3, 1), Set(3, {0}), c),
              IsEmpty());
  EXPECT_EQ(c.io_calls, 2u);
  EXPECT_THAT(FeasibleExtensions(UniformMatroid(3, 2), Set(3, {0}), c),
              ElementsAre(1, 2));
  EXPECT_THAT(FeasibleExtensions(PartitionMatroid(3, {{0, 1}, {2}}, {1, 1}),
                                 Set(3, {0}), c),
              ElementsAre(2));
  EXPECT_EQ(c.io_calls, 6u);
}

TEST(FeasibleExtensionsTest, RejectsDependentSet) {
  OracleCounters c;
  EXPECT_THROW(FeasibleExtensions(UniformMatroid(3, 1), Set(3, {0, 1}), c),
               std::invalid_argument);
  EXPECT_EQ(c.io_calls, 0u);
}

TEST(FeasibleExtensionsTest, EmptyForEveryBasis) {
  const std::vector<AnyMatroid> matroids = {
      UniformMatroid(6, 3), GenPartitionMatroid(6, 3, 2, 1),
      GenBinaryMatroid(6, 3, 2)};
  for (const AnyMatroid& m : matroids) {
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
      const ElementSet s = ElementSet::FromMask(6, mask);
      if (!IsBasis(m, s)) continue;
      OracleCounters c;
      EXPECT_THAT(FeasibleExtensions(m, s, c), IsEmpty());
    }
  }
}

TEST(PartitionMatroidTest, RejectsMalformedBlocks) {
  EXPECT_THROW(PartitionMatroid(3, {{0, 1}}, {1}), std::invalid_argument);
  EXPECT_THROW(PartitionMatroid(3, {{0, 1}, {1, 2}}, {1, 1}),
               std::invalid_argument);
  EXPECT_THROW(PartitionMatroid(3, {{0, 1, 2}}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(PartitionMatroid(3, {{0, 1, 3}}, {1}), std::invalid_argument);
  EXPECT_THROW(PartitionMatroid(3, {{0, 1, 2}}, {-1}), std::invalid_argument);
}

TEST(ExplicitMatroidTest, RejectsInvalidFamilies) {
  // Missing the empty set.
  EXPECT_THROW(ExplicitMatroid(2, {1, 2}), std::invalid_argument);
  // {0,1} listed but {1} missing.
  EXPECT_THROW(ExplicitMatroid(2, {0, 1, 3}), std::invalid_argument);
  // {0} cannot be augmented from {1,2}.
  EXPECT_THROW(ExplicitMatroid(3, {0, 1, 2, 4, 6}), std::invalid_argument);
  EXPECT_THROW(ExplicitMatroid(2, {0, 4}), std::invalid_argument);
  EXPECT_THROW(ExplicitMatroid(17, {0}), std::invalid_argument);
}

// The constructor's rank-submodularity test accepts exactly the families
// that pass a direct check of the augmentation axiom.
TEST(ExplicitMatroidTest, ValidationMatchesDirectAxiomCheck) {
  std::mt19937_64 rng(3);
  int accepted = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 5;
    std::vector<bool> member(std::size_t{1} << n, false);
    std::uniform_int_distribution<std::uint64_t> pick(0, (1u << n) - 1);
    const int generators = 1 + trial % 4;
    for (int g = 0; g < generators; ++g) {
      const std::uint64_t top = pick(rng);
      for (std::uint64_t sub = top;; sub = (sub - 1) & top) {
        member[sub] = true;
        if (sub == 0) break;
      }
    }
    std::vector<std::uint64_t> family;
    for (std::uint64_t mask = 0; mask < member.size(); ++mask) {
      if (member[mask]) family.push_back(mask);
    }
    const bool direct = CheckMatroidAxioms(FamilySystem{n, member}).holds;
    bool constructed = true;
    try {
      ExplicitMatroid m(n, family);
    } catch (const std::invalid_argument&) {
      constructed = false;
    }
    ASSERT_EQ(direct, constructed) << "trial " << trial;
    accepted += constructed;
  }
  EXPECT_GT(accepted, 30);
  EXPECT_LT(accepted, 290);
}

TEST(MatroidAxiomsTest, ShippedFamiliesSatisfyAxioms) {
  for (int n = 0; n <= 8; ++n) {
    for (int b = 0; b <= n; ++b) {
      ASSERT_TRUE(CheckMatroidAxioms(UniformMatroid(n, b)).holds);
    }
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      if (n > 0) {
        ASSERT_TRUE(
            CheckMatroidAxioms(GenPartitionMatroid(n, 1 + seed % 3, 2, seed))
                .holds);
      }
      ASSERT_TRUE(
          CheckMatroidAxioms(GenBinaryMatroid(n, 1 + seed % 4, seed)).holds);
    }
  }
}

TEST(MatroidAxiomsTest, DetectsBrokenSystem) {
  std::vector<bool> member(8, false);
  for (std::uint64_t m : {0u, 1u, 2u, 4u, 6u}) member[m] = true;
  const AxiomReport report = CheckMatroidAxioms(FamilySystem{3, member});
  EXPECT_FALSE(report.holds);
  EXPECT_NE(report.violation.find("augments"), std::string::npos);
}

TEST(MatroidAxiomsTest, SampledForLargeGroundSets) {
  const AxiomReport report =
      CheckMatroidAxioms(GenPartitionMatroid(40, 5, 3, 9), 12, 500);
  EXPECT_TRUE(report.holds);
  EXPECT_FALSE(report.exhaustive);
}

TEST(BasisExchangeTest, UniformSwap) {
  EXPECT_TRUE(CheckBasisExchange(UniformMatroid(3, 2), Set(3, {0}),
                                 Set(3, {0, 1}), 2));
}

TEST(BasisExchangeTest, PreconditionViolationsReported) {
  const UniformMatroid m(3, 2);
  EXPECT_THROW(CheckBasisExchange(m, Set(3, {0}), Set(3, {0}), 2),
               std::invalid_argument);  // b not a basis
  EXPECT_THROW(CheckBasisExchange(m, Set(3, {0, 1}), Set(3, {0, 1}), 2),
               std::invalid_argument);  // a not proper
  EXPECT_THROW(CheckBasisExchange(m, Set(3, {2}), Set(3, {0, 1}), 1),
               std::invalid_argument);  // a not a subset of b
  EXPECT_THROW(CheckBasisExchange(m, Set(3, {0}), Set(3, {0, 1}), 0),
               std::invalid_argument);  // e in a
  const PartitionMatroid p(3, {{0, 1}, {2}}, {1, 1});
  EXPECT_THROW(CheckBasisExchange(p, Set(3, {0}), Set(3, {0, 2}), 1),
               std::invalid_argument);  // a + e dependent
}

// Exhaustive over every valid (a, b, e) triple.
template <Matroid M>
int CountExchangeFailures(const M& m) {
  const int n = m.ground_size();
  int failures = 0;
  for (std::uint64_t b_mask = 0; b_mask < (1u << n); ++b_mask) {
    const ElementSet b = ElementSet::FromMask(n, b_mask);
    if (!IsBasis(m, b)) continue;
    for (std::uint64_t a_mask = b_mask;; a_mask = (a_mask - 1) & b_mask) {
      if (a_mask != b_mask) {
        const ElementSet a = ElementSet::FromMask(n, a_mask);
        for (int e = 0; e < n; ++e) {
          if (a.Contains(e) || !m.IsIndependent(a.With(e))) continue;
          failures += !CheckBasisExchange(m, a, b, e);
        }
      }
      if (a_mask == 0) break;
    }
  }
  return failures;
}

TEST(BasisExchangeTest, HoldsExhaustivelyOnShippedMatroids) {
  for (int n = 1; n <= 6; ++n) {
    for (int b = 0; b <= n; ++b) {
      EXPECT_EQ(CountExchangeFailures(UniformMatroid(n, b)), 0);
    }
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      EXPECT_EQ(CountExchangeFailures(GenPartitionMatroid(n, 2, 2, seed)), 0);
      EXPECT_EQ(CountExchangeFailures(GenBinaryMatroid(n, 3, seed)), 0);
    }
  }
}

}  // namespace
}  // namespace ksub
