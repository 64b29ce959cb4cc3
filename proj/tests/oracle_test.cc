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

#include "ksub/oracle.h"

#include <random>

#include "gtest/gtest.h"
#include "ksub/functions.h"
#include "ksub/generators.h"
#include "test_util.h"

namespace ksub {
namespace {

const ModularFunction kTwoByTwo(2, {{5, -3}, {2, 2}});

TEST(MarginalGainTest, ModularTableEntries) {
  OracleCounters c;
  const Assignment zero(2, 2);
  EXPECT_EQ(MarginalGain(kTwoByTwo, zero, 0, 1, c), 5);
  EXPECT_EQ(MarginalGain(kTwoByTwo, zero, 0, 2, c), -3);
  EXPECT_EQ(c.eo_calls, 4u);
  EXPECT_EQ(c.io_calls, 0u);
}

TEST(MarginalGainTest, SuppliedBaseCostsOneCall) {
  OracleCounters c;
  const Assignment p(2, {0, 2});
  EXPECT_EQ(MarginalGain(kTwoByTwo, p, 0, 1, 2.0, c), 5);
  EXPECT_EQ(c.eo_calls, 1u);
}

TEST(MarginalGainTest, RejectsBadArguments) {
  OracleCounters c;
  const Assignment p(2, {1, 0});
  EXPECT_THROW(MarginalGain(kTwoByTwo, p, 0, 1, c), std::invalid_argument);
  EXPECT_THROW(MarginalGain(kTwoByTwo, p, 1, 0, c), std::invalid_argument);
  EXPECT_THROW(MarginalGain(kTwoByTwo, p, 1, 3, c), std::invalid_argument);
  EXPECT_THROW(MarginalGain(kTwoByTwo, p, 2, 1, c), std::out_of_range);
  EXPECT_EQ(c.eo_calls, 0u);
}

// Cross-check against two raw evaluations on random coverage instances.
TEST(MarginalGainTest, AgreesWithDirectDoubleEvaluation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    CoverageOptions o;
    o.n = 5;
    o.k = 3;
    o.universe_size = 10;
    const CoverageFunction f = GenCoverage(o, trial);
    Assignment p(o.n, o.k);
    std::uniform_int_distribution<int> label(0, o.k);
    for (int e = 0; e < o.n; ++e) p.Set(e, label(rng));
    p.Set(trial % o.n, 0);
    const int e = trial % o.n;
    const int i = 1 + trial % o.k;
    OracleCounters c;
    const double expected = f.Evaluate(p.With(e, i)) - f.Evaluate(p);
    EXPECT_EQ(MarginalGain(f, p, e, i, c), expected);
  }
}

TEST(OracleCountersTest, MatchRawEvaluationCount) {
  const testing::CountingDouble<ModularFunction> f(kTwoByTwo);
  OracleCounters c;
  const ValueOracle<testing::CountingDouble<ModularFunction>> oracle(f, c);
  const Assignment zero(2, 2);
  oracle(zero);
  MarginalGain(f, zero, 1, 2, c);
  MarginalGain(f, zero, 1, 2, 0.0, c);
  EXPECT_EQ(c.eo_calls, 4u);
  EXPECT_EQ(c.eo_calls, f.calls());
  c.Reset();
  EXPECT_EQ(c, OracleCounters{});
}

TEST(AnyFunctionTest, ForwardsToWrappedFunction) {
  const AnyFunction f = kTwoByTwo;
  EXPECT_EQ(f.n(), 2);
  EXPECT_EQ(f.k(), 2);
  EXPECT_EQ(f.Evaluate(Assignment(2, {1, 2})), 7);
  EXPECT_EQ(f.Evaluate(Assignment(2, 2)), 0);
}

}  // namespace
}  // namespace ksub
