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

// Solvers for max f(p) s.t. supp(p) independent, where f is k-submodular:
//
//   ThresholdDecreasingSolve  decreasing-threshold algorithm,
//                             O(n (k EO + IO) / eps * log(r / eps)) queries
//   GreedySolve               matroid greedy baseline, O(r n (IO + k EO))
//   BruteForceSolve           exhaustive ground truth for small instances

#ifndef KSUB_SOLVERS_H_
#define KSUB_SOLVERS_H_

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ksub/assignment.h"
#include "ksub/matroid.h"
#include "ksub/oracle.h"

namespace ksub {

// One pass of the outer loop: the threshold in force and how many elements
// were accepted at it. GreedySolve records one round per added element, with
// the accepted gain as threshold.
struct Round {
  double threshold = 0;
  int elements_added = 0;
  friend bool operator==(const Round&, const Round&) = default;
};

struct Pick {
  int element = 0;
  int position = 0;
  double gain = 0;
  double value_after = 0;
  friend bool operator==(const Pick&, const Pick&) = default;
};

struct SolveReport {
  std::string solver;
  Assignment assignment;
  // f(assignment), re-evaluated once after the run without counting.
  double value = 0;
  OracleCounters counters;
  // Matroid rank used by the run; -1 when the threshold run stopped (d <= 0)
  // before it needed the rank.
  int rank = 0;
  std::vector<Round> rounds;
  std::vector<Pick> picks;
  std::chrono::nanoseconds elapsed{0};

  int elements_added() const { return static_cast<int>(picks.size()); }

  // Equality of everything except wall time.
  bool SameOutcome(const SolveReport& other) const {
    return solver == other.solver && assignment == other.assignment &&
           value == other.value && counters == other.counters &&
           rank == other.rank && rounds == other.rounds &&
           picks == other.picks;
  }
};

class InvalidEpsilon : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BruteForceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ThresholdOptions {
  double epsilon = 0.1;
  // When set, each pass visits candidates in a shuffled order drawn from this
  // seed; otherwise ascending index order.
  std::optional<std::uint64_t> order_seed;
  // Known rank of the matroid. When absent it is computed with Rank() and
  // its n IO calls are charged to the run.
  std::optional<int> rank;
};

namespace internal {

template <KSubFunction F, Matroid M>
void CheckShapes(const F& f, const M& m) {
  if (f.n() != m.ground_size()) {
    throw std::invalid_argument(
        "function ground set (" + std::to_string(f.n()) +
        ") differs from matroid ground set (" +
        std::to_string(m.ground_size()) + ")");
  }
}

inline void CheckEpsilon(double epsilon) {
  if (!(epsilon > 0 && epsilon < 1)) {
    throw InvalidEpsilon("epsilon must lie in (0, 1), got " +
                         std::to_string(epsilon));
  }
}

class Stopwatch {
 public:
  std::chrono::nanoseconds Elapsed() const {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start_);
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

}  // namespace internal

// Smallest R with (1-eps)^R <= (1-eps) eps / (2r): an upper bound on the
// number of outer passes ThresholdDecreasingSolve executes.
inline int PredictedRoundBound(double epsilon, int rank) {
  internal::CheckEpsilon(epsilon);
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  const double passes =
      std::log(2.0 * rank / epsilon) / std::log(1.0 / (1.0 - epsilon));
  return static_cast<int>(std::ceil(passes)) + 1;
}

// Decreasing-threshold algorithm. Starting from w = d, the best value of a
// single non-loop element, every feasible element whose best marginal gain
// reaches w is accepted at its best position; w then shrinks by (1 - eps)
// until it drops to (1 - eps) eps d / (2r) or nothing feasible is left.
//
// Oracle accounting: one IO per element finds the loops; d costs at most n*k
// EO; the rank (when not supplied) costs n IO; each candidate visit costs k
// EO (the current f(p) is carried, not re-evaluated). Feasibility of a
// candidate is re-queried (1 IO) only when the support has grown since its
// last query, and an infeasible element is dropped for good, since supports
// only grow.
template <KSubFunction F, Matroid M>
SolveReport ThresholdDecreasingSolve(const F& f, const M& m,
                                     const ThresholdOptions& options = {}) {
  internal::CheckShapes(f, m);
  internal::CheckEpsilon(options.epsilon);
  if (options.rank && *options.rank < 0) {
    throw std::invalid_argument("supplied rank is negative");
  }
  const internal::Stopwatch stopwatch;
  const int n = f.n();
  const int k = f.k();
  const double eps = options.epsilon;

  SolveReport report;
  report.solver = "threshold";
  report.assignment = Assignment(n, k);
  auto finish = [&]() -> SolveReport {
    report.value = f.Evaluate(report.assignment);
    report.elapsed = stopwatch.Elapsed();
    return std::move(report);
  };
  if (n == 0) return finish();

  OracleCounters& counters = report.counters;
  if (options.rank && *options.rank == 0) return finish();
  const ValueOracle<F> value(f, counters);
  const IndependenceOracle<M> independent(m, counters);
  Assignment& p = report.assignment;

  ElementSet support(n);
  int version = 0;  // number of accepted elements so far
  std::vector<int> checked_at(static_cast<size_t>(n), -1);
  std::vector<char> feasible(static_cast<size_t>(n), 0);
  std::vector<char> dropped(static_cast<size_t>(n), 0);

  auto is_feasible = [&](int e) {
    if (dropped[e]) return false;
    if (checked_at[e] != version) {
      checked_at[e] = version;
      feasible[e] = independent(support.With(e));
      if (!feasible[e]) dropped[e] = 1;
    }
    return feasible[e] != 0;
  };
  auto any_feasible = [&]() {
    for (int e = 0; e < n; ++e) {
      if (!support.Contains(e) && is_feasible(e)) return true;
    }
    return false;
  };

  // Loops can never be selected, and a loop's singleton value must not set
  // the scale: d is taken over elements that are independent on their own.
  // These n queries are the ones the first pass would make anyway.
  bool any_element = false;
  for (int e = 0; e < n; ++e) any_element |= is_feasible(e);
  if (!any_element) {
    report.rank = 0;
    return finish();
  }
  double d = -std::numeric_limits<double>::infinity();
  for (int e = 0; e < n; ++e) {
    if (!feasible[e]) continue;
    for (int i = 1; i <= k; ++i) d = std::max(d, value(p.With(e, i)));
  }
  if (d <= 0) {
    report.rank = options.rank.value_or(-1);
    return finish();
  }
  const int r = options.rank ? *options.rank : Rank(m, counters);
  report.rank = r;
  if (r == 0) return finish();
  double current = 0;  // f(p); f(0) = 0.

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::optional<std::mt19937_64> rng;
  if (options.order_seed) rng.emplace(*options.order_seed);

  const double stop = (1 - eps) * eps * d / (2.0 * r);
  double w = d;
  while (w > stop && any_feasible()) {
    if (rng) std::shuffle(order.begin(), order.end(), *rng);
    Round round{w, 0};
    for (int e : order) {
      if (support.Contains(e) || !is_feasible(e)) continue;
      int best_position = 0;
      double best_value = -std::numeric_limits<double>::infinity();
      for (int i = 1; i <= k; ++i) {
        const double v = value(p.With(e, i));
        if (v > best_value) {
          best_value = v;
          best_position = i;
        }
      }
      const double gain = best_value - current;
      if (gain >= w) {
        p.Set(e, best_position);
        support.Insert(e);
        current = best_value;
        ++version;
        ++round.elements_added;
        report.picks.push_back({e, best_position, gain, current});
      }
    }
    report.rounds.push_back(round);
    w *= 1 - eps;
  }
  return finish();
}

// Matroid greedy baseline: while some element can be added, evaluate every
// feasible (element, position) pair and add the best one. Ties go to the
// lowest element, then the lowest position. The result is always a basis.
template <KSubFunction F, Matroid M>
SolveReport GreedySolve(const F& f, const M& m) {
  internal::CheckShapes(f, m);
  const internal::Stopwatch stopwatch;
  const int n = f.n();
  const int k = f.k();

  SolveReport report;
  report.solver = "greedy";
  report.assignment = Assignment(n, k);
  Assignment& p = report.assignment;
  const ValueOracle<F> value(f, report.counters);
  const IndependenceOracle<M> independent(m, report.counters);

  ElementSet support(n);
  double current = 0;
  while (true) {
    int best_element = -1;
    int best_position = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int e = 0; e < n; ++e) {
      if (support.Contains(e) || !independent(support.With(e))) continue;
      for (int i = 1; i <= k; ++i) {
        const double v = value(p.With(e, i));
        if (v > best_value) {
          best_value = v;
          best_element = e;
          best_position = i;
        }
      }
    }
    if (best_element < 0) break;
    const double gain = best_value - current;
    p.Set(best_element, best_position);
    support.Insert(best_element);
    current = best_value;
    report.picks.push_back({best_element, best_position, gain, current});
    report.rounds.push_back({gain, 1});
  }
  report.rank = support.size();
  report.value = f.Evaluate(p);
  report.elapsed = stopwatch.Elapsed();
  return report;
}

struct BruteForceOptions {
  // Largest (k+1)^n that will be enumerated; 4^10 by default.
  std::uint64_t max_assignments = std::uint64_t{1} << 20;
};

struct BruteForceResult {
  double value = 0;  // OPT
  // Largest support among the optimal assignments.
  int max_opt_support_size = 0;
  // An optimal assignment of that support size (first in enumeration order).
  Assignment assignment;
  std::uint64_t enumerated = 0;
};

// Enumerates every assignment with independent support. Refuses, rather than
// approximates, when the domain exceeds the cap.
template <KSubFunction F, Matroid M>
BruteForceResult BruteForceSolve(const F& f, const M& m,
                                 const BruteForceOptions& options = {}) {
  internal::CheckShapes(f, m);
  const int n = f.n();
  const int k = f.k();
  const std::uint64_t domain = DomainSize(n, k);
  if (domain > options.max_assignments || n > 30) {
    throw BruteForceCapExceeded(
        "brute force: (k+1)^n = " + std::to_string(k + 1) + "^" +
        std::to_string(n) + " exceeds the cap of " +
        std::to_string(options.max_assignments) + " assignments");
  }

  // Independence of each support, by bitmask: -1 unknown, 0 no, 1 yes.
  std::vector<signed char> independent(std::size_t{1} << n, -1);
  auto support_ok = [&](std::uint64_t mask) {
    signed char& cached = independent[mask];
    if (cached < 0) cached = m.IsIndependent(ElementSet::FromMask(n, mask));
    return cached == 1;
  };

  BruteForceResult result;
  result.assignment = Assignment(n, k);
  result.value = -std::numeric_limits<double>::infinity();
  Assignment a(n, k);
  std::uint64_t mask = 0;
  for (std::uint64_t code = 0; code < domain; ++code) {
    if (code > 0) {
      // Odometer increment of the label vector.
      for (int e = 0; e < n; ++e) {
        if (a[e] < k) {
          a.Set(e, a[e] + 1);
          mask |= std::uint64_t{1} << e;
          break;
        }
        a.Set(e, 0);
        mask &= ~(std::uint64_t{1} << e);
      }
    }
    if (!support_ok(mask)) continue;
    ++result.enumerated;
    const double v = f.Evaluate(a);
    const int size = std::popcount(mask);
    if (v > result.value || (v == result.value &&
                             size > result.max_opt_support_size)) {
      result.value = v;
      result.max_opt_support_size = size;
      result.assignment = a;
    }
  }
  return result;
}

}  // namespace ksub

#endif  // KSUB_SOLVERS_H_
