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

// Brute-force checkers for the structural properties of k-submodular
// functions. Small domains are enumerated exhaustively; larger ones are
// sampled and the verdict says so.

#ifndef KSUB_VERIFY_H_
#define KSUB_VERIFY_H_

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ksub/assignment.h"
#include "ksub/oracle.h"

namespace ksub {

struct VerifyOptions {
  // Exhaustive enumeration is used when ((k+1)^n)^2 <= pair_budget.
  std::uint64_t pair_budget = 1'000'000;
  // When the budget is exceeded: sample if true, otherwise throw
  // BudgetExceeded.
  bool allow_sampling = true;
  std::uint64_t samples = 200'000;
  std::uint64_t seed = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Counterexample {
  Assignment p;
  Assignment q;
  std::string detail;
};

struct Verdict {
  bool holds = true;
  // False means the verdict comes from random sampling and a "holds" answer
  // is not a proof.
  bool exhaustive = true;
  std::uint64_t checks = 0;
  std::optional<Counterexample> counterexample;
};

namespace internal {

inline bool UseExhaustive(int n, int k, const VerifyOptions& options) {
  const std::uint64_t domain = DomainSize(n, k);
  if (domain <= (1ull << 32) && domain * domain <= options.pair_budget) {
    return true;
  }
  if (!options.allow_sampling) {
    std::ostringstream msg;
    msg << "domain (k+1)^n = " << (k + 1) << "^" << n
        << " exceeds the exhaustive pair budget of " << options.pair_budget;
    throw BudgetExceeded(msg.str());
  }
  return false;
}

// f tabulated on every assignment, indexed by Encode().
class ValueTable {
 public:
  template <KSubFunction F>
  explicit ValueTable(const F& f) : n_(f.n()), k_(f.k()) {
    const std::uint64_t size = DomainSize(n_, k_);
    values_.resize(size);
    labels_.resize(size * static_cast<std::uint64_t>(n_));
    for (std::uint64_t code = 0; code < size; ++code) {
      Assignment a = Decode(code, n_, k_);
      values_[code] = f.Evaluate(a);
      for (int e = 0; e < n_; ++e) labels_[code * n_ + e] = a[e];
    }
    place_.resize(static_cast<size_t>(n_));
    std::uint64_t place = 1;
    for (int e = 0; e < n_; ++e) {
      place_[e] = place;
      place *= static_cast<std::uint64_t>(k_ + 1);
    }
  }

  std::uint64_t size() const { return values_.size(); }
  double value(std::uint64_t code) const { return values_[code]; }
  int label(std::uint64_t code, int e) const { return labels_[code * n_ + e]; }
  std::uint64_t place(int e) const { return place_[e]; }
  Assignment At(std::uint64_t code) const { return Decode(code, n_, k_); }

 private:
  int n_;
  int k_;
  std::vector<double> values_;
  std::vector<std::uint8_t> labels_;
  std::vector<std::uint64_t> place_;
};

inline Assignment RandomAssignment(int n, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> label(0, k);
  Assignment a(n, k);
  for (int e = 0; e < n; ++e) a.Set(e, label(rng));
  return a;
}

// A uniformly random p ⪯ q (each support element of q kept with prob. 1/2).
inline Assignment RandomBelow(const Assignment& q, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(0.5);
  Assignment p = q;
  for (int e = 0; e < q.n(); ++e) {
    if (q[e] != 0 && !keep(rng)) p.Set(e, 0);
  }
  return p;
}

inline std::string Describe(const char* what, int e, int i, int j = 0) {
  std::ostringstream out;
  out << what << " at element " << e << ", position " << i;
  if (j != 0) out << " vs " << j;
  return out.str();
}

}  // namespace internal

// Checks f(p) + f(q) >= f(p ⊔ q) + f(p ⊓ q) over all pairs (or a sample).
template <KSubFunction F>
Verdict VerifyKSubmodular(const F& f, const VerifyOptions& options = {}) {
  const int n = f.n();
  const int k = f.k();
  Verdict verdict;
  verdict.exhaustive = internal::UseExhaustive(n, k, options);

  if (verdict.exhaustive) {
    const internal::ValueTable table(f);
    for (std::uint64_t p = 0; p < table.size(); ++p) {
      for (std::uint64_t q = p; q < table.size(); ++q) {
        std::uint64_t join = 0;
        std::uint64_t meet = 0;
        for (int e = 0; e < n; ++e) {
          const int a = table.label(p, e);
          const int b = table.label(q, e);
          if (a == b) {
            meet += table.place(e) * a;
            join += table.place(e) * a;
          } else if (a == 0 || b == 0) {
            join += table.place(e) * (a + b);
          }
        }
        ++verdict.checks;
        if (table.value(p) + table.value(q) <
            table.value(join) + table.value(meet)) {
          verdict.holds = false;
          verdict.counterexample = Counterexample{
              table.At(p), table.At(q), "f(p)+f(q) < f(p join q)+f(p meet q)"};
          return verdict;
        }
      }
    }
    return verdict;
  }

  std::mt19937_64 rng(options.seed);
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    const Assignment p = internal::RandomAssignment(n, k, rng);
    const Assignment q = internal::RandomAssignment(n, k, rng);
    ++verdict.checks;
    if (f.Evaluate(p) + f.Evaluate(q) <
        f.Evaluate(Join(p, q)) + f.Evaluate(Meet(p, q))) {
      verdict.holds = false;
      verdict.counterexample =
          Counterexample{p, q, "f(p)+f(q) < f(p join q)+f(p meet q)"};
      return verdict;
    }
  }
  return verdict;
}

// Checks orthant submodularity and pairwise monotonicity, which together are
// equivalent to k-submodularity. On failure the counterexample carries p and
// q (q == p for a pairwise-monotonicity violation).
template <KSubFunction F>
Verdict VerifyViaOrthantAndPairwise(const F& f,
                                    const VerifyOptions& options = {}) {
  const int n = f.n();
  const int k = f.k();
  Verdict verdict;
  verdict.exhaustive = internal::UseExhaustive(n, k, options);

  if (verdict.exhaustive) {
    const internal::ValueTable table(f);
    // Pairwise monotonicity: Δ_{e,i}f(p) + Δ_{e,j}f(p) >= 0.
    for (std::uint64_t p = 0; p < table.size(); ++p) {
      const double base = table.value(p);
      for (int e = 0; e < n; ++e) {
        if (table.label(p, e) != 0) continue;
        for (int i = 1; i <= k; ++i) {
          for (int j = i + 1; j <= k; ++j) {
            ++verdict.checks;
            const double gi = table.value(p + table.place(e) * i) - base;
            const double gj = table.value(p + table.place(e) * j) - base;
            if (gi + gj < 0) {
              verdict.holds = false;
              const Assignment pa = table.At(p);
              verdict.counterexample = Counterexample{
                  pa, pa,
                  internal::Describe("pairwise monotonicity fails", e, i, j)};
              return verdict;
            }
          }
        }
      }
    }
    // Orthant submodularity: Δ_{e,i}f(p) >= Δ_{e,i}f(q) for p ⪯ q.
    std::vector<int> support;
    for (std::uint64_t q = 0; q < table.size(); ++q) {
      support.clear();
      for (int e = 0; e < n; ++e) {
        if (table.label(q, e) != 0) support.push_back(e);
      }
      const std::uint64_t subsets = 1ull << support.size();
      for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        std::uint64_t p = q;
        for (size_t b = 0; b < support.size(); ++b) {
          if ((mask >> b & 1u) == 0) {
            p -= table.place(support[b]) * table.label(q, support[b]);
          }
        }
        for (int e = 0; e < n; ++e) {
          if (table.label(q, e) != 0) continue;
          for (int i = 1; i <= k; ++i) {
            ++verdict.checks;
            const std::uint64_t step = table.place(e) * i;
            const double gp = table.value(p + step) - table.value(p);
            const double gq = table.value(q + step) - table.value(q);
            if (gp < gq) {
              verdict.holds = false;
              verdict.counterexample = Counterexample{
                  table.At(p), table.At(q),
                  internal::Describe("orthant submodularity fails", e, i)};
              return verdict;
            }
          }
        }
      }
    }
    return verdict;
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> element(0, n - 1);
  std::uniform_int_distribution<int> position(1, k);
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    const Assignment q = internal::RandomAssignment(n, k, rng);
    const Assignment p = internal::RandomBelow(q, rng);
    const int e = element(rng);
    ++verdict.checks;
    if (q[e] != 0) continue;
    const int i = position(rng);
    const double fp = f.Evaluate(p);
    const double gp = f.Evaluate(p.With(e, i)) - fp;
    const double gq = f.Evaluate(q.With(e, i)) - f.Evaluate(q);
    if (gp < gq) {
      verdict.holds = false;
      verdict.counterexample = Counterexample{
          p, q, internal::Describe("orthant submodularity fails", e, i)};
      return verdict;
    }
    if (k >= 2) {
      int j = position(rng);
      if (j == i) j = i % k + 1;
      const double gj = f.Evaluate(p.With(e, j)) - fp;
      if (gp + gj < 0) {
        verdict.holds = false;
        verdict.counterexample = Counterexample{
            p, p, internal::Describe("pairwise monotonicity fails", e, i, j)};
        return verdict;
      }
    }
  }
  return verdict;
}

// Checks f(p) <= f(q) for all p ⪯ q.
template <KSubFunction F>
Verdict VerifyMonotone(const F& f, const VerifyOptions& options = {}) {
  const int n = f.n();
  const int k = f.k();
  Verdict verdict;
  verdict.exhaustive = internal::UseExhaustive(n, k, options);

  if (verdict.exhaustive) {
    const internal::ValueTable table(f);
    std::vector<int> support;
    for (std::uint64_t q = 0; q < table.size(); ++q) {
      support.clear();
      for (int e = 0; e < n; ++e) {
        if (table.label(q, e) != 0) support.push_back(e);
      }
      const std::uint64_t subsets = 1ull << support.size();
      for (std::uint64_t mask = 0; mask + 1 < subsets; ++mask) {
        std::uint64_t p = q;
        for (size_t b = 0; b < support.size(); ++b) {
          if ((mask >> b & 1u) == 0) {
            p -= table.place(support[b]) * table.label(q, support[b]);
          }
        }
        ++verdict.checks;
        if (table.value(p) > table.value(q)) {
          verdict.holds = false;
          verdict.counterexample =
              Counterexample{table.At(p), table.At(q), "f(p) > f(q)"};
          return verdict;
        }
      }
    }
    return verdict;
  }

  std::mt19937_64 rng(options.seed);
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    const Assignment q = internal::RandomAssignment(n, k, rng);
    const Assignment p = internal::RandomBelow(q, rng);
    ++verdict.checks;
    if (f.Evaluate(p) > f.Evaluate(q)) {
      verdict.holds = false;
      verdict.counterexample = Counterexample{p, q, "f(p) > f(q)"};
      return verdict;
    }
  }
  return verdict;
}

// f(q) - f(p) <= Σ_{e ∈ supp(q) \ supp(p)} Δ_{e,q(e)} f(p), for p ⪯ q.
// Always true when f is k-submodular.
template <KSubFunction F>
bool CheckOrthantBound(const F& f, const Assignment& p, const Assignment& q) {
  if (!Precedes(p, q)) {
    throw std::invalid_argument("CheckOrthantBound requires p ⪯ q");
  }
  const double fp = f.Evaluate(p);
  double bound = 0;
  for (int e = 0; e < q.n(); ++e) {
    if (q[e] != 0 && p[e] == 0) bound += f.Evaluate(p.With(e, q[e])) - fp;
  }
  return f.Evaluate(q) - fp <= bound;
}

}  // namespace ksub

#endif  // KSUB_VERIFY_H_
