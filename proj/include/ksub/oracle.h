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

#ifndef KSUB_ORACLE_H_
#define KSUB_ORACLE_H_

#include <concepts>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include "ksub/assignment.h"

namespace ksub {

// Oracle-call tally of one solver run. EO counts value-oracle evaluations, IO
// counts independence-oracle queries.
struct OracleCounters {
  std::uint64_t eo_calls = 0;
  std::uint64_t io_calls = 0;

  void Reset() { *this = OracleCounters{}; }
  friend bool operator==(const OracleCounters&,
                         const OracleCounters&) = default;
};

// A set function over k-tuples of a ground set of size n. Implementations
// must be deterministic and normalized (Evaluate of the zero assignment is 0).
template <typename F>
concept KSubFunction = requires(const F& f, const Assignment& a) {
  { f.n() } -> std::convertible_to<int>;
  { f.k() } -> std::convertible_to<int>;
  { f.Evaluate(a) } -> std::convertible_to<double>;
};

// Type-erased, shareable, immutable KSubFunction.
class AnyFunction {
 public:
  template <KSubFunction F>
    requires(!std::same_as<std::decay_t<F>, AnyFunction>)
  AnyFunction(F f)  // NOLINT(google-explicit-constructor)
      : impl_(std::make_shared<Model<F>>(std::move(f))) {}

  int n() const { return impl_->n(); }
  int k() const { return impl_->k(); }
  double Evaluate(const Assignment& a) const { return impl_->Evaluate(a); }

 private:
  struct Concept {
    virtual ~Concept() = default;
    virtual int n() const = 0;
    virtual int k() const = 0;
    virtual double Evaluate(const Assignment& a) const = 0;
  };
  template <typename F>
  struct Model final : Concept {
    explicit Model(F f) : fn(std::move(f)) {}
    int n() const override { return fn.n(); }
    int k() const override { return fn.k(); }
    double Evaluate(const Assignment& a) const override {
      return fn.Evaluate(a);
    }
    F fn;
  };

  std::shared_ptr<const Concept> impl_;
};

// Counts every evaluation against a run's counters.
template <KSubFunction F>
class ValueOracle {
 public:
  ValueOracle(const F& f, OracleCounters& counters)
      : f_(f), counters_(counters) {}

  int n() const { return f_.n(); }
  int k() const { return f_.k(); }

  double operator()(const Assignment& a) const {
    ++counters_.eo_calls;
    return f_.Evaluate(a);
  }

 private:
  const F& f_;
  OracleCounters& counters_;
};

namespace internal {
inline void CheckMarginalArgs(const Assignment& a, int e, int i) {
  if (e < 0 || e >= a.n()) {
    throw std::out_of_range("element " + std::to_string(e) +
                            " outside ground set");
  }
  if (a[e] != 0) {
    throw std::invalid_argument("element " + std::to_string(e) +
                                " already in the support");
  }
  if (i < 1 || i > a.k()) {
    throw std::invalid_argument("position " + std::to_string(i) +
                                " outside [1, " + std::to_string(a.k()) + "]");
  }
}
}  // namespace internal

// Δ_{e,i} f(a) given the already known base value f(a). Costs 1 EO call; this
// is the policy the solvers use.
template <KSubFunction F>
double MarginalGain(const F& f, const Assignment& a, int e, int i,
                    double base_value, OracleCounters& counters) {
  internal::CheckMarginalArgs(a, e, i);
  ValueOracle<F> oracle(f, counters);
  return oracle(a.With(e, i)) - base_value;
}

// Δ_{e,i} f(a) = f(a + i*1_e) - f(a). Costs 2 EO calls.
template <KSubFunction F>
double MarginalGain(const F& f, const Assignment& a, int e, int i,
                    OracleCounters& counters) {
  internal::CheckMarginalArgs(a, e, i);
  ValueOracle<F> oracle(f, counters);
  const double base = oracle(a);
  return oracle(a.With(e, i)) - base;
}

}  // namespace ksub

#endif  // KSUB_ORACLE_H_
