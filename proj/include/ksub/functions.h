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

// Shipped k-submodular function families.

#ifndef KSUB_FUNCTIONS_H_
#define KSUB_FUNCTIONS_H_

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ksub/assignment.h"
#include "ksub/oracle.h"

namespace ksub {

// f(p) = Σ_{e ∈ supp(p)} table[e][p(e) - 1]. Every row must satisfy
// table[e][i] + table[e][j] >= 0 for i != j; marginal gains are constant, so
// this is exactly pairwise monotonicity and f is k-submodular.
class ModularFunction {
 public:
  ModularFunction() = default;
  ModularFunction(int k, std::vector<std::vector<double>> table)
      : k_(k), table_(std::move(table)) {
    if (k < 1) throw std::invalid_argument("modular function: k must be >= 1");
    for (size_t e = 0; e < table_.size(); ++e) {
      const auto& row = table_[e];
      if (static_cast<int>(row.size()) != k) {
        throw std::invalid_argument(
            "modular function: row a[" + std::to_string(e) + "] has " +
            std::to_string(row.size()) + " entries, expected k = " +
            std::to_string(k));
      }
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
          if (row[i] + row[j] < 0) {
            std::ostringstream msg;
            msg << "modular function: row a[" << e << "] violates pairwise "
                << "monotonicity: a[" << e << "][" << i + 1 << "] + a[" << e
                << "][" << j + 1 << "] = " << row[i] + row[j] << " < 0";
            throw std::invalid_argument(msg.str());
          }
        }
      }
    }
  }

  int n() const { return static_cast<int>(table_.size()); }
  int k() const { return k_; }
  const std::vector<std::vector<double>>& table() const { return table_; }

  double Evaluate(const Assignment& a) const {
    double sum = 0;
    for (int e = 0; e < a.n(); ++e) {
      if (a[e] != 0) sum += table_[e][a[e] - 1];
    }
    return sum;
  }

  bool IsMonotone() const {
    for (const auto& row : table_) {
      for (double v : row) {
        if (v < 0) return false;
      }
    }
    return true;
  }

  friend bool operator==(const ModularFunction&,
                         const ModularFunction&) = default;

 private:
  int k_ = 1;
  std::vector<std::vector<double>> table_;
};

// Weighted coverage: element e placed at position i covers the universe items
// sets[e][i-1]; f(p) is the total weight of the covered items. Monotone and
// k-submodular.
class CoverageFunction {
 public:
  CoverageFunction(int k, std::vector<double> weights,
                   std::vector<std::vector<std::vector<int>>> sets)
      : k_(k), weights_(std::move(weights)), sets_(std::move(sets)) {
    if (k < 1) throw std::invalid_argument("coverage function: k must be >= 1");
    for (size_t u = 0; u < weights_.size(); ++u) {
      if (!(weights_[u] >= 0)) {
        throw std::invalid_argument("coverage function: weights[" +
                                    std::to_string(u) + "] is negative");
      }
    }
    for (size_t e = 0; e < sets_.size(); ++e) {
      if (static_cast<int>(sets_[e].size()) != k) {
        throw std::invalid_argument(
            "coverage function: sets[" + std::to_string(e) + "] has " +
            std::to_string(sets_[e].size()) + " positions, expected k = " +
            std::to_string(k));
      }
      for (size_t i = 0; i < sets_[e].size(); ++i) {
        for (int u : sets_[e][i]) {
          if (u < 0 || u >= static_cast<int>(weights_.size())) {
            throw std::invalid_argument(
                "coverage function: sets[" + std::to_string(e) + "][" +
                std::to_string(i) + "] names item " + std::to_string(u) +
                " outside the universe");
          }
        }
      }
    }
  }

  int n() const { return static_cast<int>(sets_.size()); }
  int k() const { return k_; }
  int universe_size() const { return static_cast<int>(weights_.size()); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<std::vector<std::vector<int>>>& sets() const {
    return sets_;
  }

  double Evaluate(const Assignment& a) const {
    std::vector<char> covered(weights_.size(), 0);
    double sum = 0;
    for (int e = 0; e < a.n(); ++e) {
      if (a[e] == 0) continue;
      for (int u : sets_[e][a[e] - 1]) {
        if (!covered[u]) {
          covered[u] = 1;
          sum += weights_[u];
        }
      }
    }
    return sum;
  }

  friend bool operator==(const CoverageFunction&,
                         const CoverageFunction&) = default;

 private:
  int k_;
  std::vector<double> weights_;
  std::vector<std::vector<std::vector<int>>> sets_;
};

// Full value table indexed by Encode(): values[Σ_e p(e) (k+1)^e].
class ExplicitFunction {
 public:
  ExplicitFunction(int n, int k, std::vector<double> values)
      : n_(n), k_(k), values_(std::move(values)) {
    if (n < 0 || k < 1) {
      throw std::invalid_argument("explicit function: need n >= 0, k >= 1");
    }
    if (DomainSize(n, k) != values_.size()) {
      throw std::invalid_argument(
          "explicit function: table has " + std::to_string(values_.size()) +
          " entries, expected (k+1)^n = " + std::to_string(DomainSize(n, k)));
    }
    if (values_[0] != 0) {
      throw std::invalid_argument(
          "explicit function: value of the empty assignment must be 0");
    }
  }

  template <KSubFunction F>
  static ExplicitFunction Tabulate(const F& f) {
    const std::uint64_t size = DomainSize(f.n(), f.k());
    std::vector<double> values(size);
    for (std::uint64_t code = 0; code < size; ++code) {
      values[code] = f.Evaluate(Decode(code, f.n(), f.k()));
    }
    return ExplicitFunction(f.n(), f.k(), std::move(values));
  }

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<double>& values() const { return values_; }

  double Evaluate(const Assignment& a) const { return values_[Encode(a)]; }

  friend bool operator==(const ExplicitFunction&,
                         const ExplicitFunction&) = default;

 private:
  int n_;
  int k_;
  std::vector<double> values_;
};

}  // namespace ksub

#endif  // KSUB_FUNCTIONS_H_
