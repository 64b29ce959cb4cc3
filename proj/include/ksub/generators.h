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

// Seeded random instance generators. All real values are multiples of 1/64,
// so sums stay exact in double precision.

#ifndef KSUB_GENERATORS_H_
#define KSUB_GENERATORS_H_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "ksub/functions.h"
#include "ksub/matroid.h"

namespace ksub {

inline constexpr double kValueQuantum = 1.0 / 64;

struct ModularOptions {
  int n = 4;
  int k = 2;
  // Entries are drawn from [-value_range, value_range] (or [0, value_range]
  // when monotone).
  double value_range = 4;
  bool monotone = true;
  // Resample until at least one entry is negative. Requires !monotone.
  bool force_negative = false;
};

inline ModularFunction GenModular(const ModularOptions& options,
                                  std::uint64_t seed) {
  if (options.n < 1 || options.k < 1) {
    throw std::invalid_argument("GenModular: n and k must be >= 1");
  }
  const auto steps =
      static_cast<std::int64_t>(std::floor(options.value_range / kValueQuantum));
  if (steps < 0) throw std::invalid_argument("GenModular: negative range");
  if (options.force_negative && (options.monotone || steps == 0)) {
    throw std::invalid_argument(
        "GenModular: a forced negative entry needs monotone=false and a "
        "nonzero range");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> draw(
      options.monotone ? 0 : -steps, steps);

  auto row_ok = [&](const std::vector<double>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
      for (size_t j = i + 1; j < row.size(); ++j) {
        if (row[i] + row[j] < 0) return false;
      }
    }
    return true;
  };

  std::vector<std::vector<double>> table(static_cast<size_t>(options.n));
  while (true) {
    bool has_negative = false;
    for (auto& row : table) {
      do {
        row.assign(static_cast<size_t>(options.k), 0);
        for (double& v : row) v = static_cast<double>(draw(rng)) * kValueQuantum;
      } while (!row_ok(row));
      for (double v : row) has_negative |= v < 0;
    }
    if (!options.force_negative || has_negative) break;
  }
  return ModularFunction(options.k, std::move(table));
}

struct CoverageOptions {
  int n = 4;
  int k = 2;
  int universe_size = 8;
  // Probability that an item belongs to a given sets[e][i].
  double density = 0.3;
  bool unit_weights = false;
};

inline CoverageFunction GenCoverage(const CoverageOptions& options,
                                    std::uint64_t seed) {
  if (options.n < 1 || options.k < 1 || options.universe_size < 1) {
    throw std::invalid_argument(
        "GenCoverage: n, k and universe_size must be >= 1");
  }
  if (!(options.density >= 0 && options.density <= 1)) {
    throw std::invalid_argument("GenCoverage: density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(0, 64);
  std::bernoulli_distribution member(options.density);

  std::vector<double> weights(static_cast<size_t>(options.universe_size));
  for (double& w : weights) {
    w = options.unit_weights ? 1.0 : weight(rng) * kValueQuantum;
  }
  std::vector<std::vector<std::vector<int>>> sets(
      static_cast<size_t>(options.n),
      std::vector<std::vector<int>>(static_cast<size_t>(options.k)));
  for (auto& element : sets) {
    for (auto& items : element) {
      for (int u = 0; u < options.universe_size; ++u) {
        if (member(rng)) items.push_back(u);
      }
    }
  }
  return CoverageFunction(options.k, std::move(weights), std::move(sets));
}

// Elements are spread uniformly at random over `block_count` blocks; each
// capacity is drawn from [1, max_capacity].
inline PartitionMatroid GenPartitionMatroid(int n, int block_count,
                                            int max_capacity,
                                            std::uint64_t seed) {
  if (n < 0 || block_count < 1 || max_capacity < 1) {
    throw std::invalid_argument(
        "GenPartitionMatroid: need n >= 0, block_count >= 1, max_capacity >= 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> block(0, block_count - 1);
  std::uniform_int_distribution<int> capacity(1, max_capacity);
  std::vector<std::vector<int>> blocks(static_cast<size_t>(block_count));
  for (int e = 0; e < n; ++e) blocks[block(rng)].push_back(e);
  std::vector<int> caps(static_cast<size_t>(block_count));
  for (int& c : caps) c = capacity(rng);
  return PartitionMatroid(n, std::move(blocks), std::move(caps));
}

// Linear matroid over GF(2): element e is a random vector in GF(2)^dimension
// (possibly zero, i.e. a loop), and a set is independent when its vectors
// are linearly independent. Returned in explicit form.
inline ExplicitMatroid GenBinaryMatroid(int n, int dimension,
                                        std::uint64_t seed) {
  if (n < 0 || n > ExplicitMatroid::kMaxGroundSize) {
    throw std::invalid_argument("GenBinaryMatroid: n must lie in [0, 16]");
  }
  if (dimension < 1 || dimension > 63) {
    throw std::invalid_argument("GenBinaryMatroid: dimension in [1, 63]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> vector_draw(
      0, (std::uint64_t{1} << dimension) - 1);
  std::vector<std::uint64_t> vectors(static_cast<size_t>(n));
  for (auto& v : vectors) v = vector_draw(rng);

  auto independent = [&](std::uint64_t mask) {
    std::vector<std::uint64_t> basis;  // reduced, distinct leading bits
    for (int e = 0; e < n; ++e) {
      if (!(mask >> e & 1u)) continue;
      std::uint64_t v = vectors[e];
      for (std::uint64_t b : basis) v = std::min(v, v ^ b);
      if (v == 0) return false;
      basis.push_back(v);
      std::sort(basis.rbegin(), basis.rend());
    }
    return true;
  };
  std::vector<std::uint64_t> family;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (independent(mask)) family.push_back(mask);
  }
  return ExplicitMatroid(n, std::move(family));
}

}  // namespace ksub

#endif  // KSUB_GENERATORS_H_
