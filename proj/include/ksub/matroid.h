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

#ifndef KSUB_MATROID_H_
#define KSUB_MATROID_H_

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ksub/oracle.h"

namespace ksub {

// Subset of a ground set {0, ..., universe-1} as a packed bitset. Ground sets
// of up to 64 elements fit in one word.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe)
      : universe_(universe), words_(WordCount(universe), 0) {}

  static ElementSet FromMask(int universe, std::uint64_t mask) {
    if (universe > 64) throw std::invalid_argument("mask needs universe <= 64");
    if (universe < 64 && (mask >> universe) != 0) {
      throw std::invalid_argument("mask has bits outside the ground set");
    }
    ElementSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

  static ElementSet FromElements(int universe, std::span<const int> elements) {
    ElementSet s(universe);
    for (int e : elements) s.Insert(e);
    return s;
  }

  static ElementSet FromAssignmentSupport(const Assignment& a) {
    ElementSet s(a.n());
    for (int e = 0; e < a.n(); ++e) {
      if (a[e] != 0) s.Insert(e);
    }
    return s;
  }

  int universe() const { return universe_; }

  bool Contains(int e) const {
    return (words_[static_cast<size_t>(e) / 64] >> (e % 64)) & 1u;
  }
  void Insert(int e) {
    Check(e);
    words_[static_cast<size_t>(e) / 64] |= std::uint64_t{1} << (e % 64);
  }
  void Erase(int e) {
    Check(e);
    words_[static_cast<size_t>(e) / 64] &= ~(std::uint64_t{1} << (e % 64));
  }
  ElementSet With(int e) const {
    ElementSet out = *this;
    out.Insert(e);
    return out;
  }
  ElementSet Without(int e) const {
    ElementSet out = *this;
    out.Erase(e);
    return out;
  }

  int size() const {
    int count = 0;
    for (std::uint64_t w : words_) count += std::popcount(w);
    return count;
  }
  bool empty() const { return size() == 0; }

  bool IsSubsetOf(const ElementSet& other) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
  }

  std::uint64_t Mask() const {
    if (universe_ > 64) throw std::logic_error("ElementSet wider than 64");
    return words_.empty() ? 0 : words_[0];
  }

  std::vector<int> Elements() const {
    std::vector<int> out;
    for (int e = 0; e < universe_; ++e) {
      if (Contains(e)) out.push_back(e);
    }
    return out;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  static size_t WordCount(int universe) {
    if (universe < 0) throw std::invalid_argument("negative universe");
    return (static_cast<size_t>(universe) + 63) / 64;
  }
  void Check(int e) const {
    if (e < 0 || e >= universe_) {
      throw std::out_of_range("element " + std::to_string(e) +
                              " outside ground set of size " +
                              std::to_string(universe_));
    }
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// An independence system over {0, ..., ground_size()-1}. IsIndependent is the
// raw, uncounted membership test; solvers go through IndependenceOracle.
template <typename M>
concept Matroid = requires(const M& m, const ElementSet& s) {
  { m.ground_size() } -> std::convertible_to<int>;
  { m.IsIndependent(s) } -> std::convertible_to<bool>;
};

// Independent sets are exactly the sets of size <= budget.
class UniformMatroid {
 public:
  UniformMatroid(int n, int budget) : n_(n), budget_(budget) {
    if (n < 0) throw std::invalid_argument("uniform matroid: negative n");
    if (budget < 0) {
      throw std::invalid_argument("uniform matroid: negative budget");
    }
  }

  int ground_size() const { return n_; }
  int budget() const { return budget_; }
  int rank() const { return std::min(n_, budget_); }
  bool IsIndependent(const ElementSet& s) const { return s.size() <= budget_; }

  friend bool operator==(const UniformMatroid&,
                         const UniformMatroid&) = default;

 private:
  int n_;
  int budget_;
};

// Blocks partition the ground set; a set is independent when it takes at most
// capacity[j] elements from block j.
class PartitionMatroid {
 public:
  PartitionMatroid(int n, std::vector<std::vector<int>> blocks,
                   std::vector<int> capacities)
      : n_(n),
        blocks_(std::move(blocks)),
        capacities_(std::move(capacities)),
        block_of_(static_cast<size_t>(std::max(n, 0)), -1) {
    if (n < 0) throw std::invalid_argument("partition matroid: negative n");
    if (blocks_.size() != capacities_.size()) {
      throw std::invalid_argument(
          "partition matroid: blocks and caps differ in length (" +
          std::to_string(blocks_.size()) + " vs " +
          std::to_string(capacities_.size()) + ")");
    }
    for (size_t j = 0; j < blocks_.size(); ++j) {
      if (capacities_[j] < 0) {
        throw std::invalid_argument("partition matroid: negative cap for block " +
                                    std::to_string(j));
      }
      for (int e : blocks_[j]) {
        if (e < 0 || e >= n) {
          throw std::invalid_argument("partition matroid: block " +
                                      std::to_string(j) + " has element " +
                                      std::to_string(e) + " outside [0, n)");
        }
        if (block_of_[e] != -1) {
          throw std::invalid_argument("partition matroid: element " +
                                      std::to_string(e) +
                                      " appears in two blocks");
        }
        block_of_[e] = static_cast<int>(j);
      }
    }
    for (int e = 0; e < n; ++e) {
      if (block_of_[e] == -1) {
        throw std::invalid_argument("partition matroid: element " +
                                    std::to_string(e) + " is in no block");
      }
    }
  }

  int ground_size() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& capacities() const { return capacities_; }

  int rank() const {
    int r = 0;
    for (size_t j = 0; j < blocks_.size(); ++j) {
      r += std::min<int>(capacities_[j], static_cast<int>(blocks_[j].size()));
    }
    return r;
  }

  bool IsIndependent(const ElementSet& s) const {
    std::vector<int> used(blocks_.size(), 0);
    for (int e = 0; e < n_; ++e) {
      if (s.Contains(e) && ++used[block_of_[e]] > capacities_[block_of_[e]]) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(const PartitionMatroid& a, const PartitionMatroid& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_ &&
           a.capacities_ == b.capacities_;
  }

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> capacities_;
  std::vector<int> block_of_;
};

// A matroid given by the full list of its independent sets as bitmasks. The
// family is validated at construction: it must contain the empty set, be
// closed under taking subsets, and have a submodular rank function (which,
// for a downward-closed family, is equivalent to the exchange axiom).
class ExplicitMatroid {
 public:
  static constexpr int kMaxGroundSize = 16;

  ExplicitMatroid(int n, std::vector<std::uint64_t> independent_sets)
      : n_(n), sets_(std::move(independent_sets)) {
    if (n < 0 || n > kMaxGroundSize) {
      throw std::invalid_argument("explicit matroid: n must lie in [0, 16]");
    }
    const std::uint64_t full = std::uint64_t{1} << n;
    independent_.assign(full, false);
    for (std::uint64_t mask : sets_) {
      if (mask >= full) {
        throw std::invalid_argument("explicit matroid: bitmask " +
                                    std::to_string(mask) +
                                    " outside the ground set");
      }
      independent_[mask] = true;
    }
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
    if (!independent_[0]) {
      throw std::invalid_argument("explicit matroid: empty set missing");
    }
    for (std::uint64_t mask : sets_) {
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        const std::uint64_t sub = mask & ~(rest & (~rest + 1));
        if (!independent_[sub]) {
          throw std::invalid_argument(
              "explicit matroid: not closed under subsets (" +
              std::to_string(mask) + " listed, " + std::to_string(sub) +
              " missing)");
        }
      }
    }
    // rank(X) = max |I| over independent I ⊆ X.
    std::vector<int> rank(full, 0);
    for (std::uint64_t x = 0; x < full; ++x) {
      if (independent_[x]) {
        rank[x] = std::popcount(x);
        continue;
      }
      for (std::uint64_t rest = x; rest != 0; rest &= rest - 1) {
        rank[x] = std::max(rank[x], rank[x & ~(rest & (~rest + 1))]);
      }
    }
    for (std::uint64_t x = 0; x < full; ++x) {
      for (int a = 0; a < n; ++a) {
        const std::uint64_t ba = std::uint64_t{1} << a;
        if (x & ba) continue;
        for (int b = a + 1; b < n; ++b) {
          const std::uint64_t bb = std::uint64_t{1} << b;
          if (x & bb) continue;
          if (rank[x | ba] + rank[x | bb] < rank[x | ba | bb] + rank[x]) {
            throw std::invalid_argument(
                "explicit matroid: exchange axiom fails around set " +
                std::to_string(x) + " with elements " + std::to_string(a) +
                ", " + std::to_string(b));
          }
        }
      }
    }
    rank_ = rank[full - 1];
  }

  int ground_size() const { return n_; }
  int rank() const { return rank_; }
  // Sorted, deduplicated family.
  const std::vector<std::uint64_t>& independent_sets() const { return sets_; }

  bool IsIndependent(const ElementSet& s) const {
    return independent_[s.Mask()];
  }

  friend bool operator==(const ExplicitMatroid& a, const ExplicitMatroid& b) {
    return a.n_ == b.n_ && a.sets_ == b.sets_;
  }

 private:
  int n_;
  int rank_ = 0;
  std::vector<std::uint64_t> sets_;
  std::vector<bool> independent_;
};

// Closed sum of the shipped matroid families.
class AnyMatroid {
 public:
  using Variant = std::variant<UniformMatroid, PartitionMatroid, ExplicitMatroid>;

  AnyMatroid() : impl_(UniformMatroid(0, 0)) {}

  template <typename M>
    requires std::constructible_from<Variant, M>
  AnyMatroid(M m)  // NOLINT(google-explicit-constructor)
      : impl_(std::move(m)) {}

  int ground_size() const {
    return std::visit([](const auto& m) { return m.ground_size(); }, impl_);
  }
  bool IsIndependent(const ElementSet& s) const {
    return std::visit([&](const auto& m) { return m.IsIndependent(s); },
                      impl_);
  }

  const Variant& variant() const { return impl_; }
  friend bool operator==(const AnyMatroid&, const AnyMatroid&) = default;

 private:
  Variant impl_;
};

// Counts every independence query against a run's counters.
template <Matroid M>
class IndependenceOracle {
 public:
  IndependenceOracle(const M& m, OracleCounters& counters)
      : m_(m), counters_(counters) {}

  int ground_size() const { return m_.ground_size(); }

  bool operator()(const ElementSet& s) const {
    ++counters_.io_calls;
    return m_.IsIndependent(s);
  }

 private:
  const M& m_;
  OracleCounters& counters_;
};

// Size of the basis found by greedily extending ∅ over e = 0..n-1. One IO
// call per element.
template <Matroid M>
int Rank(const M& m, OracleCounters& counters) {
  IndependenceOracle<M> oracle(m, counters);
  ElementSet basis(m.ground_size());
  for (int e = 0; e < m.ground_size(); ++e) {
    if (oracle(basis.With(e))) basis.Insert(e);
  }
  return basis.size();
}

// { e ∉ s : s ∪ {e} independent }. Exactly |E \ s| IO calls.
template <Matroid M>
std::vector<int> FeasibleExtensions(const M& m, const ElementSet& s,
                                    OracleCounters& counters) {
  if (!m.IsIndependent(s)) {
    throw std::invalid_argument("FeasibleExtensions: set is not independent");
  }
  IndependenceOracle<M> oracle(m, counters);
  std::vector<int> out;
  for (int e = 0; e < m.ground_size(); ++e) {
    if (!s.Contains(e) && oracle(s.With(e))) out.push_back(e);
  }
  return out;
}

// Uncounted: s is independent and no element extends it.
template <Matroid M>
bool IsBasis(const M& m, const ElementSet& s) {
  if (!m.IsIndependent(s)) return false;
  for (int e = 0; e < m.ground_size(); ++e) {
    if (!s.Contains(e) && m.IsIndependent(s.With(e))) return false;
  }
  return true;
}

// Given independent a ⊊ basis b and e ∉ a with a ∪ {e} independent, returns
// whether some e' ∈ b \ a makes (b \ {e'}) ∪ {e} a basis. Uncounted.
template <Matroid M>
bool CheckBasisExchange(const M& m, const ElementSet& a, const ElementSet& b,
                        int e) {
  if (!m.IsIndependent(a)) {
    throw std::invalid_argument("basis exchange: a is not independent");
  }
  if (!IsBasis(m, b)) {
    throw std::invalid_argument("basis exchange: b is not a basis");
  }
  if (!a.IsSubsetOf(b) || a == b) {
    throw std::invalid_argument("basis exchange: a is not a proper subset of b");
  }
  if (e < 0 || e >= m.ground_size()) {
    throw std::out_of_range("basis exchange: e outside the ground set");
  }
  if (a.Contains(e)) {
    throw std::invalid_argument("basis exchange: e already in a");
  }
  if (!m.IsIndependent(a.With(e))) {
    throw std::invalid_argument("basis exchange: a + e is not independent");
  }
  for (int swap = 0; swap < m.ground_size(); ++swap) {
    if (!b.Contains(swap) || a.Contains(swap)) continue;
    if (IsBasis(m, b.Without(swap).With(e))) return true;
  }
  return false;
}


struct AxiomReport {
  bool holds = true;
  bool exhaustive = true;
  std::string violation;  // empty when holds
};

// Direct check of the three independence axioms: ∅ independent, closure
// under removing one element, and augmentation for every pair |A| + 1 = |B|
// (which implies the general |A| < |B| form under downward closure).
// Exhaustive up to max_exhaustive elements; beyond that `samples` random
// pairs are tested.
template <Matroid M>
AxiomReport CheckMatroidAxioms(const M& m, int max_exhaustive = 12,
                               std::uint64_t samples = 20'000,
                               std::uint64_t seed = 0) {
  const int n = m.ground_size();
  AxiomReport report;
  if (!m.IsIndependent(ElementSet(n))) {
    report.holds = false;
    report.violation = "empty set is not independent";
    return report;
  }
  auto augmentable = [&](const ElementSet& a, const ElementSet& b) {
    for (int e = 0; e < n; ++e) {
      if (b.Contains(e) && !a.Contains(e) && m.IsIndependent(a.With(e))) {
        return true;
      }
    }
    return false;
  };
  auto describe = [](const ElementSet& s) {
    std::string out = "{";
    for (int e : s.Elements()) out += (out.size() > 1 ? "," : "") + std::to_string(e);
    return out + "}";
  };

  if (n <= max_exhaustive) {
    std::vector<std::vector<std::uint64_t>> by_size(static_cast<size_t>(n) + 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const ElementSet s = ElementSet::FromMask(n, mask);
      if (!m.IsIndependent(s)) continue;
      for (int e : s.Elements()) {
        if (!m.IsIndependent(s.Without(e))) {
          report.holds = false;
          report.violation = "independent " + describe(s) +
                             " has dependent subset " + describe(s.Without(e));
          return report;
        }
      }
      by_size[static_cast<size_t>(std::popcount(mask))].push_back(mask);
    }
    for (int size = 0; size < n; ++size) {
      for (std::uint64_t a_mask : by_size[size]) {
        const ElementSet a = ElementSet::FromMask(n, a_mask);
        for (std::uint64_t b_mask : by_size[size + 1]) {
          const ElementSet b = ElementSet::FromMask(n, b_mask);
          if (!augmentable(a, b)) {
            report.holds = false;
            report.violation = "no element of " + describe(b) + " augments " +
                               describe(a);
            return report;
          }
        }
      }
    }
    return report;
  }

  // Sampled: random independent sets grown greedily in random orders.
  report.exhaustive = false;
  std::mt19937_64 rng(seed);
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  auto random_independent = [&](int target) {
    std::shuffle(order.begin(), order.end(), rng);
    ElementSet s(n);
    for (int e : order) {
      if (s.size() >= target) break;
      if (m.IsIndependent(s.With(e))) s.Insert(e);
    }
    return s;
  };
  std::uniform_int_distribution<int> size_draw(0, n);
  for (std::uint64_t t = 0; t < samples; ++t) {
    const ElementSet b = random_independent(size_draw(rng));
    if (b.empty()) continue;
    std::vector<int> members = b.Elements();
    const int drop = members[std::uniform_int_distribution<size_t>(
        0, members.size() - 1)(rng)];
    if (!m.IsIndependent(b.Without(drop))) {
      report.holds = false;
      report.violation = "independent " + describe(b) +
                         " has dependent subset " + describe(b.Without(drop));
      return report;
    }
    const ElementSet a = random_independent(b.size() - 1);
    if (a.size() == b.size() - 1 && !augmentable(a, b)) {
      report.holds = false;
      report.violation =
          "no element of " + describe(b) + " augments " + describe(a);
      return report;
    }
  }
  return report;
}

}  // namespace ksub

#endif  // KSUB_MATROID_H_
