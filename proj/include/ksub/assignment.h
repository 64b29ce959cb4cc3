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

#ifndef KSUB_ASSIGNMENT_H_
#define KSUB_ASSIGNMENT_H_

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ksub {

// A k-tuple of pairwise disjoint subsets of the ground set {0, ..., n-1},
// stored as an n-vector of labels in {0, ..., k}. label(e) == i > 0 places e
// in the i-th set; 0 leaves e unassigned.
class Assignment {
 public:
  using Label = std::uint8_t;
  static constexpr int kMaxPositions = 255;

  Assignment() = default;

  // The all-zero assignment (empty k-tuple).
  Assignment(int n, int k) : k_(k), labels_(CheckedSize(n), 0) { CheckK(k); }

  Assignment(int k, std::span<const int> labels) : k_(k) {
    CheckK(k);
    labels_.reserve(labels.size());
    for (int l : labels) {
      if (l < 0 || l > k) {
        throw std::invalid_argument("label " + std::to_string(l) +
                                    " outside [0, " + std::to_string(k) + "]");
      }
      labels_.push_back(static_cast<Label>(l));
    }
  }

  Assignment(int k, std::initializer_list<int> labels)
      : Assignment(k, std::span<const int>(labels.begin(), labels.size())) {}

  int n() const { return static_cast<int>(labels_.size()); }
  int k() const { return k_; }

  int operator[](int e) const { return labels_[static_cast<size_t>(e)]; }
  int at(int e) const {
    CheckElement(e);
    return labels_[static_cast<size_t>(e)];
  }

  // Sets label(e) := i. i == 0 removes e from the support.
  void Set(int e, int i) {
    CheckElement(e);
    if (i < 0 || i > k_) {
      throw std::invalid_argument("position " + std::to_string(i) +
                                  " outside [0, " + std::to_string(k_) + "]");
    }
    labels_[static_cast<size_t>(e)] = static_cast<Label>(i);
  }

  // Returns a copy with label(e) := i (the unit update p + i * 1_e).
  Assignment With(int e, int i) const {
    Assignment out = *this;
    out.Set(e, i);
    return out;
  }

  bool Contains(int e) const { return (*this)[e] != 0; }

  bool IsZero() const {
    for (Label l : labels_) {
      if (l != 0) return false;
    }
    return true;
  }

  int SupportSize() const {
    int count = 0;
    for (Label l : labels_) count += (l != 0);
    return count;
  }

  std::span<const Label> labels() const { return labels_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Assignment& a) {
    os << '[';
    for (int e = 0; e < a.n(); ++e) {
      if (e > 0) os << ',';
      os << a[e];
    }
    return os << ']';
  }

 private:
  static size_t CheckedSize(int n) {
    if (n < 0) throw std::invalid_argument("negative ground-set size");
    return static_cast<size_t>(n);
  }
  static void CheckK(int k) {
    if (k < 1 || k > kMaxPositions) {
      throw std::invalid_argument("k must lie in [1, 255], got " +
                                  std::to_string(k));
    }
  }
  void CheckElement(int e) const {
    if (e < 0 || e >= n()) {
      throw std::out_of_range("element " + std::to_string(e) +
                              " outside ground set of size " +
                              std::to_string(n()));
    }
  }

  int k_ = 1;
  std::vector<Label> labels_;
};

// supp(a): the elements with a nonzero label, ascending.
inline std::vector<int> Support(const Assignment& a) {
  std::vector<int> out;
  for (int e = 0; e < a.n(); ++e) {
    if (a[e] != 0) out.push_back(e);
  }
  return out;
}

namespace internal {
inline void CheckSameShape(const Assignment& a, const Assignment& b) {
  if (a.n() != b.n() || a.k() != b.k()) {
    throw std::invalid_argument(
        "assignment shape mismatch: (n=" + std::to_string(a.n()) +
        ", k=" + std::to_string(a.k()) + ") vs (n=" + std::to_string(b.n()) +
        ", k=" + std::to_string(b.k()) + ")");
  }
}
}  // namespace internal

// a ⪯ b: every element a assigns is assigned to the same position by b.
inline bool Precedes(const Assignment& a, const Assignment& b) {
  internal::CheckSameShape(a, b);
  for (int e = 0; e < a.n(); ++e) {
    if (a[e] != 0 && a[e] != b[e]) return false;
  }
  return true;
}

// Coordinatewise intersection P_i ∩ Q_i.
inline Assignment Meet(const Assignment& a, const Assignment& b) {
  internal::CheckSameShape(a, b);
  Assignment out(a.n(), a.k());
  for (int e = 0; e < a.n(); ++e) {
    if (a[e] == b[e]) out.Set(e, a[e]);
  }
  return out;
}

// Coordinatewise union with conflicting labels cancelled to 0.
inline Assignment Join(const Assignment& a, const Assignment& b) {
  internal::CheckSameShape(a, b);
  Assignment out(a.n(), a.k());
  for (int e = 0; e < a.n(); ++e) {
    if (a[e] == 0) {
      out.Set(e, b[e]);
    } else if (b[e] == 0 || b[e] == a[e]) {
      out.Set(e, a[e]);
    }
  }
  return out;
}

// Mixed-radix code of an assignment: sum_e label(e) * (k+1)^e. Used to index
// explicit value tables and exhaustive enumerations.
inline std::uint64_t Encode(const Assignment& a) {
  std::uint64_t code = 0;
  std::uint64_t place = 1;
  for (int e = 0; e < a.n(); ++e) {
    code += place * static_cast<std::uint64_t>(a[e]);
    place *= static_cast<std::uint64_t>(a.k() + 1);
  }
  return code;
}

inline Assignment Decode(std::uint64_t code, int n, int k) {
  Assignment out(n, k);
  for (int e = 0; e < n; ++e) {
    out.Set(e, static_cast<int>(code % static_cast<std::uint64_t>(k + 1)));
    code /= static_cast<std::uint64_t>(k + 1);
  }
  return out;
}

// (k+1)^n, saturating at UINT64_MAX.
inline std::uint64_t DomainSize(int n, int k) {
  std::uint64_t size = 1;
  const std::uint64_t base = static_cast<std::uint64_t>(k + 1);
  for (int e = 0; e < n; ++e) {
    if (size > UINT64_MAX / base) return UINT64_MAX;
    size *= base;
  }
  return size;
}

}  // namespace ksub

#endif  // KSUB_ASSIGNMENT_H_
