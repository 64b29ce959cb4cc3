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

// Instance files. A document is a JSON object:
//
//   {
//     "n": 2,
//     "k": 2,
//     "function": {"modular": [[5, -3], [2, 2]]},
//     "matroid": {"uniform": 1},
//     "metadata": {...}                                   (optional)
//   }
//
// function is one of
//   {"modular": [[a_e1, ..., a_ek], ...]}                 n rows of k values
//   {"coverage": {"weights": [w_u, ...],
//                 "sets": [[[u, ...], ...k lists], ...n]}}
//   {"explicit": [v_0, ..., v_{(k+1)^n - 1}]}             indexed by Encode()
// matroid is one of
//   {"uniform": B}
//   {"partition": {"blocks": [[e, ...], ...], "caps": [c, ...]}}
//   {"explicit": [bitmask, ...]}                          all independent sets

#ifndef KSUB_INSTANCE_H_
#define KSUB_INSTANCE_H_

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "ksub/functions.h"
#include "ksub/matroid.h"
#include "ksub/oracle.h"
#include "ksub/verify.h"

namespace ksub {

using FunctionSpec =
    std::variant<ModularFunction, CoverageFunction, ExplicitFunction>;

struct InstanceSpec {
  int n = 0;
  int k = 1;
  FunctionSpec function;
  AnyMatroid matroid;
  nlohmann::json metadata;  // null when absent

  AnyFunction Function() const {
    return std::visit([](const auto& f) { return AnyFunction(f); }, function);
  }

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

// Malformed text or an invalid document. The message carries the byte
// offset (syntax errors) or the offending field path.
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace internal {

using nlohmann::json;

[[noreturn]] inline void Fail(const std::string& path, const std::string& why) {
  throw InstanceError(path + ": " + why);
}

inline const json& Field(const json& object, const std::string& key,
                         const std::string& path) {
  auto it = object.find(key);
  if (it == object.end()) Fail(path, "missing field \"" + key + "\"");
  return *it;
}

inline int AsInt(const json& value, const std::string& path) {
  if (!value.is_number_integer()) Fail(path, "expected an integer");
  const auto v = value.get<std::int64_t>();
  if (v < INT32_MIN || v > INT32_MAX) Fail(path, "integer out of range");
  return static_cast<int>(v);
}

inline double AsReal(const json& value, const std::string& path) {
  if (!value.is_number()) Fail(path, "expected a number");
  return value.get<double>();
}

inline const json& AsArray(const json& value, const std::string& path,
                           std::optional<size_t> size = std::nullopt) {
  if (!value.is_array()) Fail(path, "expected an array");
  if (size && value.size() != *size) {
    Fail(path, "expected " + std::to_string(*size) + " entries, found " +
                   std::to_string(value.size()));
  }
  return value;
}

// Exactly one key; returns it.
inline std::string Tag(const json& value, const std::string& path) {
  if (!value.is_object() || value.size() != 1) {
    Fail(path, "expected an object with exactly one tag");
  }
  return value.begin().key();
}

inline std::vector<int> IntList(const json& value, const std::string& path) {
  std::vector<int> out;
  const json& arr = AsArray(value, path);
  for (size_t i = 0; i < arr.size(); ++i) {
    out.push_back(AsInt(arr[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

inline FunctionSpec ParseFunction(const json& node, int n, int k) {
  const std::string tag = Tag(node, "function");
  const json& body = node.at(tag);
  const std::string path = "function." + tag;
  try {
    if (tag == "modular") {
      std::vector<std::vector<double>> table;
      const json& rows = AsArray(body, path, static_cast<size_t>(n));
      for (size_t e = 0; e < rows.size(); ++e) {
        const std::string row_path = path + "[" + std::to_string(e) + "]";
        const json& row = AsArray(rows[e], row_path, static_cast<size_t>(k));
        std::vector<double> values;
        for (size_t i = 0; i < row.size(); ++i) {
          values.push_back(
              AsReal(row[i], row_path + "[" + std::to_string(i) + "]"));
        }
        table.push_back(std::move(values));
      }
      return ModularFunction(k, std::move(table));
    }
    if (tag == "coverage") {
      std::vector<double> weights;
      const json& w = AsArray(Field(body, "weights", path), path + ".weights");
      for (size_t u = 0; u < w.size(); ++u) {
        weights.push_back(
            AsReal(w[u], path + ".weights[" + std::to_string(u) + "]"));
      }
      std::vector<std::vector<std::vector<int>>> sets;
      const json& s = AsArray(Field(body, "sets", path), path + ".sets",
                              static_cast<size_t>(n));
      for (size_t e = 0; e < s.size(); ++e) {
        const std::string e_path = path + ".sets[" + std::to_string(e) + "]";
        const json& positions = AsArray(s[e], e_path, static_cast<size_t>(k));
        std::vector<std::vector<int>> element;
        for (size_t i = 0; i < positions.size(); ++i) {
          element.push_back(
              IntList(positions[i], e_path + "[" + std::to_string(i) + "]"));
        }
        sets.push_back(std::move(element));
      }
      return CoverageFunction(k, std::move(weights), std::move(sets));
    }
    if (tag == "explicit") {
      const std::uint64_t size = DomainSize(n, k);
      if (size > (std::uint64_t{1} << 24)) {
        Fail(path, "explicit table for (k+1)^n = " + std::to_string(size) +
                       " entries is too large");
      }
      const json& arr = AsArray(body, path, static_cast<size_t>(size));
      std::vector<double> values;
      values.reserve(arr.size());
      for (size_t c = 0; c < arr.size(); ++c) {
        values.push_back(AsReal(arr[c], path + "[" + std::to_string(c) + "]"));
      }
      ExplicitFunction f(n, k, std::move(values));
      VerifyOptions exhaustive;
      exhaustive.pair_budget = size * size;
      exhaustive.allow_sampling = false;
      const Verdict verdict = VerifyKSubmodular(f, exhaustive);
      if (!verdict.holds) {
        std::ostringstream msg;
        msg << "table is not k-submodular: p=" << verdict.counterexample->p
            << " q=" << verdict.counterexample->q;
        Fail(path, msg.str());
      }
      return f;
    }
  } catch (const std::invalid_argument& e) {
    Fail(path, e.what());
  }
  Fail("function", "unknown function kind \"" + tag + "\"");
}

inline AnyMatroid ParseMatroid(const json& node, int n) {
  const std::string tag = Tag(node, "matroid");
  const json& body = node.at(tag);
  const std::string path = "matroid." + tag;
  try {
    if (tag == "uniform") return UniformMatroid(n, AsInt(body, path));
    if (tag == "partition") {
      std::vector<std::vector<int>> blocks;
      const json& b = AsArray(Field(body, "blocks", path), path + ".blocks");
      for (size_t j = 0; j < b.size(); ++j) {
        blocks.push_back(
            IntList(b[j], path + ".blocks[" + std::to_string(j) + "]"));
      }
      std::vector<int> caps = IntList(Field(body, "caps", path), path + ".caps");
      return PartitionMatroid(n, std::move(blocks), std::move(caps));
    }
    if (tag == "explicit") {
      std::vector<std::uint64_t> masks;
      const json& arr = AsArray(body, path);
      for (size_t j = 0; j < arr.size(); ++j) {
        const std::string item = path + "[" + std::to_string(j) + "]";
        if (!arr[j].is_number_unsigned()) Fail(item, "expected a bitmask");
        masks.push_back(arr[j].get<std::uint64_t>());
      }
      return ExplicitMatroid(n, std::move(masks));
    }
  } catch (const std::invalid_argument& e) {
    Fail(path, e.what());
  }
  Fail("matroid", "unknown matroid kind \"" + tag + "\"");
}

}  // namespace internal

inline InstanceSpec InstanceFromJson(const nlohmann::json& doc) {
  using internal::Field;
  if (!doc.is_object()) internal::Fail("document", "expected an object");
  InstanceSpec spec;
  spec.n = internal::AsInt(Field(doc, "n", "document"), "n");
  spec.k = internal::AsInt(Field(doc, "k", "document"), "k");
  if (spec.n < 0) internal::Fail("n", "must be >= 0");
  if (spec.k < 1 || spec.k > Assignment::kMaxPositions) {
    internal::Fail("k", "must lie in [1, 255]");
  }
  spec.function =
      internal::ParseFunction(Field(doc, "function", "document"), spec.n, spec.k);
  spec.matroid = internal::ParseMatroid(Field(doc, "matroid", "document"), spec.n);
  if (auto it = doc.find("metadata"); it != doc.end()) spec.metadata = *it;
  return spec;
}

inline InstanceSpec ParseInstance(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InstanceError("syntax error at byte " + std::to_string(e.byte) +
                        ": " + e.what());
  }
  return InstanceFromJson(doc);
}

inline InstanceSpec LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseInstance(buffer.str());
  } catch (const InstanceError& e) {
    throw InstanceError(path + ": " + e.what());
  }
}

inline nlohmann::json InstanceToJson(const InstanceSpec& spec) {
  using nlohmann::json;
  json doc = json::object();
  doc["n"] = spec.n;
  doc["k"] = spec.k;
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, ModularFunction>) {
          doc["function"] = {{"modular", f.table()}};
        } else if constexpr (std::is_same_v<T, CoverageFunction>) {
          doc["function"] = {
              {"coverage", {{"weights", f.weights()}, {"sets", f.sets()}}}};
        } else {
          doc["function"] = {{"explicit", f.values()}};
        }
      },
      spec.function);
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, UniformMatroid>) {
          doc["matroid"] = {{"uniform", m.budget()}};
        } else if constexpr (std::is_same_v<T, PartitionMatroid>) {
          doc["matroid"] = {
              {"partition", {{"blocks", m.blocks()}, {"caps", m.capacities()}}}};
        } else {
          doc["matroid"] = {{"explicit", m.independent_sets()}};
        }
      },
      spec.matroid.variant());
  if (!spec.metadata.is_null()) doc["metadata"] = spec.metadata;
  return doc;
}

inline std::string SerializeInstance(const InstanceSpec& spec) {
  return InstanceToJson(spec).dump(2) + "\n";
}

}  // namespace ksub

#endif  // KSUB_INSTANCE_H_
