// Copyright 2026 The Qutrit QIR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qutrit/gates.hpp"
#include "qutrit/ternary.hpp"

namespace qutrit {

/// The op fires only on basis components where `qutrit` holds `value`.
struct ControlSpec {
  std::size_t qutrit = 0;
  Trit value = 0;

  bool operator==(const ControlSpec&) const = default;
};

struct CircuitOp {
  GateSpec gate;
  std::size_t target = 0;
  std::vector<ControlSpec> controls;

  /// Throws ArgumentError unless the gate is well formed, every index is
  /// below `num_qutrits`, and target/control qutrits are pairwise distinct.
  void validate(std::size_t num_qutrits) const;

  bool operator==(const CircuitOp&) const = default;
};

/// Ordered list of ops over a fixed register. Ops are validated on append.
class Circuit {
 public:
  explicit Circuit(std::size_t num_qutrits);

  std::size_t num_qutrits() const { return num_qutrits_; }
  const std::vector<CircuitOp>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }

  void append(CircuitOp op);
  void append(GateSpec gate, std::size_t target,
              std::vector<ControlSpec> controls = {});

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t num_qutrits_;
  std::vector<CircuitOp> ops_;
};

/// Canonical circuit JSON:
///   {"num_qutrits": q, "ops": [{"gate": "RY", "subspace": [0,1],
///     "params": [θ], "target": 0, "controls": [{"q": 1, "v": 0}]}, ...]}
/// Gates without a subspace write "subspace": null. Angles are written with
/// round-trip precision.
std::string circuit_to_json(const Circuit& circuit);

/// Throws ParseError on malformed JSON or schema violations.
Circuit circuit_from_json(std::string_view text);

}  // namespace qutrit
