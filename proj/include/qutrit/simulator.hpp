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

/**
 * @file
 * Dense statevector execution of value-controlled single-qutrit gates,
 * terminal computational-basis measurement, and shot sampling.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qutrit/circuit.hpp"
#include "qutrit/ternary.hpp"

namespace qutrit {

/// Applies `op` in place. Only amplitude triples whose control qutrits hold
/// the requested values are transformed; the full 3^q operator is never
/// formed.
void apply_op(Statevector& state, const CircuitOp& op);

/// |0...0⟩ followed by every op of `circuit` in order.
Statevector run(const Circuit& circuit);

/// |amplitude|² per basis index, ascending.
std::vector<double> probabilities(const Statevector& state);

/// Observed outcome counts over a q-qutrit register.
class ShotHistogram {
 public:
  explicit ShotHistogram(std::size_t num_qutrits);

  std::size_t num_qutrits() const { return num_qutrits_; }
  std::uint64_t shots() const { return shots_; }
  /// Nonzero counts keyed by basis index.
  const std::map<std::uint64_t, std::uint64_t>& counts() const {
    return counts_;
  }

  void add(std::uint64_t index, std::uint64_t count);
  void add(const TritString& state, std::uint64_t count);

  std::uint64_t count(std::uint64_t index) const;
  std::uint64_t count(const TritString& state) const;

  bool operator==(const ShotHistogram&) const = default;

 private:
  std::size_t num_qutrits_;
  std::uint64_t shots_ = 0;
  std::map<std::uint64_t, std::uint64_t> counts_;
};

/// Multinomial draw of `shots` outcomes from probabilities(state).
///
/// The draw is a sequence of conditional binomials over ascending basis
/// index driven by one std::mt19937_64 seeded with `seed`, so a given
/// (state, shots, seed) always yields the same histogram.
ShotHistogram sample(const Statevector& state, std::uint64_t shots,
                     std::uint64_t seed);

/// Probability table handed to the decoders: either exact |amp|² values
/// (shots == 0) or count/shots from a histogram.
struct OutcomeDistribution {
  std::size_t num_qutrits = 0;
  std::vector<double> probabilities;
  std::uint64_t shots = 0;

  static OutcomeDistribution exact(const Statevector& state);
  static OutcomeDistribution from_histogram(const ShotHistogram& histogram);

  bool is_exact() const { return shots == 0; }
};

/// "state,count" CSV, one row per observed outcome in ascending order.
std::string histogram_to_csv(const ShotHistogram& histogram);
ShotHistogram histogram_from_csv(std::string_view text);

/// "state,probability" CSV with a row for every basis state.
std::string probabilities_to_csv(const std::vector<double>& probabilities,
                                 std::size_t num_qutrits);

/// Reads either CSV flavour, picking by header.
OutcomeDistribution outcomes_from_csv(std::string_view text);

}  // namespace qutrit
