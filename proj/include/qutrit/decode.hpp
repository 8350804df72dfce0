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
 * Image reconstruction from measured (or exact) outcome probabilities.
 *
 * Per-pixel probabilities are joint probabilities p(value, location) taken
 * straight from the distribution; the 3^n (or 3^{2n+1}) scale factors undo
 * the uniform location amplitude. No renormalisation by observed location
 * frequency is done.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qutrit/circuit.hpp"
#include "qutrit/encode.hpp"
#include "qutrit/image.hpp"
#include "qutrit/simulator.hpp"

namespace qutrit {

/// Below this, sin θ_r, sin θ_r · sin θ_g or cos θ_r is treated as zero by
/// the FQRQCI decoder and the dependent channels decode to 0.
inline constexpr double kDegenerateSine = 1e-6;

/// A clip only counts as an event when it moves the value by more than
/// this; exact probabilities overshoot domain edges by round-off only.
inline constexpr double kClipEventTolerance = 1e-12;

/// Probability above which a QRCIQ basis state counts as observed.
inline constexpr double kSupportThreshold = 1e-12;

/// A (plane, pixel, channel) QRCIQ digit that no observed outcome carried.
struct MissingState {
  std::size_t plane;
  std::uint64_t pixel;
  std::size_t channel;

  bool operator==(const MissingState&) const = default;
};

template <typename Image>
struct DecodeReport {
  Image image;
  std::size_t clip_events = 0;
  std::vector<MissingState> missing_states;
  std::uint64_t shots_used = 0;
};

using GrayDecodeReport = DecodeReport<GrayImage>;
using RgbDecodeReport = DecodeReport<RgbImage>;

/// min(max(x, lo), hi). Throws ArgumentError if lo > hi.
double clip(double x, double lo, double hi);

/// round(θ / (π/2) · 255), clamped to [0, 255].
std::uint8_t angle_to_byte(double theta);

/// Inverts the FQRRI two-angle packing:
///   v_gb = round(θ_gb·4095·2/π), v_gr = round(θ_gr·4095·2/π)
///   B = v_gb mod 256, R = v_gr mod 256, G = v_gb div 256 + 16·(v_gr div 256)
Rgb fqrri_channels(double theta_gb, double theta_gr);

GrayDecodeReport decode_fqri(const OutcomeDistribution& outcomes,
                             std::size_t n);
RgbDecodeReport decode_fqrri(const OutcomeDistribution& outcomes,
                             std::size_t n);

/// The three FQRQCI measurement settings: the encoding circuit as is, then
/// with U^(02)(π/2, -π, -π) and with U^(02)(π/2, -π/2, π/2) appended on the
/// value qutrit. Throws ArgumentError for other methods.
std::array<Circuit, 3> fqrqci_measurement_circuits(const EncodeResult& encoded);

/// `direct`, `rotated_cos` and `rotated_sin` come from the three circuits
/// of fqrqci_measurement_circuits, in that order. θ_b is recovered as
/// atan2(³p₀ - ³p₂, ²p₀ - ²p₂).
RgbDecodeReport decode_fqrqci(const OutcomeDistribution& direct,
                              const OutcomeDistribution& rotated_cos,
                              const OutcomeDistribution& rotated_sin,
                              std::size_t n);

RgbDecodeReport decode_mcqri(const OutcomeDistribution& outcomes,
                             std::size_t n);

/// Uses only which outcomes are present, never their frequencies. Planes
/// 6-8 are ignored. Throws InconsistencyError when one (plane, pixel) shows
/// two different digit triples or a channel exceeds 255.
RgbDecodeReport decode_qrciq(const OutcomeDistribution& outcomes,
                             std::size_t n);

}  // namespace qutrit
