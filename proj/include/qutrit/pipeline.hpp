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
 * Method dispatch over grayscale/RGB images and the fused
 * encode -> simulate -> sample -> decode loop.
 */

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "qutrit/decode.hpp"
#include "qutrit/encode.hpp"
#include "qutrit/image.hpp"

namespace qutrit {

using AnyImage = std::variant<GrayImage, RgbImage>;

/// Parses PGM or PPM bytes, picking the codec from the magic number.
AnyImage read_image(std::string_view bytes);
std::string write_image(const AnyImage& image);

/// Throws ArgumentError when the image kind does not fit the method
/// (FQRI takes grayscale, all others RGB).
EncodeResult encode(Method method, const AnyImage& image);

struct DecodedImage {
  AnyImage image;
  std::size_t clip_events = 0;
  std::vector<MissingState> missing_states;
  std::uint64_t shots_used = 0;
};

/// `outcomes` holds one distribution, or three for FQRQCI.
DecodedImage decode(Method method,
                    const std::vector<OutcomeDistribution>& outcomes,
                    std::size_t n);

/// The circuits to measure for `encoded`: one, or three for FQRQCI.
std::vector<Circuit> measurement_circuits(const EncodeResult& encoded);

struct RoundtripReport {
  Method method;
  std::size_t n;
  std::uint64_t shots;
  std::uint64_t seed;
  double mae;
  double psnr;  // +inf for an exact reconstruction
  bool exact_match;
  std::size_t clip_events;
  std::vector<MissingState> missing_states;
};

struct RoundtripResult {
  RoundtripReport report;
  AnyImage decoded;
};

/// Encodes, runs every measurement circuit, samples `shots` outcomes from
/// each (measurement k uses seed + k), decodes and scores against `input`.
RoundtripResult roundtrip(Method method, const AnyImage& input,
                          std::uint64_t shots, std::uint64_t seed);

/// Same loop on exact probabilities instead of samples.
DecodedImage decode_exact(const EncodeResult& encoded);

}  // namespace qutrit
