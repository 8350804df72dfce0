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
 * State-preparation circuits for the five qutrit image representations.
 *
 * Register layouts (qutrit 0 is the most significant digit):
 *   FQRI, FQRRI, FQRQCI  q0 = pixel value, q1..q2n = pixel location
 *   MCQRI                q0 = pixel value, q1 = colour channel (0 R, 1 G, 2 B),
 *                        q2..q2n+1 = pixel location
 *   QRCIQ                q0, q1, q2 = R, G, B plane digit, q3 q4 = plane
 *                        number b, q5..q2n+4 = pixel location
 * Pixel (x, y) has location index i = y·3^n + x written MSB first, so the
 * first location qutrit carries the most significant digit of y.
 *
 * Every circuit starts with a ternary Hadamard on each location (and channel
 * or plane) qutrit, followed by per-pixel gates fully controlled on the
 * location trits. Blocks for distinct pixels commute, so the emission order
 * (ascending pixel index, then the operator order within a pixel) only
 * affects presentation.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qutrit/circuit.hpp"
#include "qutrit/image.hpp"
#include "qutrit/ternary.hpp"

namespace qutrit {

enum class Method { FQRI, FQRRI, FQRQCI, MCQRI, QRCIQ };

/// Lower-case CLI name ("fqri", ...).
std::string_view method_name(Method method);
/// Accepts the lower- or upper-case name; throws ArgumentError otherwise.
Method parse_method(std::string_view name);
/// True for every method except FQRI.
bool is_rgb_method(Method method);
/// 2n+1, 2n+2 (MCQRI) or 2n+5 (QRCIQ).
std::size_t register_size(Method method, std::size_t n);

struct PixelLocation {
  std::uint64_t index;
  TritString trits;  // 2n digits, most significant first
};

/// Row-major location of pixel (x, y) in a 3^n x 3^n image.
PixelLocation pixel_index(std::size_t x, std::size_t y, std::size_t n);

/// v/255 · π/2, so 255 lands exactly on π/2.
double pixel_angle(int value);

struct FqrriAngles {
  double theta_gb;
  double theta_gr;
};

/// Packs three channels into two angles:
///   θ_gb = ((G mod 16)·256 + B)/4095 · π/2
///   θ_gr = ((G div 16)·256 + R)/4095 · π/2
FqrriAngles fqrri_angles(std::uint8_t r, std::uint8_t g, std::uint8_t b);

struct EncodeResult {
  Circuit circuit;
  std::size_t n;
  Method method;
  /// Role of each register position, e.g. "value", "location[0]".
  std::vector<std::string> qutrit_layout;
};

EncodeResult encode_fqri(const GrayImage& image);
EncodeResult encode_fqrri(const RgbImage& image);
EncodeResult encode_fqrqci(const RgbImage& image);
EncodeResult encode_mcqri(const RgbImage& image);
EncodeResult encode_qrciq(const RgbImage& image);

}  // namespace qutrit
