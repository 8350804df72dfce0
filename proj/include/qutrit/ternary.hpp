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
 * Base-3 digit handling and the raw statevector container.
 *
 * Register convention: qutrit 0 is the most significant digit of a basis
 * index and the leftmost ket factor, so the basis label |v⟩⊗|i⟩ of a
 * (1 + m)-qutrit register is index v·3^m + i and prints as "v" followed by
 * the m digits of i.
 */

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qutrit {

using Trit = std::uint8_t;

/// Largest register the dense statevector accepts (3^14 amplitudes, ~77 MB).
inline constexpr std::size_t kMaxQutrits = 14;

/// Number of ternary planes needed to hold an 8-bit value (3^6 = 729 > 255).
inline constexpr std::size_t kPlanesPerByte = 6;

constexpr std::uint64_t pow3(std::size_t exponent) {
  std::uint64_t result = 1;
  for (std::size_t k = 0; k < exponent; ++k) result *= 3;
  return result;
}

/// Digit of `index` at register position `position` (0 = most significant)
/// for a register of `length` qutrits.
constexpr Trit digit_at(std::uint64_t index, std::size_t position,
                        std::size_t length) {
  return static_cast<Trit>((index / pow3(length - 1 - position)) % 3);
}

/// Non-empty sequence of trits, most significant first.
class TritString {
 public:
  explicit TritString(std::vector<Trit> digits);

  /// Parses text made of '0', '1', '2'.
  static TritString parse(std::string_view text);

  std::size_t size() const { return digits_.size(); }
  Trit operator[](std::size_t position) const { return digits_[position]; }
  std::span<const Trit> digits() const { return digits_; }
  std::string str() const;

  bool operator==(const TritString&) const = default;

 private:
  std::vector<Trit> digits_;
};

/// Most-significant-first base-3 digits of `index`, zero padded to `length`.
TritString trits_from_index(std::uint64_t index, std::size_t length);

std::uint64_t index_from_trits(const TritString& trits);

/// Ternary planes of an 8-bit value, least significant plane first.
std::array<Trit, kPlanesPerByte> ternary_digits_u8(int value);

/// Inverse of ternary_digits_u8. Returns values up to 728; callers decide
/// whether anything above 255 is acceptable.
int value_from_digits(std::span<const Trit, kPlanesPerByte> digits);

/// Dense vector of 3^q complex amplitudes.
class Statevector {
 public:
  using Amplitude = std::complex<double>;

  Statevector(std::size_t num_qutrits, std::vector<Amplitude> amplitudes);

  /// |0...0⟩ on `num_qutrits` qutrits. Throws CapacityError above kMaxQutrits.
  static Statevector zero(std::size_t num_qutrits);

  std::size_t num_qutrits() const { return num_qutrits_; }
  std::size_t size() const { return amplitudes_.size(); }

  Amplitude operator[](std::size_t index) const { return amplitudes_[index]; }
  Amplitude& operator[](std::size_t index) { return amplitudes_[index]; }

  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  std::span<Amplitude> amplitudes() { return amplitudes_; }

  /// Euclidean norm, sqrt(Σ|a|²).
  double norm() const;

 private:
  std::size_t num_qutrits_;
  std::vector<Amplitude> amplitudes_;
};

}  // namespace qutrit
