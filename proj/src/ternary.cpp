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

#include "qutrit/ternary.hpp"

#include <cmath>
#include <numeric>

#include "qutrit/errors.hpp"

namespace qutrit {

TritString::TritString(std::vector<Trit> digits) : digits_(std::move(digits)) {
  if (digits_.empty()) throw ArgumentError("trit string must not be empty");
  for (Trit d : digits_) {
    if (d > 2) throw RangeError("trit out of range: " + std::to_string(d));
  }
}

TritString TritString::parse(std::string_view text) {
  std::vector<Trit> digits;
  digits.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '2') {
      throw ParseError("invalid trit character '" + std::string(1, c) +
                       "' in \"" + std::string(text) + "\"");
    }
    digits.push_back(static_cast<Trit>(c - '0'));
  }
  if (digits.empty()) throw ParseError("empty trit string");
  return TritString(std::move(digits));
}

std::string TritString::str() const {
  std::string out;
  out.reserve(digits_.size());
  for (Trit d : digits_) out.push_back(static_cast<char>('0' + d));
  return out;
}

TritString trits_from_index(std::uint64_t index, std::size_t length) {
  if (length == 0 || length > 40) {
    throw RangeError("trit string length must be in [1, 40]");
  }
  if (index >= pow3(length)) {
    throw RangeError("index " + std::to_string(index) + " does not fit in " +
                     std::to_string(length) + " trits");
  }
  std::vector<Trit> digits(length);
  for (std::size_t k = length; k-- > 0;) {
    digits[k] = static_cast<Trit>(index % 3);
    index /= 3;
  }
  return TritString(std::move(digits));
}

std::uint64_t index_from_trits(const TritString& trits) {
  std::uint64_t index = 0;
  for (Trit d : trits.digits()) index = index * 3 + d;
  return index;
}

std::array<Trit, kPlanesPerByte> ternary_digits_u8(int value) {
  if (value < 0 || value > 255) {
    throw RangeError("8-bit value out of range: " + std::to_string(value));
  }
  std::array<Trit, kPlanesPerByte> digits{};
  for (auto& d : digits) {
    d = static_cast<Trit>(value % 3);
    value /= 3;
  }
  return digits;
}

int value_from_digits(std::span<const Trit, kPlanesPerByte> digits) {
  int value = 0;
  for (std::size_t b = kPlanesPerByte; b-- > 0;) value = value * 3 + digits[b];
  return value;
}

Statevector::Statevector(std::size_t num_qutrits,
                         std::vector<Amplitude> amplitudes)
    : num_qutrits_(num_qutrits), amplitudes_(std::move(amplitudes)) {
  if (num_qutrits_ == 0 || num_qutrits_ > kMaxQutrits) {
    throw CapacityError("register size " + std::to_string(num_qutrits_) +
                        " outside [1, " + std::to_string(kMaxQutrits) + "]");
  }
  if (amplitudes_.size() != pow3(num_qutrits_)) {
    throw ShapeError("statevector of " + std::to_string(num_qutrits_) +
                     " qutrits needs " + std::to_string(pow3(num_qutrits_)) +
                     " amplitudes, got " + std::to_string(amplitudes_.size()));
  }
}

Statevector Statevector::zero(std::size_t num_qutrits) {
  if (num_qutrits == 0 || num_qutrits > kMaxQutrits) {
    throw CapacityError("register size " + std::to_string(num_qutrits) +
                        " outside [1, " + std::to_string(kMaxQutrits) + "]");
  }
  std::vector<Amplitude> amplitudes(pow3(num_qutrits));
  amplitudes[0] = 1.0;
  return Statevector(num_qutrits, std::move(amplitudes));
}

double Statevector::norm() const {
  double total = 0.0;
  for (const auto& a : amplitudes_) total += std::norm(a);
  return std::sqrt(total);
}

}  // namespace qutrit
