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

#include "qutrit/encode.hpp"

#include <array>
#include <cctype>
#include <numbers>

#include "qutrit/errors.hpp"

namespace qutrit {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Controls pinning `count` consecutive qutrits starting at `first` to the
// digits of `trits`.
std::vector<ControlSpec> pin(std::size_t first, const TritString& trits) {
  std::vector<ControlSpec> controls;
  controls.reserve(trits.size());
  for (std::size_t k = 0; k < trits.size(); ++k) {
    controls.push_back({first + k, trits[k]});
  }
  return controls;
}

std::vector<ControlSpec> concat(std::vector<ControlSpec> a,
                                const std::vector<ControlSpec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void hadamard_range(Circuit& circuit, std::size_t first, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    circuit.append(GateSpec::hadamard(), first + k);
  }
}

std::vector<std::string> layout(std::initializer_list<std::string> head,
                                std::size_t location_qutrits) {
  std::vector<std::string> roles(head);
  for (std::size_t k = 0; k < location_qutrits; ++k) {
    roles.push_back("location[" + std::to_string(k) + "]");
  }
  return roles;
}

// Raster pass over all pixels in ascending location index.
template <typename Image, typename Fn>
void for_each_pixel(const Image& image, Fn&& fn) {
  const std::size_t n = image.n();
  for (std::size_t y = 0; y < image.side(); ++y) {
    for (std::size_t x = 0; x < image.side(); ++x) {
      fn(image.at(x, y), pixel_index(x, y, n));
    }
  }
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::FQRI: return "fqri";
    case Method::FQRRI: return "fqrri";
    case Method::FQRQCI: return "fqrqci";
    case Method::MCQRI: return "mcqri";
    case Method::QRCIQ: return "qrciq";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  std::string lower;
  for (char c : name) {
    lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  for (Method m : {Method::FQRI, Method::FQRRI, Method::FQRQCI, Method::MCQRI,
                   Method::QRCIQ}) {
    if (method_name(m) == lower) return m;
  }
  throw ArgumentError("unknown method \"" + std::string(name) +
                      "\" (expected fqri, fqrri, fqrqci, mcqri or qrciq)");
}

bool is_rgb_method(Method method) { return method != Method::FQRI; }

std::size_t register_size(Method method, std::size_t n) {
  switch (method) {
    case Method::MCQRI: return 2 * n + 2;
    case Method::QRCIQ: return 2 * n + 5;
    default: return 2 * n + 1;
  }
}

PixelLocation pixel_index(std::size_t x, std::size_t y, std::size_t n) {
  if (n == 0) throw ArgumentError("image exponent n must be at least 1");
  const std::uint64_t side = pow3(n);
  if (x >= side || y >= side) {
    throw ArgumentError("pixel (" + std::to_string(x) + "," +
                        std::to_string(y) + ") outside a " +
                        std::to_string(side) + "x" + std::to_string(side) +
                        " image");
  }
  const std::uint64_t index = y * side + x;
  return {index, trits_from_index(index, 2 * n)};
}

double pixel_angle(int value) {
  if (value < 0 || value > 255) {
    throw RangeError("pixel value out of range: " + std::to_string(value));
  }
  return value / 255.0 * kHalfPi;
}

FqrriAngles fqrri_angles(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  const int gb = (g % 16) * 256 + b;
  const int gr = (g / 16) * 256 + r;
  return {gb / 4095.0 * kHalfPi, gr / 4095.0 * kHalfPi};
}

EncodeResult encode_fqri(const GrayImage& image) {
  const std::size_t n = image.n();
  Circuit circuit(register_size(Method::FQRI, n));
  hadamard_range(circuit, 1, 2 * n);
  for_each_pixel(image, [&](std::uint8_t v, const PixelLocation& loc) {
    circuit.append(GateSpec::rotation(Axis::Y, 0, 1, 2.0 * pixel_angle(v)), 0,
                   pin(1, loc.trits));
  });
  return {std::move(circuit), n, Method::FQRI, layout({"value"}, 2 * n)};
}

EncodeResult encode_fqrri(const RgbImage& image) {
  const std::size_t n = image.n();
  Circuit circuit(register_size(Method::FQRRI, n));
  hadamard_range(circuit, 1, 2 * n);
  for_each_pixel(image, [&](const Rgb& p, const PixelLocation& loc) {
    const auto angles = fqrri_angles(p.r, p.g, p.b);
    const auto controls = pin(1, loc.trits);
    circuit.append(GateSpec::rotation(Axis::Y, 0, 1, 2.0 * angles.theta_gb), 0,
                   controls);
    circuit.append(GateSpec::rotation(Axis::Y, 0, 2, 2.0 * angles.theta_gr), 0,
                   controls);
  });
  return {std::move(circuit), n, Method::FQRRI, layout({"value"}, 2 * n)};
}

EncodeResult encode_fqrqci(const RgbImage& image) {
  const std::size_t n = image.n();
  Circuit circuit(register_size(Method::FQRQCI, n));
  hadamard_range(circuit, 1, 2 * n);
  for_each_pixel(image, [&](const Rgb& p, const PixelLocation& loc) {
    const auto controls = pin(1, loc.trits);
    circuit.append(GateSpec::rotation(Axis::Y, 0, 1, 2.0 * pixel_angle(p.r)), 0,
                   controls);
    // U^(12)(2θ_g, θ_b, 0): the phase argument carries θ_b itself.
    circuit.append(
        GateSpec::u(1, 2, 2.0 * pixel_angle(p.g), pixel_angle(p.b), 0.0), 0,
        controls);
  });
  return {std::move(circuit), n, Method::FQRQCI, layout({"value"}, 2 * n)};
}

EncodeResult encode_mcqri(const RgbImage& image) {
  const std::size_t n = image.n();
  Circuit circuit(register_size(Method::MCQRI, n));
  hadamard_range(circuit, 1, 2 * n + 1);
  for_each_pixel(image, [&](const Rgb& p, const PixelLocation& loc) {
    const auto location = pin(2, loc.trits);
    for (Trit c = 0; c < 3; ++c) {
      circuit.append(
          GateSpec::rotation(Axis::Y, 0, 1, 2.0 * pixel_angle(p.channel(c))), 0,
          concat({{1, c}}, location));
    }
  });
  return {std::move(circuit), n, Method::MCQRI,
          layout({"value", "channel"}, 2 * n)};
}

EncodeResult encode_qrciq(const RgbImage& image) {
  const std::size_t n = image.n();
  Circuit circuit(register_size(Method::QRCIQ, n));
  hadamard_range(circuit, 3, 2 * n + 2);

  std::vector<std::array<std::array<Trit, kPlanesPerByte>, 3>> digits;
  std::vector<PixelLocation> locations;
  for_each_pixel(image, [&](const Rgb& p, const PixelLocation& loc) {
    digits.push_back({ternary_digits_u8(p.r), ternary_digits_u8(p.g),
                      ternary_digits_u8(p.b)});
    locations.push_back(loc);
  });

  for (std::size_t b = 0; b < kPlanesPerByte; ++b) {
    const auto plane = pin(3, trits_from_index(b, 2));
    for (std::size_t i = 0; i < locations.size(); ++i) {
      const auto controls = concat(plane, pin(5, locations[i].trits));
      for (std::size_t c = 0; c < 3; ++c) {
        const Trit d = digits[i][c][b];
        if (d != 0) circuit.append(GateSpec::shift(d), c, controls);
      }
    }
  }
  return {std::move(circuit), n, Method::QRCIQ,
          layout({"plane_digit[R]", "plane_digit[G]", "plane_digit[B]",
                  "plane[0]", "plane[1]"},
                 2 * n)};
}

}  // namespace qutrit
