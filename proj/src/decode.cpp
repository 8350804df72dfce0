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

#include "qutrit/decode.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "qutrit/errors.hpp"

namespace qutrit {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

class Clipper {
 public:
  double operator()(double x, double lo, double hi) {
    const double y = clip(x, lo, hi);
    if (std::abs(y - x) > kClipEventTolerance) ++events_;
    return y;
  }
  std::size_t events() const { return events_; }

 private:
  std::size_t events_ = 0;
};

void check_register(const OutcomeDistribution& outcomes, Method method,
                    std::size_t n) {
  if (n == 0) throw ArgumentError("image exponent n must be at least 1");
  const std::size_t expected = register_size(method, n);
  if (outcomes.num_qutrits != expected) {
    throw ShapeError(std::string(method_name(method)) + " with n=" +
                     std::to_string(n) + " needs " + std::to_string(expected) +
                     "-qutrit outcomes, got " +
                     std::to_string(outcomes.num_qutrits));
  }
  if (outcomes.probabilities.size() != pow3(expected)) {
    throw ShapeError("probability vector length does not match register");
  }
}

// p(value = v, location = i) for the value-qutrit-first layouts.
double joint(const OutcomeDistribution& outcomes, std::size_t n, Trit v,
             std::uint64_t i) {
  return outcomes.probabilities[v * pow3(2 * n) + i];
}

int angle_to_word(double theta) {
  const double scaled = std::round(theta / kHalfPi * 4095.0);
  return static_cast<int>(std::clamp(scaled, 0.0, 4095.0));
}

}  // namespace

double clip(double x, double lo, double hi) {
  if (lo > hi) throw ArgumentError("clip: lower bound exceeds upper bound");
  return std::min(std::max(x, lo), hi);
}

std::uint8_t angle_to_byte(double theta) {
  const double scaled = std::round(theta / kHalfPi * 255.0);
  return static_cast<std::uint8_t>(std::clamp(scaled, 0.0, 255.0));
}

Rgb fqrri_channels(double theta_gb, double theta_gr) {
  const int v_gb = angle_to_word(theta_gb);
  const int v_gr = angle_to_word(theta_gr);
  return {static_cast<std::uint8_t>(v_gr % 256),
          static_cast<std::uint8_t>(v_gb / 256 + (v_gr / 256) * 16),
          static_cast<std::uint8_t>(v_gb % 256)};
}

GrayDecodeReport decode_fqri(const OutcomeDistribution& outcomes,
                             std::size_t n) {
  check_register(outcomes, Method::FQRI, n);
  const std::size_t side = pow3(n);
  GrayImage image = GrayImage::filled(side, 0);
  for (std::uint64_t i = 0; i < side * side; ++i) {
    const double p0 = joint(outcomes, n, 0, i);
    const double p1 = joint(outcomes, n, 1, i);
    image.pixels()[i] = angle_to_byte(std::atan2(std::sqrt(p1), std::sqrt(p0)));
  }
  return {std::move(image), 0, {}, outcomes.shots};
}

RgbDecodeReport decode_fqrri(const OutcomeDistribution& outcomes,
                             std::size_t n) {
  check_register(outcomes, Method::FQRRI, n);
  const std::size_t side = pow3(n);
  const double scale = static_cast<double>(side);
  Clipper clipper;
  RgbImage image = RgbImage::filled(side, Rgb{});
  for (std::uint64_t i = 0; i < side * side; ++i) {
    const double p0 = joint(outcomes, n, 0, i);
    const double p1 = joint(outcomes, n, 1, i);
    const double p2 = joint(outcomes, n, 2, i);
    const double theta_gb =
        std::asin(clipper(scale * std::sqrt(p1), 0.0, 1.0));
    double theta_gr = 0.0;
    if (p0 > 0.0) {
      theta_gr = std::atan(std::sqrt(p2 / p0));
    } else if (p2 > 0.0) {
      theta_gr = kHalfPi;
    }
    image.pixels()[i] = fqrri_channels(theta_gb, theta_gr);
  }
  return {std::move(image), clipper.events(), {}, outcomes.shots};
}

std::array<Circuit, 3> fqrqci_measurement_circuits(
    const EncodeResult& encoded) {
  if (encoded.method != Method::FQRQCI) {
    throw ArgumentError("measurement circuits are defined for fqrqci only, got " +
                        std::string(method_name(encoded.method)));
  }
  constexpr double pi = std::numbers::pi;
  Circuit cos_basis = encoded.circuit;
  cos_basis.append(GateSpec::u(0, 2, pi / 2.0, -pi, -pi), 0);
  Circuit sin_basis = encoded.circuit;
  sin_basis.append(GateSpec::u(0, 2, pi / 2.0, -pi / 2.0, pi / 2.0), 0);
  return {encoded.circuit, std::move(cos_basis), std::move(sin_basis)};
}

RgbDecodeReport decode_fqrqci(const OutcomeDistribution& direct,
                              const OutcomeDistribution& rotated_cos,
                              const OutcomeDistribution& rotated_sin,
                              std::size_t n) {
  check_register(direct, Method::FQRQCI, n);
  check_register(rotated_cos, Method::FQRQCI, n);
  check_register(rotated_sin, Method::FQRQCI, n);
  const std::size_t side = pow3(n);
  const double scale = static_cast<double>(side);
  Clipper clipper;
  RgbImage image = RgbImage::filled(side, Rgb{});
  for (std::uint64_t i = 0; i < side * side; ++i) {
    Rgb& pixel = image.pixels()[i];
    const double theta_r = std::acos(
        clipper(scale * std::sqrt(joint(direct, n, 0, i)), 0.0, 1.0));
    pixel.r = angle_to_byte(theta_r);
    const double sin_r = std::sin(theta_r);
    if (sin_r < kDegenerateSine) continue;

    const double theta_g = std::acos(clipper(
        scale * std::sqrt(joint(direct, n, 1, i)) / sin_r, 0.0, 1.0));
    pixel.g = angle_to_byte(theta_g);
    // The phase only shows up through interference with |0>, so B is also
    // lost when cos θ_r vanishes (R = 255).
    if (sin_r * std::sin(theta_g) < kDegenerateSine ||
        std::cos(theta_r) < kDegenerateSine) {
      continue;
    }

    const double cos_part =
        joint(rotated_cos, n, 0, i) - joint(rotated_cos, n, 2, i);
    const double sin_part =
        joint(rotated_sin, n, 0, i) - joint(rotated_sin, n, 2, i);
    const double theta_b =
        clipper(std::atan2(sin_part, cos_part), 0.0, kHalfPi);
    pixel.b = angle_to_byte(theta_b);
  }
  return {std::move(image), clipper.events(), {},
          direct.shots + rotated_cos.shots + rotated_sin.shots};
}

RgbDecodeReport decode_mcqri(const OutcomeDistribution& outcomes,
                             std::size_t n) {
  check_register(outcomes, Method::MCQRI, n);
  const std::size_t side = pow3(n);
  const std::uint64_t pixels = side * side;
  const std::uint64_t block = 3 * pixels;  // 3^{2n+1}
  const double scale = static_cast<double>(block);
  Clipper clipper;
  RgbImage image = RgbImage::filled(side, Rgb{});
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::uint64_t i = 0; i < pixels; ++i) {
      const std::uint64_t offset = c * pixels + i;
      const double p_cos = outcomes.probabilities[offset];
      const double p_sin = outcomes.probabilities[block + offset];
      const double theta =
          0.5 * std::acos(clipper(scale * (p_cos - p_sin), -1.0, 1.0));
      const std::uint8_t value = angle_to_byte(theta);
      Rgb& pixel = image.pixels()[i];
      (c == 0 ? pixel.r : c == 1 ? pixel.g : pixel.b) = value;
    }
  }
  return {std::move(image), clipper.events(), {}, outcomes.shots};
}

RgbDecodeReport decode_qrciq(const OutcomeDistribution& outcomes,
                             std::size_t n) {
  check_register(outcomes, Method::QRCIQ, n);
  const std::size_t q = outcomes.num_qutrits;
  const std::size_t side = pow3(n);
  const std::uint64_t pixels = side * side;

  using Triple = std::array<Trit, 3>;
  std::vector<std::optional<Triple>> seen(kPlanesPerByte * pixels);
  for (std::uint64_t idx = 0; idx < outcomes.probabilities.size(); ++idx) {
    if (!(outcomes.probabilities[idx] > kSupportThreshold)) continue;
    const std::size_t plane = 3 * digit_at(idx, 3, q) + digit_at(idx, 4, q);
    if (plane >= kPlanesPerByte) continue;
    const std::uint64_t pixel = idx % pixels;
    const Triple digits{digit_at(idx, 0, q), digit_at(idx, 1, q),
                        digit_at(idx, 2, q)};
    auto& slot = seen[plane * pixels + pixel];
    if (slot && *slot != digits) {
      throw InconsistencyError("qrciq: plane " + std::to_string(plane) +
                               " of pixel " + std::to_string(pixel) +
                               " observed with two different digit triples");
    }
    slot = digits;
  }

  RgbDecodeReport report{RgbImage::filled(side, Rgb{}), 0, {}, outcomes.shots};
  for (std::uint64_t i = 0; i < pixels; ++i) {
    std::array<std::array<Trit, kPlanesPerByte>, 3> planes{};
    for (std::size_t b = 0; b < kPlanesPerByte; ++b) {
      const auto& slot = seen[b * pixels + i];
      for (std::size_t c = 0; c < 3; ++c) {
        if (slot) {
          planes[c][b] = (*slot)[c];
        } else {
          report.missing_states.push_back({b, i, c});
        }
      }
    }
    std::array<std::uint8_t, 3> values{};
    for (std::size_t c = 0; c < 3; ++c) {
      const int value = value_from_digits(planes[c]);
      if (value > 255) {
        throw InconsistencyError("qrciq: pixel " + std::to_string(i) +
                                 " decodes to channel value " +
                                 std::to_string(value));
      }
      values[c] = static_cast<std::uint8_t>(value);
    }
    report.image.pixels()[i] = {values[0], values[1], values[2]};
  }
  return report;
}

}  // namespace qutrit
