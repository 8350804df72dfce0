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

#include "qutrit/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "qutrit/errors.hpp"
#include "qutrit/ternary.hpp"

namespace qutrit {

namespace {

template <typename Image>
void check_same_side(const Image& a, const Image& b) {
  if (a.side() != b.side()) {
    throw ShapeError("images differ in size: " + std::to_string(a.side()) +
                     " vs " + std::to_string(b.side()));
  }
}

// Σ f(sample_a - sample_b) and the sample count.
template <typename Fn>
std::pair<double, std::size_t> accumulate(const GrayImage& a,
                                          const GrayImage& b, Fn f) {
  check_same_side(a, b);
  double total = 0.0;
  for (std::size_t k = 0; k < a.pixel_count(); ++k) {
    total += f(static_cast<int>(a.pixels()[k]) - static_cast<int>(b.pixels()[k]));
  }
  return {total, a.pixel_count()};
}

template <typename Fn>
std::pair<double, std::size_t> accumulate(const RgbImage& a, const RgbImage& b,
                                          Fn f) {
  check_same_side(a, b);
  double total = 0.0;
  for (std::size_t k = 0; k < a.pixel_count(); ++k) {
    for (std::size_t c = 0; c < 3; ++c) {
      total += f(static_cast<int>(a.pixels()[k].channel(c)) -
                 static_cast<int>(b.pixels()[k].channel(c)));
    }
  }
  return {total, 3 * a.pixel_count()};
}

double absolute(int d) { return std::abs(d); }
double squared(int d) { return static_cast<double>(d) * d; }

}  // namespace

double mae(const GrayImage& a, const GrayImage& b) {
  const auto [total, count] = accumulate(a, b, absolute);
  return total / static_cast<double>(count);
}

double mae(const RgbImage& a, const RgbImage& b) {
  const auto [total, count] = accumulate(a, b, absolute);
  return total / static_cast<double>(count);
}

double mse(const GrayImage& a, const GrayImage& b) {
  const auto [total, count] = accumulate(a, b, squared);
  return total / static_cast<double>(count);
}

double mse(const RgbImage& a, const RgbImage& b) {
  const auto [total, count] = accumulate(a, b, squared);
  return total / static_cast<double>(count);
}

double psnr_from_mse(double mse) {
  if (mse < 0.0) throw ArgumentError("mse must be non-negative");
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double psnr(const GrayImage& a, const GrayImage& b) {
  return psnr_from_mse(mse(a, b));
}

double psnr(const RgbImage& a, const RgbImage& b) {
  return psnr_from_mse(mse(a, b));
}

double coupon_collector_expectation(std::uint64_t outcomes) {
  if (outcomes == 0) throw ArgumentError("need at least one outcome");
  // Summed smallest term first to keep the rounding error down.
  double harmonic = 0.0;
  for (std::uint64_t k = outcomes; k >= 1; --k) harmonic += 1.0 / static_cast<double>(k);
  return static_cast<double>(outcomes) * harmonic;
}

double expected_complete_support_shots(std::size_t n) {
  if (n == 0) throw ArgumentError("image exponent n must be at least 1");
  return coupon_collector_expectation(pow3(2 * n + 2));
}

}  // namespace qutrit
