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

#include <cstdint>

#include "qutrit/image.hpp"

namespace qutrit {

/// Mean absolute difference over every channel sample. Throws ShapeError on
/// differing sides.
double mae(const GrayImage& a, const GrayImage& b);
double mae(const RgbImage& a, const RgbImage& b);

double mse(const GrayImage& a, const GrayImage& b);
double mse(const RgbImage& a, const RgbImage& b);

/// 10·log10(255² / mse) in dB; +infinity when mse == 0.
double psnr_from_mse(double mse);
double psnr(const GrayImage& a, const GrayImage& b);
double psnr(const RgbImage& a, const RgbImage& b);

/// Expected draws until each of `outcomes` equiprobable outcomes has been
/// seen at least once: N·H_N.
double coupon_collector_expectation(std::uint64_t outcomes);

/// Coupon-collector expectation for the 3^{2n+2} equiprobable QRCIQ states
/// of a 3^n x 3^n image.
double expected_complete_support_shots(std::size_t n);

}  // namespace qutrit
