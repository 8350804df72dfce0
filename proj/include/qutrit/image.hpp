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
 * Square 8-bit images of side 3^n and their netpbm (PGM/PPM) codecs.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qutrit {

/// Returns n such that 3^n == side. Throws ShapeError otherwise or when
/// side < 3.
std::size_t validate_side(std::size_t side);

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  /// Channel 0 = R, 1 = G, 2 = B.
  std::uint8_t channel(std::size_t c) const { return c == 0 ? r : c == 1 ? g : b; }
  bool operator==(const Rgb&) const = default;
};

/// Row-major square image; pixel (x, y) is column x of row y.
template <typename Pixel>
class SquareImage {
 public:
  SquareImage(std::size_t side, std::vector<Pixel> pixels)
      : side_(side), n_(validate_side(side)), pixels_(std::move(pixels)) {
    if (pixels_.size() != side_ * side_) {
      throw_pixel_count_mismatch(side_, pixels_.size());
    }
  }

  static SquareImage filled(std::size_t side, Pixel value) {
    return SquareImage(side, std::vector<Pixel>(side * side, value));
  }

  std::size_t side() const { return side_; }
  /// Exponent n with side == 3^n.
  std::size_t n() const { return n_; }
  std::size_t pixel_count() const { return pixels_.size(); }

  const Pixel& at(std::size_t x, std::size_t y) const { return pixels_[y * side_ + x]; }
  Pixel& at(std::size_t x, std::size_t y) { return pixels_[y * side_ + x]; }
  const std::vector<Pixel>& pixels() const { return pixels_; }
  std::vector<Pixel>& pixels() { return pixels_; }

  bool operator==(const SquareImage&) const = default;

 private:
  [[noreturn]] static void throw_pixel_count_mismatch(std::size_t side,
                                                      std::size_t count);

  std::size_t side_;
  std::size_t n_;
  std::vector<Pixel> pixels_;
};

using GrayImage = SquareImage<std::uint8_t>;
using RgbImage = SquareImage<Rgb>;

enum class NetpbmEncoding { Ascii, Binary };
enum class ImageKind { Gray, Rgb };

/// Kind from the magic number (P2/P5 gray, P3/P6 RGB).
ImageKind detect_image_kind(std::string_view bytes);

/// Accepts P2 and P5 with maxval 255.
GrayImage read_pgm(std::string_view bytes);
std::string write_pgm(const GrayImage& image,
                      NetpbmEncoding encoding = NetpbmEncoding::Binary);

/// Accepts P3 and P6 with maxval 255.
RgbImage read_ppm(std::string_view bytes);
std::string write_ppm(const RgbImage& image,
                      NetpbmEncoding encoding = NetpbmEncoding::Binary);

}  // namespace qutrit
