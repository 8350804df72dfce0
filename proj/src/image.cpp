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

#include "qutrit/image.hpp"

#include <cctype>

#include "qutrit/errors.hpp"

namespace qutrit {

std::size_t validate_side(std::size_t side) {
  if (side < 3) {
    throw ShapeError("image side " + std::to_string(side) +
                     " is not 3^n with n >= 1");
  }
  std::size_t n = 0;
  std::size_t rest = side;
  while (rest % 3 == 0) {
    rest /= 3;
    ++n;
  }
  if (rest != 1) {
    throw ShapeError("image side " + std::to_string(side) +
                     " is not a power of 3");
  }
  return n;
}

template <typename Pixel>
void SquareImage<Pixel>::throw_pixel_count_mismatch(std::size_t side,
                                                    std::size_t count) {
  throw ShapeError("image of side " + std::to_string(side) + " needs " +
                   std::to_string(side * side) + " pixels, got " +
                   std::to_string(count));
}

template class SquareImage<std::uint8_t>;
template class SquareImage<Rgb>;

namespace {

// Tokenizer for the ASCII part of a netpbm file; '#' starts a comment that
// runs to end of line.
class HeaderReader {
 public:
  explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

  std::string_view magic() {
    if (bytes_.size() < 2 || bytes_[0] != 'P') {
      throw ParseError("netpbm: missing magic number");
    }
    pos_ = 2;
    return bytes_.substr(0, 2);
  }

  unsigned long number(const char* what) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() ||
        !std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      throw ParseError(std::string("netpbm: expected ") + what);
    }
    unsigned long value = 0;
    while (pos_ < bytes_.size() &&
           std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(bytes_[pos_] - '0');
      if (value > 1'000'000'000UL) {
        throw ParseError(std::string("netpbm: ") + what + " too large");
      }
      ++pos_;
    }
    return value;
  }

  // Binary rasters start after exactly one whitespace byte.
  std::string_view binary_payload() {
    if (pos_ >= bytes_.size() ||
        !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      throw ParseError("netpbm: missing separator before raster");
    }
    return bytes_.substr(pos_ + 1);
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view bytes_;
  std::size_t pos_ = 0;
};

struct Raster {
  std::size_t side = 0;
  std::vector<std::uint8_t> samples;
};

Raster read_raster(std::string_view bytes, char ascii_magic, char binary_magic,
                   std::size_t channels) {
  HeaderReader reader(bytes);
  const auto magic = reader.magic();
  const bool ascii = magic[1] == ascii_magic;
  if (!ascii && magic[1] != binary_magic) {
    throw ParseError("netpbm: unexpected magic number \"" +
                     std::string(magic) + "\"");
  }
  const unsigned long width = reader.number("width");
  const unsigned long height = reader.number("height");
  const unsigned long maxval = reader.number("maxval");
  if (maxval != 255) {
    throw ParseError("netpbm: unsupported maxval " + std::to_string(maxval) +
                     " (only 255)");
  }
  if (width != height) {
    throw ShapeError("image must be square, got " + std::to_string(width) +
                     "x" + std::to_string(height));
  }
  validate_side(width);

  Raster raster;
  raster.side = width;
  const std::size_t count = width * height * channels;
  raster.samples.reserve(count);
  if (ascii) {
    for (std::size_t k = 0; k < count; ++k) {
      const unsigned long v = reader.number("sample");
      if (v > maxval) throw ParseError("netpbm: sample exceeds maxval");
      raster.samples.push_back(static_cast<std::uint8_t>(v));
    }
  } else {
    const auto payload = reader.binary_payload();
    if (payload.size() < count) throw ParseError("netpbm: truncated raster");
    for (std::size_t k = 0; k < count; ++k) {
      raster.samples.push_back(static_cast<std::uint8_t>(payload[k]));
    }
  }
  return raster;
}

std::string write_raster(char magic, std::size_t side, std::size_t channels,
                         const std::vector<std::uint8_t>& samples,
                         NetpbmEncoding encoding) {
  std::string out = "P";
  out += magic;
  out += "\n" + std::to_string(side) + " " + std::to_string(side) + "\n255\n";
  if (encoding == NetpbmEncoding::Binary) {
    out.append(samples.begin(), samples.end());
    return out;
  }
  const std::size_t per_row = side * channels;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    out += std::to_string(samples[k]);
    out += (k + 1) % per_row == 0 ? '\n' : ' ';
  }
  return out;
}

}  // namespace

ImageKind detect_image_kind(std::string_view bytes) {
  if (bytes.size() >= 2 && bytes[0] == 'P') {
    if (bytes[1] == '2' || bytes[1] == '5') return ImageKind::Gray;
    if (bytes[1] == '3' || bytes[1] == '6') return ImageKind::Rgb;
  }
  throw ParseError("not a PGM or PPM file");
}

GrayImage read_pgm(std::string_view bytes) {
  auto raster = read_raster(bytes, '2', '5', 1);
  return GrayImage(raster.side, std::move(raster.samples));
}

std::string write_pgm(const GrayImage& image, NetpbmEncoding encoding) {
  const char magic = encoding == NetpbmEncoding::Ascii ? '2' : '5';
  return write_raster(magic, image.side(), 1, image.pixels(), encoding);
}

RgbImage read_ppm(std::string_view bytes) {
  const auto raster = read_raster(bytes, '3', '6', 3);
  std::vector<Rgb> pixels(raster.side * raster.side);
  for (std::size_t k = 0; k < pixels.size(); ++k) {
    pixels[k] = {raster.samples[3 * k], raster.samples[3 * k + 1],
                 raster.samples[3 * k + 2]};
  }
  return RgbImage(raster.side, std::move(pixels));
}

std::string write_ppm(const RgbImage& image, NetpbmEncoding encoding) {
  std::vector<std::uint8_t> samples;
  samples.reserve(image.pixel_count() * 3);
  for (const auto& p : image.pixels()) {
    samples.push_back(p.r);
    samples.push_back(p.g);
    samples.push_back(p.b);
  }
  const char magic = encoding == NetpbmEncoding::Ascii ? '3' : '6';
  return write_raster(magic, image.side(), 3, samples, encoding);
}

}  // namespace qutrit
