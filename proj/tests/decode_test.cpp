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

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "qutrit/errors.hpp"

namespace qutrit {
namespace {

OutcomeDistribution exact(const Circuit& circuit) {
  return OutcomeDistribution::exact(run(circuit));
}

RgbDecodeReport exact_fqrqci(const RgbImage& img) {
  const auto circuits = fqrqci_measurement_circuits(encode_fqrqci(img));
  return decode_fqrqci(exact(circuits[0]), exact(circuits[1]), exact(circuits[2]), img.n());
}

TEST(Clip, Examples) {
  EXPECT_EQ(clip(1.2, 0.0, 1.0), 1.0);
  EXPECT_EQ(clip(-0.1, 0.0, 1.0), 0.0);
  EXPECT_EQ(clip(0.5, 0.0, 1.0), 0.5);
  EXPECT_EQ(clip(-3.0, -1.0, 1.0), -1.0);
  EXPECT_THROW(clip(0.0, 1.0, 0.0), ArgumentError);
}

TEST(AngleToByte, InvertsPixelAngle) {
  for (int v = 0; v < 256; ++v) EXPECT_EQ(angle_to_byte(pixel_angle(v)), v);
  EXPECT_EQ(angle_to_byte(-0.1), 0);
  EXPECT_EQ(angle_to_byte(2.0), 255);
}

TEST(FqrriChannels, InvertsEncoderForEveryColour) {
  std::size_t failures = 0;
  for (int r = 0; r < 256; ++r) {
    for (int g = 0; g < 256; ++g) {
      for (int b = 0; b < 256; ++b) {
        const auto a = fqrri_angles(static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
                                    static_cast<std::uint8_t>(b));
        const Rgb got = fqrri_channels(a.theta_gb, a.theta_gr);
        failures += !(got == Rgb{static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
                                 static_cast<std::uint8_t>(b)});
      }
    }
  }
  EXPECT_EQ(failures, 0u);
}

TEST(Decode, FqriExactRoundTrip) {
  std::mt19937_64 rng(201);
  for (int t = 0; t < 50; ++t) {
    const auto img = oracle::random_gray(rng);
    const auto rep = decode_fqri(exact(encode_fqri(img).circuit), 1);
    ASSERT_EQ(rep.image, img);
    EXPECT_EQ(rep.shots_used, 0u);
  }
  const auto big = oracle::random_gray(rng, 9);
  EXPECT_EQ(decode_fqri(exact(encode_fqri(big).circuit), 2).image, big);
}

TEST(Decode, FqrriExactRoundTrip) {
  std::mt19937_64 rng(202);
  for (int t = 0; t < 50; ++t) {
    const auto img = oracle::random_rgb(rng);
    const auto rep = decode_fqrri(exact(encode_fqrri(img).circuit), 1);
    ASSERT_EQ(rep.image, img);
    EXPECT_EQ(rep.clip_events, 0u);
  }
  const auto white = RgbImage::filled(3, Rgb{255, 255, 255});
  EXPECT_EQ(decode_fqrri(exact(encode_fqrri(white).circuit), 1).image, white);
  const auto black = RgbImage::filled(3, Rgb{});
  EXPECT_EQ(decode_fqrri(exact(encode_fqrri(black).circuit), 1).image, black);
}

TEST(Decode, McqriExactRoundTrip) {
  std::mt19937_64 rng(203);
  for (int t = 0; t < 50; ++t) {
    const auto img = oracle::random_rgb(rng);
    const auto rep = decode_mcqri(exact(encode_mcqri(img).circuit), 1);
    ASSERT_EQ(rep.image, img);
    EXPECT_EQ(rep.clip_events, 0u);
  }
}

TEST(Decode, McqriValueTwoBlockIsEmpty) {
  const auto probs = exact(encode_mcqri(oracle::table1_rgb()).circuit).probabilities;
  const std::size_t block = 27;
  for (std::size_t k = 2 * block; k < 3 * block; ++k) EXPECT_LT(probs[k], 1e-30);
}

TEST(Decode, QrciqExactRoundTrip) {
  std::mt19937_64 rng(204);
  for (int t = 0; t < 50; ++t) {
    const auto img = oracle::random_rgb(rng);
    const auto rep = decode_qrciq(exact(encode_qrciq(img).circuit), 1);
    ASSERT_EQ(rep.image, img);
    EXPECT_TRUE(rep.missing_states.empty());
  }
}

TEST(Decode, FqrqciExactOnNonDegeneratePixels) {
  std::mt19937_64 rng(205);
  std::uniform_int_distribution<int> positive(1, 255);
  std::uniform_int_distribution<int> red(1, 254);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rgb> px(9);
    for (auto& p : px) {
      p = {static_cast<std::uint8_t>(red(rng)), static_cast<std::uint8_t>(positive(rng)),
           static_cast<std::uint8_t>(rng() % 256)};
    }
    const RgbImage img(3, px);
    const auto rep = exact_fqrqci(img);
    ASSERT_EQ(rep.image, img);
    EXPECT_EQ(rep.clip_events, 0u);
  }
}

TEST(Decode, FqrqciDegeneratePixels) {
  // R = 0 hides G and B; G = 0 or R = 255 hides B. Hidden channels decode
  // to 0 without error.
  const RgbImage img(3, {{0, 200, 100}, {10, 0, 100}, {255, 255, 255},
                         {255, 0, 0}, {1, 1, 1}, {0, 0, 0},
                         {128, 255, 0}, {37, 192, 178}, {255, 128, 64}});
  const auto rep = exact_fqrqci(img);
  EXPECT_EQ(rep.image.pixels()[0], (Rgb{0, 0, 0}));
  EXPECT_EQ(rep.image.pixels()[1], (Rgb{10, 0, 0}));
  EXPECT_EQ(rep.image.pixels()[2], (Rgb{255, 255, 0}));
  EXPECT_EQ(rep.image.pixels()[8], (Rgb{255, 128, 0}));
  for (std::size_t k : {3u, 4u, 5u, 6u, 7u}) {
    EXPECT_EQ(rep.image.pixels()[k], img.pixels()[k]) << k;
  }
}

TEST(Decode, FqrqciMeasurementCircuits) {
  const auto enc = encode_fqrqci(oracle::table1_rgb());
  const auto circuits = fqrqci_measurement_circuits(enc);
  EXPECT_EQ(circuits[0], enc.circuit);
  EXPECT_EQ(circuits[1].size(), enc.circuit.size() + 1);
  EXPECT_EQ(circuits[2].ops().back().gate.label(), "U02(1.57,-1.57,1.57)");
  EXPECT_THROW(fqrqci_measurement_circuits(encode_mcqri(oracle::table1_rgb())),
               ArgumentError);
}

TEST(Decode, ClipEventsCounted) {
  OutcomeDistribution point{4, std::vector<double>(81, 0.0), 0};
  point.probabilities[0] = 1.0;  // p_cos for R of pixel 0 scaled by 27
  const auto rep = decode_mcqri(point, 1);
  EXPECT_EQ(rep.clip_events, 1u);
  EXPECT_EQ(rep.image.pixels()[0].r, 0);
  EXPECT_EQ(rep.image.pixels()[0].g, 128);
}

OutcomeDistribution without_plane(OutcomeDistribution d, std::size_t plane) {
  for (std::uint64_t idx = 0; idx < d.probabilities.size(); ++idx) {
    if (3u * digit_at(idx, 3, 7) + digit_at(idx, 4, 7) == plane) d.probabilities[idx] = 0.0;
  }
  return d;
}

TEST(Decode, QrciqMissingPlaneReported) {
  std::mt19937_64 rng(206);
  std::uniform_int_distribution<int> low(0, 242);
  std::vector<Rgb> px(9);
  for (auto& p : px) {
    p = {static_cast<std::uint8_t>(low(rng)), static_cast<std::uint8_t>(low(rng)),
         static_cast<std::uint8_t>(low(rng))};
  }
  const RgbImage img(3, px);
  const auto rep = decode_qrciq(without_plane(exact(encode_qrciq(img).circuit), 5), 1);
  EXPECT_EQ(rep.image, img);  // digit 5 is zero below 243
  ASSERT_EQ(rep.missing_states.size(), 27u);
  for (const auto& m : rep.missing_states) EXPECT_EQ(m.plane, 5u);
  EXPECT_EQ(rep.missing_states[0], (MissingState{5, 0, 0}));
  EXPECT_EQ(rep.missing_states[26], (MissingState{5, 8, 2}));
}

TEST(Decode, QrciqIgnoresPlanesSixToEight) {
  const auto img = oracle::table1_rgb();
  auto d = exact(encode_qrciq(img).circuit);
  // |222>|20>|00>: plane 6 with a nonzero digit triple.
  d.probabilities[index_from_trits(TritString::parse("2222000"))] = 0.01;
  EXPECT_EQ(decode_qrciq(d, 1).image, img);
}

TEST(Decode, QrciqIsScaleInvariant) {
  const auto img = oracle::table1_rgb();
  auto d = exact(encode_qrciq(img).circuit);
  for (auto& p : d.probabilities) p *= 0.37;
  EXPECT_EQ(decode_qrciq(d, 1).image, img);
}

TEST(Decode, QrciqInconsistencies) {
  const auto img = RgbImage::filled(3, Rgb{});
  auto conflicting = exact(encode_qrciq(img).circuit);
  conflicting.probabilities[index_from_trits(TritString::parse("1000000"))] = 0.01;
  EXPECT_THROW(decode_qrciq(conflicting, 1), InconsistencyError);

  // Plane 5 digit 2 on pixel 0 gives 486.
  auto overflow = without_plane(exact(encode_qrciq(img).circuit), 5);
  overflow.probabilities[index_from_trits(TritString::parse("2001200"))] = 0.01;
  EXPECT_THROW(decode_qrciq(overflow, 1), InconsistencyError);
}

TEST(Decode, ShapeErrors) {
  const auto fqri = exact(encode_fqri(oracle::table1_gray()).circuit);
  EXPECT_THROW(decode_fqri(fqri, 2), ShapeError);
  EXPECT_THROW(decode_mcqri(fqri, 1), ShapeError);
  EXPECT_THROW(decode_qrciq(fqri, 1), ShapeError);
  EXPECT_THROW(decode_fqri(fqri, 0), ArgumentError);
  OutcomeDistribution truncated = fqri;
  truncated.probabilities.pop_back();
  EXPECT_THROW(decode_fqri(truncated, 1), ShapeError);
}

TEST(Decode, SampledFqriIsClose) {
  const auto img = oracle::table1_gray();
  const auto state = run(encode_fqri(img).circuit);
  const auto rep = decode_fqri(OutcomeDistribution::from_histogram(sample(state, 1000000, 7)), 1);
  EXPECT_EQ(rep.shots_used, 1000000u);
  for (std::size_t k = 0; k < 9; ++k) {
    EXPECT_NEAR(rep.image.pixels()[k], img.pixels()[k], 8) << k;
  }
}

}  // namespace
}  // namespace qutrit
