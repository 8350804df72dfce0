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

#include "qutrit/pipeline.hpp"

#include "qutrit/errors.hpp"
#include "qutrit/metrics.hpp"
#include "qutrit/simulator.hpp"

namespace qutrit {

namespace {

template <typename Image>
DecodedImage wrap(DecodeReport<Image> report) {
  return {std::move(report.image), report.clip_events,
          std::move(report.missing_states), report.shots_used};
}

}  // namespace

AnyImage read_image(std::string_view bytes) {
  if (detect_image_kind(bytes) == ImageKind::Gray) return read_pgm(bytes);
  return read_ppm(bytes);
}

std::string write_image(const AnyImage& image) {
  if (const auto* gray = std::get_if<GrayImage>(&image)) return write_pgm(*gray);
  return write_ppm(std::get<RgbImage>(image));
}

EncodeResult encode(Method method, const AnyImage& image) {
  if (method == Method::FQRI) {
    const auto* gray = std::get_if<GrayImage>(&image);
    if (!gray) throw ArgumentError("fqri encodes grayscale (PGM) images only");
    return encode_fqri(*gray);
  }
  const auto* rgb = std::get_if<RgbImage>(&image);
  if (!rgb) {
    throw ArgumentError(std::string(method_name(method)) +
                        " encodes RGB (PPM) images only");
  }
  switch (method) {
    case Method::FQRRI: return encode_fqrri(*rgb);
    case Method::FQRQCI: return encode_fqrqci(*rgb);
    case Method::MCQRI: return encode_mcqri(*rgb);
    case Method::QRCIQ: return encode_qrciq(*rgb);
    case Method::FQRI: break;
  }
  throw ArgumentError("unhandled method");
}

DecodedImage decode(Method method,
                    const std::vector<OutcomeDistribution>& outcomes,
                    std::size_t n) {
  const std::size_t expected = method == Method::FQRQCI ? 3 : 1;
  if (outcomes.size() != expected) {
    throw ArgumentError(std::string(method_name(method)) + " decodes from " +
                        std::to_string(expected) + " histogram(s), got " +
                        std::to_string(outcomes.size()));
  }
  switch (method) {
    case Method::FQRI: return wrap(decode_fqri(outcomes[0], n));
    case Method::FQRRI: return wrap(decode_fqrri(outcomes[0], n));
    case Method::FQRQCI:
      return wrap(decode_fqrqci(outcomes[0], outcomes[1], outcomes[2], n));
    case Method::MCQRI: return wrap(decode_mcqri(outcomes[0], n));
    case Method::QRCIQ: return wrap(decode_qrciq(outcomes[0], n));
  }
  throw ArgumentError("unhandled method");
}

std::vector<Circuit> measurement_circuits(const EncodeResult& encoded) {
  if (encoded.method == Method::FQRQCI) {
    auto three = fqrqci_measurement_circuits(encoded);
    return {three.begin(), three.end()};
  }
  return {encoded.circuit};
}

DecodedImage decode_exact(const EncodeResult& encoded) {
  std::vector<OutcomeDistribution> outcomes;
  for (const auto& circuit : measurement_circuits(encoded)) {
    outcomes.push_back(OutcomeDistribution::exact(run(circuit)));
  }
  return decode(encoded.method, outcomes, encoded.n);
}

RoundtripResult roundtrip(Method method, const AnyImage& input,
                          std::uint64_t shots, std::uint64_t seed) {
  const EncodeResult encoded = encode(method, input);
  std::vector<OutcomeDistribution> outcomes;
  std::uint64_t offset = 0;
  for (const auto& circuit : measurement_circuits(encoded)) {
    outcomes.push_back(OutcomeDistribution::from_histogram(
        sample(run(circuit), shots, seed + offset++)));
  }
  DecodedImage decoded = decode(method, outcomes, encoded.n);

  double error = 0.0;
  double peak = 0.0;
  if (const auto* gray = std::get_if<GrayImage>(&input)) {
    const auto& out = std::get<GrayImage>(decoded.image);
    error = mae(*gray, out);
    peak = psnr(*gray, out);
  } else {
    const auto& in = std::get<RgbImage>(input);
    const auto& out = std::get<RgbImage>(decoded.image);
    error = mae(in, out);
    peak = psnr(in, out);
  }
  RoundtripReport report{method,
                         encoded.n,
                         shots,
                         seed,
                         error,
                         peak,
                         decoded.image == input,
                         decoded.clip_events,
                         std::move(decoded.missing_states)};
  return {std::move(report), std::move(decoded.image)};
}

}  // namespace qutrit
