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

#include "qutrit/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qutrit/diagram.hpp"
#include "qutrit/errors.hpp"
#include "qutrit/simulator.hpp"

namespace qutrit::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string replace_extension(const std::string& path, const char* extension) {
  std::filesystem::path p(path);
  p.replace_extension(extension);
  return p.string();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::string measurement_variant_path(const std::string& out, int k) {
  const std::string suffix = ".m" + std::to_string(k) + ".json";
  constexpr std::string_view ext = ".json";
  if (out.size() >= ext.size() &&
      out.compare(out.size() - ext.size(), ext.size(), ext) == 0) {
    return out.substr(0, out.size() - ext.size()) + suffix;
  }
  return out + suffix;
}

nlohmann::json missing_states_json(const std::vector<MissingState>& missing) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& m : missing) {
    list.push_back({{"plane", m.plane}, {"pixel", m.pixel}, {"channel", m.channel}});
  }
  return list;
}

ordered_json report_json(const RoundtripReport& report) {
  ordered_json doc;
  doc["method"] = method_name(report.method);
  doc["n"] = report.n;
  doc["shots"] = report.shots;
  doc["seed"] = report.seed;
  doc["mae"] = report.mae;
  if (std::isinf(report.psnr)) {
    doc["psnr"] = nullptr;
  } else {
    doc["psnr"] = report.psnr;
  }
  doc["exact_match"] = report.exact_match;
  doc["clip_events"] = report.clip_events;
  doc["missing_states"] = missing_states_json(report.missing_states);
  return doc;
}

void cmd_encode(const EncodeOptions& options) {
  const Method method = parse_method(options.method);
  const EncodeResult encoded = encode(method, read_image(read_file(options.input)));
  const auto circuits = measurement_circuits(encoded);
  write_file(options.out, circuit_to_json(circuits[0]));
  for (std::size_t k = 1; k < circuits.size(); ++k) {
    write_file(measurement_variant_path(options.out, static_cast<int>(k) + 1),
               circuit_to_json(circuits[k]));
  }
}

void cmd_simulate(const SimulateOptions& options) {
  const Circuit circuit = circuit_from_json(read_file(options.circuit));
  const Statevector state = run(circuit);
  if (options.exact) {
    write_file(options.out,
               probabilities_to_csv(probabilities(state), circuit.num_qutrits()));
    return;
  }
  write_file(options.out,
             histogram_to_csv(sample(state, options.shots, options.seed)));
}

void cmd_decode(const DecodeOptions& options) {
  const Method method = parse_method(options.method);
  std::vector<std::string> paths{options.hist};
  if (method == Method::FQRQCI) {
    if (options.hist2.empty() || options.hist3.empty()) {
      throw ArgumentError(
          "fqrqci decoding needs --hist, --hist2 and --hist3 (one per "
          "measurement circuit)");
    }
    paths.push_back(options.hist2);
    paths.push_back(options.hist3);
  } else if (!options.hist2.empty() || !options.hist3.empty()) {
    throw ArgumentError("--hist2/--hist3 only apply to fqrqci");
  }
  std::vector<OutcomeDistribution> outcomes;
  for (const auto& path : paths) {
    outcomes.push_back(outcomes_from_csv(read_file(path)));
  }
  const DecodedImage decoded = decode(method, outcomes, options.n);
  write_file(options.out, write_image(decoded.image));

  ordered_json report;
  report["method"] = method_name(method);
  report["n"] = options.n;
  report["shots"] = decoded.shots_used;
  report["clip_events"] = decoded.clip_events;
  report["missing_states"] = missing_states_json(decoded.missing_states);
  if (!options.report.empty()) write_file(options.report, report.dump(2) + "\n");
}

ordered_json cmd_roundtrip(const RoundtripOptions& options) {
  const Method method = parse_method(options.method);
  const AnyImage input = read_image(read_file(options.input));
  const RoundtripResult result =
      roundtrip(method, input, options.shots, options.seed);
  std::string image_path = options.out;
  if (image_path.empty()) {
    image_path = replace_extension(
        options.report,
        std::holds_alternative<GrayImage>(result.decoded) ? ".pgm" : ".ppm");
  }
  write_file(image_path, write_image(result.decoded));
  const ordered_json report = report_json(result.report);
  write_file(options.report, report.dump(2) + "\n");
  return report;
}

void cmd_diagram(const std::string& circuit_path, std::ostream& out) {
  out << diagram(circuit_from_json(read_file(circuit_path)));
}

}  // namespace qutrit::cli
