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
 * Implementation of the qutrit-qir subcommands. Each command reads and
 * writes files and throws on any failure; the executable maps exceptions to
 * a message on stderr and a nonzero exit code.
 */

#include <cstdint>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "qutrit/pipeline.hpp"

namespace qutrit::cli {

struct EncodeOptions {
  std::string method;
  std::string input;
  std::string out;
};

struct SimulateOptions {
  std::string circuit;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  bool exact = false;
  std::string out;
};

struct DecodeOptions {
  std::string method;
  std::string hist;
  std::string hist2;
  std::string hist3;
  std::size_t n = 0;
  std::string out;
  std::string report;
};

struct RoundtripOptions {
  std::string method;
  std::string input;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::string report;
  /// Decoded image path; defaults to the report path with a .pgm/.ppm
  /// extension.
  std::string out;
};

/// Writes the circuit JSON to `out`. FQRQCI additionally writes the two
/// rotated measurement circuits next to it (see measurement_variant_path).
void cmd_encode(const EncodeOptions& options);

/// Writes a "state,count" histogram, or with `exact` a full
/// "state,probability" table.
void cmd_simulate(const SimulateOptions& options);

/// Writes the decoded image and a report JSON with fields
/// {method, n, shots, clip_events, missing_states}.
void cmd_decode(const DecodeOptions& options);

/// Runs the whole loop and writes the decoded image plus a report JSON with
/// fields {method, n, shots, seed, mae, psnr, exact_match, clip_events,
/// missing_states}; psnr is null for an exact reconstruction. Returns the
/// report as written.
nlohmann::ordered_json cmd_roundtrip(const RoundtripOptions& options);

/// Prints the text diagram of a circuit JSON file.
void cmd_diagram(const std::string& circuit_path, std::ostream& out);

/// "dir/name.json" -> "dir/name.m<k>.json" (appends when there is no .json).
std::string measurement_variant_path(const std::string& out, int k);

nlohmann::json missing_states_json(const std::vector<MissingState>& missing);
nlohmann::ordered_json report_json(const RoundtripReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace qutrit::cli
