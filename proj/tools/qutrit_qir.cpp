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

#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "qutrit/commands.hpp"

int main(int argc, char** argv) {
  namespace cli = qutrit::cli;
  CLI::App app{"Qutrit quantum image representation toolkit"};
  app.require_subcommand(1);

  cli::EncodeOptions encode;
  auto* enc = app.add_subcommand("encode", "Build the state-preparation circuit for an image");
  enc->add_option("--method", encode.method, "fqri|fqrri|fqrqci|mcqri|qrciq")->required();
  enc->add_option("--input", encode.input, "PGM (fqri) or PPM image")->required();
  enc->add_option("--out", encode.out, "Circuit JSON output")->required();

  cli::SimulateOptions simulate;
  auto* sim = app.add_subcommand("simulate", "Run a circuit and sample or tabulate outcomes");
  sim->add_option("--circuit", simulate.circuit, "Circuit JSON")->required();
  sim->add_option("--shots", simulate.shots, "Number of shots");
  sim->add_option("--seed", simulate.seed, "RNG seed");
  sim->add_flag("--exact", simulate.exact, "Write exact probabilities instead of samples");
  sim->add_option("--out", simulate.out, "CSV output")->required();

  cli::DecodeOptions decode;
  auto* dec = app.add_subcommand("decode", "Reconstruct an image from outcome CSVs");
  dec->add_option("--method", decode.method, "fqri|fqrri|fqrqci|mcqri|qrciq")->required();
  dec->add_option("--hist", decode.hist, "Histogram or probability CSV")->required();
  dec->add_option("--hist2", decode.hist2, "fqrqci: CSV of the .m2 circuit");
  dec->add_option("--hist3", decode.hist3, "fqrqci: CSV of the .m3 circuit");
  dec->add_option("--n", decode.n, "Image exponent (side = 3^n)")->required();
  dec->add_option("--out", decode.out, "Decoded image output")->required();
  dec->add_option("--report", decode.report, "Decode report JSON");

  cli::RoundtripOptions roundtrip;
  auto* rt = app.add_subcommand("roundtrip", "Encode, sample and decode in one go");
  rt->add_option("--method", roundtrip.method, "fqri|fqrri|fqrqci|mcqri|qrciq")->required();
  rt->add_option("--input", roundtrip.input, "PGM (fqri) or PPM image")->required();
  rt->add_option("--shots", roundtrip.shots, "Shots per measurement circuit")->required();
  rt->add_option("--seed", roundtrip.seed, "RNG seed");
  rt->add_option("--report", roundtrip.report, "Report JSON output")->required();
  rt->add_option("--out", roundtrip.out, "Decoded image output");

  std::string diagram_circuit;
  auto* dia = app.add_subcommand("diagram", "Print a text circuit diagram");
  dia->add_option("--circuit", diagram_circuit, "Circuit JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enc) {
      cli::cmd_encode(encode);
    } else if (*sim) {
      cli::cmd_simulate(simulate);
    } else if (*dec) {
      cli::cmd_decode(decode);
    } else if (*rt) {
      std::cout << cli::cmd_roundtrip(roundtrip).dump(2) << "\n";
    } else if (*dia) {
      cli::cmd_diagram(diagram_circuit, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
