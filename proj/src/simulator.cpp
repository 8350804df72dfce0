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

#include "qutrit/simulator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "qutrit/errors.hpp"

namespace qutrit {

void apply_op(Statevector& state, const CircuitOp& op) {
  const std::size_t q = state.num_qutrits();
  op.validate(q);
  const GateMatrix m = op.gate.matrix();

  auto stride = [q](std::size_t position) { return pow3(q - 1 - position); };

  std::uint64_t fixed = 0;
  std::vector<bool> bound(q, false);
  bound[op.target] = true;
  for (const auto& c : op.controls) {
    fixed += c.value * stride(c.qutrit);
    bound[c.qutrit] = true;
  }
  std::vector<std::uint64_t> free_strides;
  for (std::size_t p = 0; p < q; ++p) {
    if (!bound[p]) free_strides.push_back(stride(p));
  }

  const std::uint64_t target_stride = stride(op.target);
  const std::uint64_t blocks = pow3(free_strides.size());
  auto amps = state.amplitudes();
  for (std::uint64_t k = 0; k < blocks; ++k) {
    std::uint64_t base = fixed;
    std::uint64_t rest = k;
    for (std::size_t f = free_strides.size(); f-- > 0;) {
      base += (rest % 3) * free_strides[f];
      rest /= 3;
    }
    const std::array<GateMatrix::Entry, 3> in{
        amps[base], amps[base + target_stride],
        amps[base + 2 * target_stride]};
    const auto out = m.apply(in);
    amps[base] = out[0];
    amps[base + target_stride] = out[1];
    amps[base + 2 * target_stride] = out[2];
  }
}

Statevector run(const Circuit& circuit) {
  Statevector state = Statevector::zero(circuit.num_qutrits());
  for (const auto& op : circuit.ops()) apply_op(state, op);
  return state;
}

std::vector<double> probabilities(const Statevector& state) {
  std::vector<double> out(state.size());
  for (std::size_t k = 0; k < state.size(); ++k) out[k] = std::norm(state[k]);
  return out;
}

ShotHistogram::ShotHistogram(std::size_t num_qutrits)
    : num_qutrits_(num_qutrits) {
  if (num_qutrits == 0 || num_qutrits > kMaxQutrits) {
    throw CapacityError("histogram register size out of range");
  }
}

void ShotHistogram::add(std::uint64_t index, std::uint64_t count) {
  if (index >= pow3(num_qutrits_)) {
    throw RangeError("outcome index " + std::to_string(index) +
                     " out of range");
  }
  if (count == 0) return;
  counts_[index] += count;
  shots_ += count;
}

void ShotHistogram::add(const TritString& state, std::uint64_t count) {
  if (state.size() != num_qutrits_) {
    throw ShapeError("outcome \"" + state.str() + "\" has " +
                     std::to_string(state.size()) + " trits, expected " +
                     std::to_string(num_qutrits_));
  }
  add(index_from_trits(state), count);
}

std::uint64_t ShotHistogram::count(std::uint64_t index) const {
  const auto it = counts_.find(index);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t ShotHistogram::count(const TritString& state) const {
  if (state.size() != num_qutrits_) return 0;
  return count(index_from_trits(state));
}

ShotHistogram sample(const Statevector& state, std::uint64_t shots,
                     std::uint64_t seed) {
  if (shots == 0) throw ArgumentError("shots must be at least 1");
  const auto probs = probabilities(state);
  double total = 0.0;
  for (double p : probs) total += p;
  if (!(total > 0.0)) throw ArgumentError("cannot sample from a zero state");

  std::mt19937_64 rng(seed);
  ShotHistogram histogram(state.num_qutrits());
  std::uint64_t remaining = shots;
  double remaining_mass = total;
  std::size_t last = 0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (probs[k] > 0.0) last = k;
  }
  for (std::size_t k = 0; k < probs.size() && remaining > 0; ++k) {
    if (probs[k] <= 0.0) continue;
    std::uint64_t drawn = remaining;
    if (k != last) {
      const double ratio = std::clamp(probs[k] / remaining_mass, 0.0, 1.0);
      std::binomial_distribution<std::uint64_t> binomial(remaining, ratio);
      drawn = binomial(rng);
    }
    histogram.add(k, drawn);
    remaining -= drawn;
    remaining_mass -= probs[k];
  }
  return histogram;
}

OutcomeDistribution OutcomeDistribution::exact(const Statevector& state) {
  return {state.num_qutrits(), qutrit::probabilities(state), 0};
}

OutcomeDistribution OutcomeDistribution::from_histogram(
    const ShotHistogram& histogram) {
  if (histogram.shots() == 0) throw ArgumentError("histogram is empty");
  OutcomeDistribution out;
  out.num_qutrits = histogram.num_qutrits();
  out.probabilities.assign(pow3(histogram.num_qutrits()), 0.0);
  out.shots = histogram.shots();
  const double total = static_cast<double>(histogram.shots());
  for (const auto& [index, count] : histogram.counts()) {
    out.probabilities[index] = static_cast<double>(count) / total;
  }
  return out;
}

std::string histogram_to_csv(const ShotHistogram& histogram) {
  std::string out = "state,count\n";
  for (const auto& [index, count] : histogram.counts()) {
    out += trits_from_index(index, histogram.num_qutrits()).str();
    out += ',';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

std::string probabilities_to_csv(const std::vector<double>& probabilities,
                                 std::size_t num_qutrits) {
  if (probabilities.size() != pow3(num_qutrits)) {
    throw ShapeError("probability vector length does not match register");
  }
  std::string out = "state,probability\n";
  char buf[40];
  for (std::size_t k = 0; k < probabilities.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", probabilities[k]);
    out += trits_from_index(k, num_qutrits).str();
    out += ',';
    out += buf;
    out += '\n';
  }
  return out;
}

namespace {

struct CsvRow {
  TritString state;
  std::string value;
};

std::vector<CsvRow> parse_rows(std::string_view text, std::string& header) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ParseError("CSV: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  header = line;
  std::vector<CsvRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw ParseError("CSV line " + std::to_string(line_no) +
                       ": expected two fields");
    }
    rows.push_back({TritString::parse(line.substr(0, comma)),
                    line.substr(comma + 1)});
  }
  if (rows.empty()) throw ParseError("CSV: no data rows");
  const std::size_t width = rows.front().state.size();
  for (const auto& row : rows) {
    if (row.state.size() != width) {
      throw ShapeError("CSV: state \"" + row.state.str() +
                       "\" length differs from first row (" +
                       std::to_string(width) + ")");
    }
  }
  return rows;
}

std::uint64_t parse_count(const std::string& field) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(field, &used);
  } catch (const std::exception&) {
    throw ParseError("CSV: invalid count \"" + field + "\"");
  }
  if (used != field.size() || field.front() == '-') {
    throw ParseError("CSV: invalid count \"" + field + "\"");
  }
  return value;
}

double parse_probability(const std::string& field) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(field, &used);
  } catch (const std::exception&) {
    throw ParseError("CSV: invalid probability \"" + field + "\"");
  }
  if (used != field.size() || !(value >= 0.0) || value > 1.0 + 1e-9) {
    throw ParseError("CSV: invalid probability \"" + field + "\"");
  }
  return value;
}

}  // namespace

ShotHistogram histogram_from_csv(std::string_view text) {
  std::string header;
  const auto rows = parse_rows(text, header);
  if (header != "state,count") {
    throw ParseError("histogram CSV: expected header \"state,count\"");
  }
  ShotHistogram histogram(rows.front().state.size());
  for (const auto& row : rows) histogram.add(row.state, parse_count(row.value));
  return histogram;
}

OutcomeDistribution outcomes_from_csv(std::string_view text) {
  std::string header;
  const auto rows = parse_rows(text, header);
  if (header == "state,count") {
    return OutcomeDistribution::from_histogram(histogram_from_csv(text));
  }
  if (header != "state,probability") {
    throw ParseError("CSV: unknown header \"" + header + "\"");
  }
  const std::size_t q = rows.front().state.size();
  if (q > kMaxQutrits) throw CapacityError("CSV register too large");
  OutcomeDistribution out;
  out.num_qutrits = q;
  out.probabilities.assign(pow3(q), 0.0);
  for (const auto& row : rows) {
    out.probabilities[index_from_trits(row.state)] =
        parse_probability(row.value);
  }
  return out;
}

}  // namespace qutrit
