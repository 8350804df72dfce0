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

#include "qutrit/circuit.hpp"

#include <nlohmann/json.hpp>

#include "qutrit/errors.hpp"

namespace qutrit {

using ordered_json = nlohmann::ordered_json;

void CircuitOp::validate(std::size_t num_qutrits) const {
  gate.validate();
  if (target >= num_qutrits) {
    throw ArgumentError("target qutrit " + std::to_string(target) +
                        " out of range for " + std::to_string(num_qutrits) +
                        " qutrits");
  }
  std::vector<bool> used(num_qutrits, false);
  used[target] = true;
  for (const auto& c : controls) {
    if (c.qutrit >= num_qutrits) {
      throw ArgumentError("control qutrit " + std::to_string(c.qutrit) +
                          " out of range");
    }
    if (c.value > 2) {
      throw ArgumentError("control value must be a trit");
    }
    if (used[c.qutrit]) {
      throw ArgumentError("qutrit " + std::to_string(c.qutrit) +
                          " used twice in one op");
    }
    used[c.qutrit] = true;
  }
}

Circuit::Circuit(std::size_t num_qutrits) : num_qutrits_(num_qutrits) {
  if (num_qutrits == 0) throw ArgumentError("circuit needs at least 1 qutrit");
}

void Circuit::append(CircuitOp op) {
  op.validate(num_qutrits_);
  ops_.push_back(std::move(op));
}

void Circuit::append(GateSpec gate, std::size_t target,
                     std::vector<ControlSpec> controls) {
  append(CircuitOp{std::move(gate), target, std::move(controls)});
}

std::string circuit_to_json(const Circuit& circuit) {
  ordered_json ops = ordered_json::array();
  for (const auto& op : circuit.ops()) {
    ordered_json entry;
    entry["gate"] = gate_name(op.gate.kind);
    if (op.gate.subspace) {
      entry["subspace"] = {op.gate.subspace->low, op.gate.subspace->high};
    } else {
      entry["subspace"] = nullptr;
    }
    entry["params"] = op.gate.params;
    entry["target"] = op.target;
    ordered_json controls = ordered_json::array();
    for (const auto& c : op.controls) {
      controls.push_back({{"q", c.qutrit}, {"v", c.value}});
    }
    entry["controls"] = std::move(controls);
    ops.push_back(std::move(entry));
  }
  ordered_json doc;
  doc["num_qutrits"] = circuit.num_qutrits();
  doc["ops"] = std::move(ops);
  return doc.dump(2) + "\n";
}

namespace {

template <typename T>
T get_field(const nlohmann::json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(std::string("circuit JSON: missing field \"") + key + "\"");
  }
  return obj.at(key).get<T>();
}

}  // namespace

Circuit circuit_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("circuit JSON: ") + e.what());
  }
  try {
    Circuit circuit(get_field<std::size_t>(doc, "num_qutrits"));
    const auto& ops = doc.at("ops");
    if (!ops.is_array()) throw ParseError("circuit JSON: \"ops\" must be an array");
    for (const auto& entry : ops) {
      GateSpec gate;
      gate.kind = parse_gate_name(get_field<std::string>(entry, "gate"));
      const auto& subspace = entry.at("subspace");
      if (!subspace.is_null()) {
        const auto pair = subspace.get<std::vector<int>>();
        if (pair.size() != 2 || pair[0] < 0 || pair[1] > 2) {
          throw ParseError("circuit JSON: subspace must be [j,k] with trits");
        }
        gate.subspace = Subspace{static_cast<Trit>(pair[0]),
                                 static_cast<Trit>(pair[1])};
      }
      gate.params = get_field<std::vector<double>>(entry, "params");
      std::vector<ControlSpec> controls;
      for (const auto& c : entry.at("controls")) {
        const int value = get_field<int>(c, "v");
        if (value < 0 || value > 2) {
          throw ParseError("circuit JSON: control value must be 0, 1 or 2");
        }
        controls.push_back({get_field<std::size_t>(c, "q"),
                            static_cast<Trit>(value)});
      }
      circuit.append(std::move(gate), get_field<std::size_t>(entry, "target"),
                     std::move(controls));
    }
    return circuit;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("circuit JSON: ") + e.what());
  } catch (const ArgumentError& e) {
    throw ParseError(std::string("circuit JSON: invalid op: ") + e.what());
  }
}

}  // namespace qutrit
