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

#include "qutrit/diagram.hpp"

#include <algorithm>

namespace qutrit {

std::vector<std::vector<std::string>> diagram_columns(const Circuit& circuit) {
  const std::size_t q = circuit.num_qutrits();
  std::vector<std::vector<std::string>> columns;
  columns.reserve(circuit.size() + 1);

  std::vector<std::string> labels(q);
  for (std::size_t row = 0; row < q; ++row) {
    labels[row] = "q" + std::to_string(row) + ": |0>";
  }
  columns.push_back(std::move(labels));

  for (const auto& op : circuit.ops()) {
    std::vector<std::string> cells(q);
    std::size_t top = op.target;
    std::size_t bottom = op.target;
    cells[op.target] = "[" + op.gate.label() + "]";
    for (const auto& c : op.controls) {
      cells[c.qutrit] = "(" + std::to_string(c.value) + ")";
      top = std::min(top, c.qutrit);
      bottom = std::max(bottom, c.qutrit);
    }
    for (std::size_t row = top + 1; row < bottom; ++row) {
      if (cells[row].empty()) cells[row] = "|";
    }
    columns.push_back(std::move(cells));
  }
  return columns;
}

std::string diagram(const Circuit& circuit) {
  const auto columns = diagram_columns(circuit);
  const std::size_t q = circuit.num_qutrits();
  std::vector<std::string> rows(q);
  for (std::size_t col = 0; col < columns.size(); ++col) {
    std::size_t width = 0;
    for (const auto& cell : columns[col]) width = std::max(width, cell.size());
    for (std::size_t row = 0; row < q; ++row) {
      const std::string& cell = columns[col][row];
      if (col == 0) {
        rows[row] += cell + std::string(width - cell.size(), ' ') + " -";
        continue;
      }
      const std::size_t pad = width - cell.size();
      rows[row] += std::string(pad / 2, '-') + cell +
                   std::string(pad - pad / 2, '-') + "--";
    }
  }
  std::string out;
  for (const auto& row : rows) out += row + "\n";
  return out;
}

}  // namespace qutrit
