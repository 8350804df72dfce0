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

#include <string>
#include <vector>

#include "qutrit/circuit.hpp"

namespace qutrit {

/// Diagram cells, column-major: column 0 holds the wire labels, column k+1
/// renders op k. Every column has one cell per qutrit. A target cell reads
/// "[label]", a control cell "(v)" with v the required trit, a wire the op
/// passes over "|", and an untouched wire "".
std::vector<std::vector<std::string>> diagram_columns(const Circuit& circuit);

/// One text row per qutrit, cells padded with wire dashes to a common width.
std::string diagram(const Circuit& circuit);

}  // namespace qutrit
