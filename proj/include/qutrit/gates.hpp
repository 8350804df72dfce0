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
 * Single-qutrit unitaries.
 *
 * A subspace gate A^(jk) acts as the 2x2 qubit gate A on basis states |j⟩,|k⟩
 * (j < k) and as the identity on the remaining basis state.
 */

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qutrit/ternary.hpp"

namespace qutrit {

/// Dense 3x3 complex matrix, row-major.
class GateMatrix {
 public:
  using Entry = std::complex<double>;
  using Rows = std::array<std::array<Entry, 3>, 3>;

  GateMatrix() = default;
  explicit GateMatrix(const Rows& rows) : rows_(rows) {}

  Entry operator()(std::size_t row, std::size_t col) const {
    return rows_[row][col];
  }
  Entry& operator()(std::size_t row, std::size_t col) { return rows_[row][col]; }

  GateMatrix operator*(const GateMatrix& rhs) const;
  GateMatrix adjoint() const;
  std::array<Entry, 3> apply(const std::array<Entry, 3>& v) const;

  /// Largest entrywise |this - other|.
  double max_abs_diff(const GateMatrix& other) const;

 private:
  Rows rows_{};
};

enum class Axis { X, Y, Z };

/// Ordered basis pair (low < high) a subspace gate acts on.
struct Subspace {
  Trit low = 0;
  Trit high = 1;

  bool operator==(const Subspace&) const = default;
};

GateMatrix x_gate(Trit j, Trit k);
/// |x⟩ -> |(x + amount) mod 3⟩ for amount in {1, 2}.
GateMatrix shift_gate(int amount);
GateMatrix hadamard3();
/// exp(-i θ/2 σ_axis^(jk)), built from the closed-form 2x2 block.
GateMatrix rotation(Axis axis, Trit j, Trit k, double theta);
/// General qubit rotation U(θ, φ, δ) embedded on the (j, k) subspace:
/// [[cos θ/2, -e^{iδ} sin θ/2], [e^{iφ} sin θ/2, e^{i(δ+φ)} cos θ/2]].
GateMatrix u_subspace(Trit j, Trit k, double theta, double phi, double delta);
GateMatrix identity3();

/// True iff max |M·M† - I| <= tol.
bool is_unitary(const GateMatrix& m, double tol);

enum class GateKind { X, P1, P2, H, RX, RY, RZ, U, I };

std::string_view gate_name(GateKind kind);
/// Inverse of gate_name; throws ParseError for unknown names.
GateKind parse_gate_name(std::string_view name);

/// Gate kind plus its subspace and angle parameters.
///
/// X/RX/RY/RZ/U carry a subspace; P1/P2/H/I do not. R gates take one
/// angle, U takes (θ, φ, δ), everything else none.
struct GateSpec {
  GateKind kind = GateKind::I;
  std::optional<Subspace> subspace;
  std::vector<double> params;

  static GateSpec x(Trit j, Trit k);
  static GateSpec shift(int amount);
  static GateSpec hadamard();
  static GateSpec rotation(Axis axis, Trit j, Trit k, double theta);
  static GateSpec u(Trit j, Trit k, double theta, double phi, double delta);
  static GateSpec identity();

  /// Throws ArgumentError if subspace or parameter count do not fit the kind.
  void validate() const;
  GateMatrix matrix() const;
  /// Short label such as "H", "+1", "X01", "RY01(0.46)", "U12(2.37,1.10,0.00)".
  std::string label() const;

  bool operator==(const GateSpec&) const = default;
};

}  // namespace qutrit
