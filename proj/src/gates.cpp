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

#include "qutrit/gates.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "qutrit/errors.hpp"

namespace qutrit {

namespace {

using Entry = GateMatrix::Entry;

void check_pair(Trit j, Trit k) {
  if (j >= k || k > 2) {
    throw ArgumentError("subspace pair must satisfy j < k <= 2, got (" +
                        std::to_string(j) + "," + std::to_string(k) + ")");
  }
}

// Identity with the 2x2 block [[a, b], [c, d]] placed on rows/cols (j, k).
GateMatrix embed(Trit j, Trit k, Entry a, Entry b, Entry c, Entry d) {
  GateMatrix m = identity3();
  m(j, j) = a;
  m(j, k) = b;
  m(k, j) = c;
  m(k, k) = d;
  return m;
}

std::string format_angle(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

}  // namespace

GateMatrix GateMatrix::operator*(const GateMatrix& rhs) const {
  GateMatrix out;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      Entry sum = 0.0;
      for (std::size_t k = 0; k < 3; ++k) sum += rows_[r][k] * rhs.rows_[k][c];
      out.rows_[r][c] = sum;
    }
  }
  return out;
}

GateMatrix GateMatrix::adjoint() const {
  GateMatrix out;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) out.rows_[r][c] = std::conj(rows_[c][r]);
  }
  return out;
}

std::array<Entry, 3> GateMatrix::apply(const std::array<Entry, 3>& v) const {
  std::array<Entry, 3> out{};
  for (std::size_t r = 0; r < 3; ++r) {
    out[r] = rows_[r][0] * v[0] + rows_[r][1] * v[1] + rows_[r][2] * v[2];
  }
  return out;
}

double GateMatrix::max_abs_diff(const GateMatrix& other) const {
  double worst = 0.0;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      worst = std::max(worst, std::abs(rows_[r][c] - other.rows_[r][c]));
    }
  }
  return worst;
}

GateMatrix identity3() {
  GateMatrix m;
  for (std::size_t d = 0; d < 3; ++d) m(d, d) = 1.0;
  return m;
}

GateMatrix x_gate(Trit j, Trit k) {
  check_pair(j, k);
  return embed(j, k, 0.0, 1.0, 1.0, 0.0);
}

GateMatrix shift_gate(int amount) {
  switch (amount) {
    case 1:
      return x_gate(0, 1) * x_gate(1, 2);
    case 2:
      return x_gate(1, 2) * x_gate(0, 1);
    default:
      throw ArgumentError("shift amount must be 1 or 2, got " +
                          std::to_string(amount));
  }
}

GateMatrix hadamard3() {
  const double s = 1.0 / std::sqrt(3.0);
  const Entry w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const Entry w2 = std::polar(1.0, 4.0 * std::numbers::pi / 3.0);
  return GateMatrix({{{s, s, s}, {s, s * w, s * w2}, {s, s * w2, s * w}}});
}

GateMatrix rotation(Axis axis, Trit j, Trit k, double theta) {
  check_pair(j, k);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  switch (axis) {
    case Axis::X:
      return embed(j, k, c, Entry(0.0, -s), Entry(0.0, -s), c);
    case Axis::Y:
      return embed(j, k, c, -s, s, c);
    case Axis::Z:
      return embed(j, k, std::polar(1.0, -theta / 2.0), 0.0, 0.0,
                   std::polar(1.0, theta / 2.0));
  }
  throw ArgumentError("unknown rotation axis");
}

GateMatrix u_subspace(Trit j, Trit k, double theta, double phi, double delta) {
  check_pair(j, k);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return embed(j, k, c, -std::polar(s, delta), std::polar(s, phi),
               std::polar(c, delta + phi));
}

bool is_unitary(const GateMatrix& m, double tol) {
  return (m * m.adjoint()).max_abs_diff(identity3()) <= tol;
}

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::P1: return "P1";
    case GateKind::P2: return "P2";
    case GateKind::H: return "H";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::U: return "U";
    case GateKind::I: return "I";
  }
  return "?";
}

GateKind parse_gate_name(std::string_view name) {
  for (GateKind kind : {GateKind::X, GateKind::P1, GateKind::P2, GateKind::H,
                        GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::U,
                        GateKind::I}) {
    if (gate_name(kind) == name) return kind;
  }
  throw ParseError("unknown gate name \"" + std::string(name) + "\"");
}

GateSpec GateSpec::x(Trit j, Trit k) {
  check_pair(j, k);
  return {GateKind::X, Subspace{j, k}, {}};
}

GateSpec GateSpec::shift(int amount) {
  if (amount != 1 && amount != 2) {
    throw ArgumentError("shift amount must be 1 or 2");
  }
  return {amount == 1 ? GateKind::P1 : GateKind::P2, std::nullopt, {}};
}

GateSpec GateSpec::hadamard() { return {GateKind::H, std::nullopt, {}}; }

GateSpec GateSpec::rotation(Axis axis, Trit j, Trit k, double theta) {
  check_pair(j, k);
  const GateKind kind = axis == Axis::X   ? GateKind::RX
                        : axis == Axis::Y ? GateKind::RY
                                          : GateKind::RZ;
  return {kind, Subspace{j, k}, {theta}};
}

GateSpec GateSpec::u(Trit j, Trit k, double theta, double phi, double delta) {
  check_pair(j, k);
  return {GateKind::U, Subspace{j, k}, {theta, phi, delta}};
}

GateSpec GateSpec::identity() { return {GateKind::I, std::nullopt, {}}; }

void GateSpec::validate() const {
  const bool needs_subspace = kind == GateKind::X || kind == GateKind::RX ||
                              kind == GateKind::RY || kind == GateKind::RZ ||
                              kind == GateKind::U;
  std::size_t expected_params = 0;
  if (kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ) {
    expected_params = 1;
  } else if (kind == GateKind::U) {
    expected_params = 3;
  }
  const std::string name(gate_name(kind));
  if (needs_subspace != subspace.has_value()) {
    throw ArgumentError("gate " + name +
                        (needs_subspace ? " requires a subspace"
                                        : " takes no subspace"));
  }
  if (subspace) check_pair(subspace->low, subspace->high);
  if (params.size() != expected_params) {
    throw ArgumentError("gate " + name + " takes " +
                        std::to_string(expected_params) + " parameters, got " +
                        std::to_string(params.size()));
  }
  for (double p : params) {
    if (!std::isfinite(p)) throw ArgumentError("gate parameter is not finite");
  }
}

GateMatrix GateSpec::matrix() const {
  validate();
  switch (kind) {
    case GateKind::X:
      return x_gate(subspace->low, subspace->high);
    case GateKind::P1:
      return shift_gate(1);
    case GateKind::P2:
      return shift_gate(2);
    case GateKind::H:
      return hadamard3();
    case GateKind::RX:
      return qutrit::rotation(Axis::X, subspace->low, subspace->high, params[0]);
    case GateKind::RY:
      return qutrit::rotation(Axis::Y, subspace->low, subspace->high, params[0]);
    case GateKind::RZ:
      return qutrit::rotation(Axis::Z, subspace->low, subspace->high, params[0]);
    case GateKind::U:
      return u_subspace(subspace->low, subspace->high, params[0], params[1],
                        params[2]);
    case GateKind::I:
      return identity3();
  }
  throw ArgumentError("unknown gate kind");
}

std::string GateSpec::label() const {
  std::string out;
  switch (kind) {
    case GateKind::P1: return "+1";
    case GateKind::P2: return "+2";
    default: out = gate_name(kind);
  }
  if (subspace) {
    out += static_cast<char>('0' + subspace->low);
    out += static_cast<char>('0' + subspace->high);
  }
  if (!params.empty()) {
    out += '(';
    for (std::size_t p = 0; p < params.size(); ++p) {
      if (p) out += ',';
      out += format_angle(params[p]);
    }
    out += ')';
  }
  return out;
}

}  // namespace qutrit
