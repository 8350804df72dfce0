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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracle.hpp"
#include "qutrit/errors.hpp"

namespace qutrit {
namespace {

using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kTol = 1e-12;

GateMatrix real_matrix(std::array<std::array<double, 3>, 3> rows) {
  GateMatrix m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = rows[r][c];
  return m;
}

std::array<C, 3> basis(std::size_t k) {
  std::array<C, 3> v{};
  v[k] = 1.0;
  return v;
}

void expect_vec_near(const std::array<C, 3>& got, const std::array<C, 3>& want,
                     double tol = kTol) {
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_NEAR(std::abs(got[k] - want[k]), 0.0, tol) << "component " << k;
  }
}

TEST(XGate, MatchesPermutationMatrices) {
  EXPECT_EQ(x_gate(0, 1).max_abs_diff(real_matrix({{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}})), 0.0);
  EXPECT_EQ(x_gate(0, 2).max_abs_diff(real_matrix({{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}})), 0.0);
  EXPECT_EQ(x_gate(1, 2).max_abs_diff(real_matrix({{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}})), 0.0);
}

TEST(XGate, SelfInverse) {
  for (auto [j, k] : {std::pair<Trit, Trit>{0, 1}, {0, 2}, {1, 2}}) {
    EXPECT_EQ((x_gate(j, k) * x_gate(j, k)).max_abs_diff(identity3()), 0.0);
  }
}

TEST(XGate, RejectsBadPair) {
  EXPECT_THROW(x_gate(1, 1), ArgumentError);
  EXPECT_THROW(x_gate(2, 1), ArgumentError);
  EXPECT_THROW(x_gate(1, 3), ArgumentError);
}

TEST(ShiftGate, ActionOnBasis) {
  for (std::size_t x = 0; x < 3; ++x) {
    expect_vec_near(shift_gate(1).apply(basis(x)), basis((x + 1) % 3));
    expect_vec_near(shift_gate(2).apply(basis(x)), basis((x + 2) % 3));
  }
}

TEST(ShiftGate, ProductsOfXGates) {
  EXPECT_EQ(shift_gate(1).max_abs_diff(x_gate(0, 1) * x_gate(1, 2)), 0.0);
  EXPECT_EQ(shift_gate(2).max_abs_diff(x_gate(1, 2) * x_gate(0, 1)), 0.0);
  EXPECT_LE((shift_gate(2) * shift_gate(1)).max_abs_diff(identity3()), kTol);
  const auto p1 = shift_gate(1);
  EXPECT_LE((p1 * p1 * p1).max_abs_diff(identity3()), kTol);
}

TEST(ShiftGate, RejectsOtherAmounts) {
  EXPECT_THROW(shift_gate(0), ArgumentError);
  EXPECT_THROW(shift_gate(3), ArgumentError);
}

TEST(Hadamard, ActionOnBasis) {
  const double s = 1.0 / std::sqrt(3.0);
  const C w = std::polar(1.0, 2 * kPi / 3);
  expect_vec_near(hadamard3().apply(basis(0)), {s, s, s});
  expect_vec_near(hadamard3().apply(basis(1)), {s, s * w, s * w * w});
  // e^{8πi/3} = e^{2πi/3}
  expect_vec_near(hadamard3().apply(basis(2)),
                  {s, s * std::polar(1.0, 4 * kPi / 3), s * std::polar(1.0, 8 * kPi / 3)});
}

TEST(Hadamard, UnitaryAndOrderFour) {
  const auto h = hadamard3();
  EXPECT_TRUE(is_unitary(h, kTol));
  EXPECT_LE((h * h * h * h).max_abs_diff(identity3()), kTol);
}

TEST(Rotation, ZeroAngleIsIdentity) {
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
    EXPECT_LE(rotation(a, 0, 1, 0.0).max_abs_diff(identity3()), kTol);
  }
}

TEST(Rotation, RyPiMovesZeroToOne) {
  expect_vec_near(rotation(Axis::Y, 0, 1, kPi).apply(basis(0)), basis(1));
}

TEST(Rotation, RyTwoThetaPreparesCosSin) {
  expect_vec_near(rotation(Axis::Y, 0, 1, 2 * kPi / 6).apply(basis(0)),
                  {std::sqrt(3.0) / 2.0, 0.5, 0.0});
}

TEST(Rotation, ClosedFormMatchesSeriesExponential) {
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
    for (auto [j, k] : {std::pair<Trit, Trit>{0, 1}, {0, 2}, {1, 2}}) {
      for (int step = 0; step < 100; ++step) {
        const double theta = -2 * kPi + 4 * kPi * step / 99.0;
        ASSERT_LE(rotation(a, j, k, theta)
                      .max_abs_diff(oracle::rotation_by_series(a, j, k, theta)),
                  1e-10);
      }
    }
  }
}

TEST(Rotation, AnglesAdd) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int trial = 0; trial < 200; ++trial) {
    const Axis a = static_cast<Axis>(trial % 3);
    const double t1 = angle(rng), t2 = angle(rng);
    EXPECT_LE((rotation(a, 0, 2, t1) * rotation(a, 0, 2, t2))
                  .max_abs_diff(rotation(a, 0, 2, t1 + t2)),
              kTol);
  }
}

TEST(USubspace, ReducesToRyWithoutPhases) {
  for (auto [j, k] : {std::pair<Trit, Trit>{0, 1}, {0, 2}, {1, 2}}) {
    for (double theta = -3.0; theta <= 3.0; theta += 0.1) {
      EXPECT_LE(u_subspace(j, k, theta, 0, 0).max_abs_diff(rotation(Axis::Y, j, k, theta)),
                kTol);
    }
  }
  EXPECT_LE(u_subspace(1, 2, 0.7, 0, 0).max_abs_diff(rotation(Axis::Y, 1, 2, 0.7)), kTol);
  EXPECT_LE(u_subspace(1, 2, 0, 0, 0).max_abs_diff(identity3()), kTol);
}

TEST(USubspace, CosineBasisChangeEntries) {
  const auto m = u_subspace(0, 2, kPi / 2, -kPi, -kPi);
  const double s = 1.0 / std::sqrt(2.0);
  const GateMatrix want = real_matrix({{{s, 0, s}, {0, 1, 0}, {-s, 0, s}}});
  EXPECT_LE(m.max_abs_diff(want), kTol);
}

TEST(USubspace, MatchesBlockPatternOnOneTwo) {
  const double t = 1.1, phi = 0.4, delta = -0.9;
  const auto m = u_subspace(1, 2, t, phi, delta);
  EXPECT_EQ(m(0, 0), C(1.0));
  EXPECT_LE(std::abs(m(1, 1) - std::cos(t / 2)), kTol);
  EXPECT_LE(std::abs(m(1, 2) + std::polar(1.0, delta) * std::sin(t / 2)), kTol);
  EXPECT_LE(std::abs(m(2, 1) - std::polar(1.0, phi) * std::sin(t / 2)), kTol);
  EXPECT_LE(std::abs(m(2, 2) - std::polar(1.0, delta + phi) * std::cos(t / 2)), kTol);
}

TEST(Identity, LeavesVectorsAlone) {
  expect_vec_near(identity3().apply(basis(0)), basis(0));
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  std::array<C, 3> v{C(g(rng), g(rng)), C(g(rng), g(rng)), C(g(rng), g(rng))};
  expect_vec_near(identity3().apply(v), v);
  const auto p1 = shift_gate(1);
  EXPECT_LE((p1 * p1 * p1).max_abs_diff(identity3()), kTol);
}

TEST(IsUnitary, DetectsNonUnitary) {
  EXPECT_TRUE(is_unitary(hadamard3(), 1e-12));
  GateMatrix m = identity3();
  m(0, 0) = 2.0;
  EXPECT_FALSE(is_unitary(m, 1e-12));
}

TEST(GateSpec, EveryKindUnitaryOverRandomParameters) {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> angle(-4 * kPi, 4 * kPi);
  std::uniform_int_distribution<int> pair_pick(0, 2);
  const std::pair<Trit, Trit> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
  for (int trial = 0; trial < 1000; ++trial) {
    const auto [j, k] = pairs[pair_pick(rng)];
    const GateSpec specs[] = {
        GateSpec::x(j, k),
        GateSpec::shift(1),
        GateSpec::shift(2),
        GateSpec::hadamard(),
        GateSpec::rotation(Axis::X, j, k, angle(rng)),
        GateSpec::rotation(Axis::Y, j, k, angle(rng)),
        GateSpec::rotation(Axis::Z, j, k, angle(rng)),
        GateSpec::u(j, k, angle(rng), angle(rng), angle(rng)),
        GateSpec::identity(),
    };
    for (const auto& spec : specs) {
      ASSERT_TRUE(is_unitary(spec.matrix(), 1e-12)) << spec.label();
    }
  }
}

TEST(GateSpec, ValidateRejectsMalformedSpecs) {
  GateSpec missing_subspace{GateKind::RY, std::nullopt, {0.3}};
  EXPECT_THROW(missing_subspace.validate(), ArgumentError);
  GateSpec extra_subspace{GateKind::H, Subspace{0, 1}, {}};
  EXPECT_THROW(extra_subspace.validate(), ArgumentError);
  GateSpec wrong_params{GateKind::U, Subspace{1, 2}, {0.1, 0.2}};
  EXPECT_THROW(wrong_params.validate(), ArgumentError);
  GateSpec bad_pair{GateKind::X, Subspace{2, 0}, {}};
  EXPECT_THROW(bad_pair.validate(), ArgumentError);
}

TEST(GateSpec, Labels) {
  EXPECT_EQ(GateSpec::hadamard().label(), "H");
  EXPECT_EQ(GateSpec::shift(2).label(), "+2");
  EXPECT_EQ(GateSpec::x(0, 2).label(), "X02");
  EXPECT_EQ(GateSpec::rotation(Axis::Y, 0, 1, 0.4558).label(), "RY01(0.46)");
  EXPECT_EQ(GateSpec::u(1, 2, 2.365, 1.0963, 0).label(), "U12(2.37,1.10,0.00)");
}

TEST(GateNames, ParseRoundTrip) {
  for (GateKind k : {GateKind::X, GateKind::P1, GateKind::P2, GateKind::H, GateKind::RX,
                     GateKind::RY, GateKind::RZ, GateKind::U, GateKind::I}) {
    EXPECT_EQ(parse_gate_name(gate_name(k)), k);
  }
  EXPECT_THROW(parse_gate_name("CNOT"), ParseError);
}

}  // namespace
}  // namespace qutrit
