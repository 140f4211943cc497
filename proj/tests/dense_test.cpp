// Copyright 2026 The QSA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsa/dense.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "qsa/errors.hpp"

namespace qsa {
namespace {

using testing::kron_matrix;
using testing::max_abs;
using testing::reference_expm;

constexpr double kPi = std::numbers::pi;

PauliString P(const char* s) { return PauliString::parse(s); }

TEST(ToMatrix, SmallCases) {
  EXPECT_LT(max_abs(to_matrix(P("I")) - DenseOperator::Identity(2, 2)), 1e-15);
  DenseOperator y(2, 2);
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  EXPECT_LT(max_abs(to_matrix(P("Y")) - y), 1e-15);
  WeightedPauliSum h(1);
  h.add(1 / std::sqrt(2.0), P("X"));
  h.add(1 / std::sqrt(2.0), P("Z"));
  DenseOperator m = to_matrix(h);
  EXPECT_LT(max_abs(m * m - DenseOperator::Identity(2, 2)), 1e-15);
}

TEST(ToMatrix, AgreesWithKroneckerOracle) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = testing::random_string(rng, 1 + trial % 6);
    auto b = testing::random_string(rng, a.n_sites());
    EXPECT_LT(max_abs(to_matrix(a) - kron_matrix(a)), 1e-15);
    EXPECT_LT(max_abs(to_matrix(a * b) - to_matrix(a) * to_matrix(b)), 1e-12);
  }
}

TEST(Expm, Examples) {
  EXPECT_LT(distance(expm(P("Z"), kPi), -DenseOperator::Identity(2, 2)), 1e-12);
  WeightedPauliSum h(1);
  h.add(1 / std::sqrt(2.0), P("X"));
  h.add(1 / std::sqrt(2.0), P("Z"));
  DenseOperator closed = expm(h, -kPi / 2);
  EXPECT_LT(distance(closed, Complex(0, 1) * to_matrix(h)), 1e-12);
  EXPECT_LT(distance(closed, expm_eigen(h, -kPi / 2)), 1e-12);
  const double tg = 0.41;
  DenseOperator xx = expm(P("XX"), tg);
  DenseOperator expect = std::cos(tg) * DenseOperator::Identity(4, 4) +
                         Complex(0, -std::sin(tg)) * kron_matrix(P("XX"));
  EXPECT_LT(distance(xx, expect), 1e-12);
}

TEST(Expm, NonInvolutionUsesEigendecomposition) {
  WeightedPauliSum h(3);
  h.add(0.7, P("XZI"));
  h.add(-0.3, P("IYY"));
  h.add(0.2, P("ZII"));
  EXPECT_LT(distance(expm(h, 0.9), reference_expm(kron_matrix(h), 0.9)), 1e-10);
}

TEST(Distance, Examples) {
  DenseOperator id = DenseOperator::Identity(2, 2);
  EXPECT_NEAR(distance(id, id), 0.0, 1e-15);
  EXPECT_NEAR(distance(id, -id), 2.0, 1e-12);
  for (double d : {1e-1, 1e-3, 1e-5}) {
    DenseOperator u = expm(P("Z"), d);
    EXPECT_NEAR(distance(u, id), 2 * std::sin(d / 2), 1e-12);
  }
  EXPECT_THROW(distance(id, DenseOperator::Identity(4, 4)), DimensionError);
}

TEST(Apply, MatchesMatrices) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + trial % 5;
    auto p = testing::random_string(rng, n);
    Statevector v = random_state(n, trial);
    EXPECT_LT((qsa::apply(p, v) - kron_matrix(p) * v).norm(), 1e-12);
    WeightedPauliSum h(n);
    h.add(0.3, testing::random_string(rng, n, false));
    h.add(-1.1, testing::random_string(rng, n, false));
    EXPECT_LT((qsa::apply(h, v) - kron_matrix(h) * v).norm(), 1e-12);
    EXPECT_LT((expm_multiply(h, 0.8, v) - reference_expm(kron_matrix(h), 0.8) * v).norm(),
              1e-10);
  }
}

TEST(Statevector, NormalizationAndDeterminism) {
  Statevector a = random_state(6, 42);
  Statevector b = random_state(6, 42);
  EXPECT_NEAR(a.norm(), 1.0, 1e-12);
  EXPECT_EQ((a - b).norm(), 0.0);
  EXPECT_NEAR(basis_state(3, 5).norm(), 1.0, 1e-15);
}

TEST(ScheduleUnitary, Examples) {
  auto s = compile(P("XZZX"), ConnectivityGraph::complete(4), Strategy::automatic, 0.3);
  DenseOperator u = schedule_unitary(s);
  EXPECT_TRUE(is_unitary(u));
  EXPECT_LE(distance(u, reference_expm(kron_matrix(P("XZZX")), 0.3)), 1e-10);

  QsaSchedule empty;
  empty.n_sites = 2;
  empty.seed = {P("XX"), 0.0};
  empty.target = P("XX");
  EXPECT_LE(distance(schedule_unitary(empty), DenseOperator::Identity(4, 4)), 1e-15);

  auto eight = compile(PauliString::parse("XXXXXXXX"), ConnectivityGraph::complete(8),
                       Strategy::doubling, 0.1);
  EXPECT_LE(distance(schedule_unitary(eight), expm(eight.target, 0.1)), 1e-10);
}

TEST(ScheduleUnitary, MasterPropertyOnRandomTargets) {
  std::mt19937_64 rng(77);
  const Pauli letters[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 6;
    PauliString t(n);
    while (t.weight() < 2) {
      for (std::size_t v = 0; v < n; ++v) t.set(v, letters[rng() % 4]);
    }
    auto g = ConnectivityGraph::complete(n);
    auto s = compile(t, g, Strategy::automatic, 0.05 * trial);
    ASSERT_TRUE(validate(s, g).ok());
    EXPECT_LE(distance(schedule_unitary(s), expm(t, s.seed.tg)), 1e-10);
  }
}

TEST(CompareUnitaries, ProbesAboveMatrixThreshold) {
  std::size_t n = kMatrixCompareQubits + 1;
  PauliString p(n);
  p.set(0, Pauli::X);
  p.set(n - 1, Pauli::Z);
  StateMap a = [&](const Statevector& v) { return qsa::apply(InvolutionRotation(p, 0.2), v); };
  StateMap b = [&](const Statevector& v) {
    return Statevector(std::cos(0.2) * v + Complex(0, -std::sin(0.2)) * qsa::apply(p, v));
  };
  CompareReport r = compare_unitaries(a, b, n, 1e-10, 3);
  EXPECT_EQ(r.metric, "state_probe");
  EXPECT_TRUE(r.pass);
}

TEST(Limits, ResourceErrorAboveLimit) {
  PauliString big(static_cast<std::size_t>(max_dense_qubits()) + 1);
  EXPECT_THROW(to_matrix(big), ResourceError);
}

}  // namespace
}  // namespace qsa
