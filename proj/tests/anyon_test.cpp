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

#include "qsa/anyon.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "qsa/errors.hpp"

namespace qsa {
namespace {

constexpr double kPi = std::numbers::pi;

LatticeSpec wen(int rows, int cols, Boundary b = Boundary::open) {
  LatticeSpec s;
  s.rows = rows;
  s.cols = cols;
  s.boundary = b;
  return s;
}

// 3×3 vertices: smooth hole on face (1,1), rough hole on vertex (1,2).
LatticeSpec two_holes() {
  LatticeSpec s;
  s.model = LatticeModel::kitaev_holes;
  s.rows = 3;
  s.cols = 3;
  s.holes.push_back({{{1, 1}}, HoleKind::smooth});
  s.holes.push_back({{{1, 2}}, HoleKind::rough});
  return s;
}

Syndrome excited(std::initializer_list<Cell> cells) {
  Syndrome s;
  for (const auto& c : cells) s.push_back({c, plaquette_kind(c)});
  std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.plaquette < b.plaquette; });
  return s;
}

TEST(Syndrome, SingleLetters) {
  auto spec = wen(4, 4);
  EXPECT_EQ(syndrome_of({{{2, 2}}, "Z"}, spec), excited({{1, 1}, {2, 2}}));
  EXPECT_EQ(syndrome_of({{{2, 2}}, "X"}, spec), excited({{1, 2}, {2, 1}}));
  EXPECT_EQ(syndrome_of({{{2, 2}}, "Y"}, spec), excited({{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
  auto z = syndrome_of({{{2, 2}}, "Z"}, spec);
  for (const auto& x : z) EXPECT_EQ(x.kind, AnyonKind::e);
  auto x = syndrome_of({{{2, 2}}, "X"}, spec);
  for (const auto& e : x) EXPECT_EQ(e.kind, AnyonKind::m);
}

TEST(Syndrome, DiagonalStringKeepsEndpoints) {
  auto spec = wen(5, 5);
  StringPath path{{{1, 1}, {2, 2}, {3, 3}}, "Z"};
  EXPECT_EQ(syndrome_of(path, spec), excited({{0, 0}, {3, 3}}));
}

TEST(Syndrome, PathErrors) {
  auto spec = wen(4, 4);
  EXPECT_THROW(syndrome_of({{{0, 0}, {2, 2}}, "Z"}, spec), DomainError);
  EXPECT_THROW(syndrome_of({{{0, 0}, {0, 0}}, "Z"}, spec), DomainError);
  EXPECT_THROW(syndrome_of({{{4, 0}}, "Z"}, spec), DomainError);
  EXPECT_THROW(syndrome_of({{{0, 0}, {0, 1}}, "ZZZ"}, spec), DomainError);
}

TEST(Syndrome, RuleMatchesAnticommutationOnRandomPaths) {
  std::mt19937_64 rng(31);
  const char letters[] = "XYZ";
  for (auto b : {Boundary::open, Boundary::periodic}) {
    auto spec = wen(4, 6, b);
    for (int trial = 0; trial < 200; ++trial) {
      StringPath path;
      Cell cur{static_cast<int>(rng() % 4), static_cast<int>(rng() % 6)};
      std::set<Cell> used;
      for (int k = 0; k < 6; ++k) {
        if (!used.insert(cur).second) break;
        path.sites.push_back(cur);
        path.letters.push_back(letters[rng() % 3]);
        int i = cur.first + static_cast<int>(rng() % 3) - 1;
        int j = cur.second + static_cast<int>(rng() % 3) - 1;
        if (b == Boundary::periodic) {
          i = (i + 4) % 4;
          j = (j + 6) % 6;
        } else {
          i = std::clamp(i, 0, 3);
          j = std::clamp(j, 0, 5);
        }
        cur = {i, j};
      }
      EXPECT_EQ(syndrome_of(path, spec), syndrome_by_commutation(path.to_pauli(spec), spec));
    }
  }
}

TEST(StringPropagator, Expansion) {
  auto spec = wen(3, 3);
  StringPath path{{{0, 0}, {1, 1}}, "Z"};
  const PauliString p = path.to_pauli(spec);
  DenseOperator pm = testing::kron_matrix(p);
  DenseOperator half = materialize([&](const Statevector& v) {
    return string_propagator(path, spec, kPi / 2).apply(v);
  }, 9);
  EXPECT_LE(distance(half, Complex(0, -1) * pm), 1e-12);
  DenseOperator zero = materialize([&](const Statevector& v) {
    return string_propagator(path, spec, 0).apply(v);
  }, 9);
  EXPECT_LE(distance(zero, DenseOperator::Identity(512, 512)), 1e-15);
  DenseOperator general = materialize([&](const Statevector& v) {
    return string_propagator(path, spec, 0.3).apply(v);
  }, 9);
  EXPECT_LE(distance(general, testing::reference_expm(pm, 0.3)), 1e-10);
  EXPECT_TRUE(is_unitary(general));
}

TEST(StringPropagator, QuarterTurnOnGroundState) {
  auto spec = wen(4, 4);
  Statevector g = ground_state_projector(spec);
  StringPath path{{{1, 1}, {2, 2}}, "Z"};
  Statevector excited_state = qsa::apply(path.to_pauli(spec), g);
  Statevector v = string_propagator(path, spec, kPi / 4).apply(g);
  EXPECT_NEAR(std::abs(g.dot(v) - 1 / std::sqrt(2.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(excited_state.dot(v) - Complex(0, -1 / std::sqrt(2.0))), 0.0, 1e-12);
}

TEST(StringPropagator, InterleavingCrossingStringsIsRejected) {
  auto spec = wen(3, 3);
  StringPropagator a(StringPath{{{0, 0}, {1, 1}}, "Z"}.to_pauli(spec), 0.3);
  StringPropagator b(StringPath{{{1, 1}, {2, 2}}, "X"}.to_pauli(spec), 0.2);
  StringPropagator c(StringPath{{{2, 0}}, "X"}.to_pauli(spec), 0.2);
  Statevector v = random_state(9, 3);
  EXPECT_THROW(apply_interleaved(a, b, 4, v), UnsupportedError);
  EXPECT_LT((apply_interleaved(a, c, 4, v) - c.apply(a.apply(v))).norm(), 1e-12);
}

class Memory : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    spec_ = wen(4, 4, Boundary::periodic);
    basis_ = memory_basis(spec_);
  }
  static LatticeSpec spec_;
  static std::array<Statevector, 4> basis_;
};
LatticeSpec Memory::spec_;
std::array<Statevector, 4> Memory::basis_;

TEST_F(Memory, LoopsCommuteWithPlaquettes) {
  auto loops = memory_loops(spec_);
  for (const auto& t : build_wen(spec_).terms) {
    for (const auto* l : {&loops.vertical_m, &loops.horizontal_m, &loops.vertical_e,
                          &loops.horizontal_e}) {
      EXPECT_TRUE(commutes(t.op, *l));
    }
  }
  EXPECT_FALSE(commutes(loops.vertical_m, loops.horizontal_e));
  EXPECT_FALSE(commutes(loops.horizontal_m, loops.vertical_e));
  EXPECT_TRUE(commutes(loops.vertical_m, loops.vertical_e));
  EXPECT_NEAR(expectation(loops.vertical_e, basis_[0]), 1.0, 1e-10);
  EXPECT_NEAR(expectation(loops.horizontal_e, basis_[0]), 1.0, 1e-10);
}

TEST_F(Memory, BasisIsOrthonormalGroundSpace) {
  for (int a = 0; a < 4; ++a) {
    EXPECT_NEAR(basis_[a].norm(), 1.0, 1e-12);
    for (const auto& t : build_wen(spec_).terms) {
      EXPECT_NEAR(expectation(t.op, basis_[a]), 1.0, 1e-10);
    }
    for (int b = a + 1; b < 4; ++b) EXPECT_LE(std::abs(basis_[a].dot(basis_[b])), 1e-10);
  }
}

TEST_F(Memory, SingleLoopPropagator) {
  auto loops = memory_loops(spec_);
  Statevector v = StringPropagator(loops.vertical_m, kPi / 8).apply(basis_[0]);
  EXPECT_NEAR(std::abs(basis_[0].dot(v) - std::cos(kPi / 8)), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(basis_[1].dot(v) - Complex(0, -std::sin(kPi / 8))), 0.0, 1e-10);
}

TEST_F(Memory, EncodeReachesRequestedAmplitudes) {
  auto g = memory_encode(spec_, {1, 0, 0, 0});
  EXPECT_NEAR(std::abs(g.state.dot(basis_[0]) - 1.0), 0.0, 1e-10);

  std::mt19937_64 rng(8);
  std::normal_distribution<double> n01;
  for (int trial = 0; trial < 6; ++trial) {
    std::array<Complex, 4> amps;
    double norm = 0;
    for (auto& a : amps) {
      a = {n01(rng), n01(rng)};
      norm += std::norm(a);
    }
    if (trial == 0) amps = {std::cos(0.4), 0, 0, Complex(0, std::sin(0.4))};
    if (trial == 1) amps = {0, 0, 0, 1};
    norm = trial < 2 ? 1.0 : std::sqrt(norm);
    auto enc = memory_encode(spec_, amps);
    EXPECT_NEAR(enc.state.norm(), 1.0, 1e-10);
    for (int k = 0; k < 4; ++k) {
      EXPECT_NEAR(std::abs(basis_[k].dot(enc.state) - amps[k] / norm), 0.0, 1e-8);
    }
  }
}

TEST_F(Memory, BraidAroundOneEndpointFlipsSign) {
  StringPath path{{{1, 1}, {2, 2}}, "Z"};  // e anyons on (0,0) and (2,2)
  auto one = braid(spec_, path, {{2, 2}});
  EXPECT_EQ(one.enclosed_e, 1);
  EXPECT_NEAR(std::abs(one.phase - Complex(-1, 0)), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(one.reference - Complex(1, 0)), 0.0, 1e-10);
  auto both = braid(spec_, path, {{0, 0}, {2, 2}});
  EXPECT_NEAR(std::abs(both.phase - Complex(1, 0)), 0.0, 1e-10);
  auto none = braid(spec_, path, {{0, 2}, {1, 3}});
  EXPECT_NEAR(std::abs(none.phase - Complex(1, 0)), 0.0, 1e-10);
  EXPECT_THROW(braid(spec_, path, {{0, 1}}), DomainError);
}

TEST(HoleLogicals, AnticommutingPairsCommuteWithTerms) {
  auto spec = two_holes();
  auto terms = build_variant(spec);
  for (std::size_t h = 0; h < 2; ++h) {
    auto q = hole_logicals(spec, h);
    EXPECT_FALSE(commutes(q.x, q.z));
    for (const auto& t : terms.terms) {
      EXPECT_TRUE(commutes(t.op, q.x));
      EXPECT_TRUE(commutes(t.op, q.z));
    }
  }
  auto s = hole_logicals(spec, 0);
  auto r = hole_logicals(spec, 1);
  EXPECT_TRUE(commutes(s.x, r.z));
  EXPECT_TRUE(commutes(s.z, r.x));
  EXPECT_EQ(s.encoding, "smooth_hole");
  EXPECT_EQ(r.encoding, "rough_hole");
  for (auto side : {Side::top, Side::bottom}) {
    auto alt = hole_logicals(spec, 0, side);
    EXPECT_FALSE(commutes(alt.x, alt.z));
  }
}

TEST(HoleLogicals, IncompatibleSides) {
  auto spec = two_holes();
  EXPECT_THROW(hole_logicals(spec, 0, Side::right), EncodingError);
  EXPECT_THROW(hole_logicals(spec, 1, Side::left), EncodingError);
  EXPECT_THROW(hole_logicals(wen(3, 3), 0), EncodingError);
}

TEST(HoleLogicals, CodeZeroIsStabilised) {
  auto spec = two_holes();
  Statevector zero = code_zero(spec);
  for (const auto& t : build_variant(spec).terms) {
    EXPECT_NEAR(expectation(t.op, zero), 1.0, 1e-10);
  }
  for (std::size_t h = 0; h < 2; ++h) {
    EXPECT_NEAR(expectation(hole_logicals(spec, h).z, zero), 1.0, 1e-10);
  }
}

TEST(Magic, PhaseGateIdentity) {
  for (double tg : {0.0, 0.3, kPi / 8, kPi / 4, 1.7}) {
    DenseOperator expect = DenseOperator::Zero(2, 2);
    expect(0, 0) = 1;
    expect(1, 1) = std::exp(Complex(0, 2 * tg));
    EXPECT_LE(testing::max_abs(phase_gate(tg) - expect), 1e-12);
  }
}

TEST(Magic, LogicalFidelity) {
  auto spec = two_holes();
  Statevector zero = code_zero(spec);
  for (std::size_t h = 0; h < 2; ++h) {
    auto q = hole_logicals(spec, h);
    Statevector one = qsa::apply(q.x, zero);
    for (double theta : {0.0, kPi / 4, kPi / 2, kPi}) {
      Statevector expect = (zero + std::exp(Complex(0, theta)) * one) / std::sqrt(2.0);
      EXPECT_GE(fidelity(magic_state(q, zero, theta), expect), 1 - 1e-10);
    }
  }
}

TEST(LoopCnot, TruthTable) {
  auto spec = two_holes();
  auto cnot = loop_cnot(spec, 0, 1, {{1, 2}});
  auto basis = logical_basis(code_zero(spec), {hole_logicals(spec, 0), hole_logicals(spec, 1)});
  DenseOperator m = logical_matrix([&](const Statevector& v) { return cnot.apply(v); }, basis);
  DenseOperator expect = DenseOperator::Zero(4, 4);
  expect(0, 0) = expect(1, 1) = expect(2, 3) = expect(3, 2) = 1;
  EXPECT_LE(distance(m, expect), 1e-8);
}

TEST(LoopCnot, LargerLoopAndZeroTime) {
  auto spec = two_holes();
  auto basis = logical_basis(code_zero(spec), {hole_logicals(spec, 0), hole_logicals(spec, 1)});
  auto big = loop_cnot(spec, 0, 1, {{1, 2}, {0, 2}, {2, 2}});
  DenseOperator m = logical_matrix([&](const Statevector& v) { return big.apply(v); }, basis);
  DenseOperator expect = DenseOperator::Zero(4, 4);
  expect(0, 0) = expect(1, 1) = expect(2, 3) = expect(3, 2) = 1;
  EXPECT_LE(distance(m, expect), 1e-8);
  auto idle = loop_cnot(spec, 0, 1, {{1, 2}}, 0.0);
  DenseOperator id = logical_matrix([&](const Statevector& v) { return idle.apply(v); }, basis);
  EXPECT_LE(distance(id, DenseOperator::Identity(4, 4)), 1e-10);
}

TEST(LoopCnot, NonEnclosingLoop) {
  auto spec = two_holes();
  EXPECT_THROW(loop_cnot(spec, 0, 1, {{0, 0}}), TopologyError);
  EXPECT_THROW(loop_cnot(spec, 1, 0, {{1, 2}}), EncodingError);
  auto basis = logical_basis(code_zero(spec), {hole_logicals(spec, 0), hole_logicals(spec, 1)});
  auto loop = loop_propagator(spec, {{0, 0}, {0, 1}}, kPi / 2);
  DenseOperator m = logical_matrix([&](const Statevector& v) { return loop.apply(v); }, basis);
  // Contractible loop: a stabiliser product, so only the phase e^{-i·tg} remains.
  EXPECT_LE(distance(m, Complex(0, -1) * DenseOperator::Identity(4, 4)), 1e-10);
}

TEST(NaiveMove, ErrorAndLoopRoute) {
  auto spec = two_holes();
  Statevector zero = code_zero(spec);
  auto q = hole_logicals(spec, 0, Side::bottom);  // X on h(1,1), h(0,1)
  PauliString ext = PauliString::single(spec.n_sites(), h_edge(spec, 0, 2), Pauli::X);
  auto quarter = naive_move_error(zero, q.x, ext, kPi / 4);
  EXPECT_GT(quarter.naive_distance, 0.1);
  EXPECT_NEAR(quarter.naive_distance, quarter.predicted, 1e-10);
  EXPECT_LE(quarter.loop_distance, 1e-10);
  auto half = naive_move_error(zero, q.x, ext, kPi / 2);
  EXPECT_NEAR(half.naive_distance, 0.0, 1e-10);
  EXPECT_LE(half.loop_distance, 1e-10);
}

}  // namespace
}  // namespace qsa
