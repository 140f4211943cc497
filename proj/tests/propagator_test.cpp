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

#include "qsa/propagator.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "qsa/errors.hpp"

namespace qsa {
namespace {

using testing::Cx;
using testing::kron_matrix;
using testing::Mat;
using testing::max_abs;
using testing::reference_expm;

constexpr double kPi = std::numbers::pi;

PauliString P(const char* s) { return PauliString::parse(s); }

AttachmentSpec attach(std::size_t c, Pauli a, Pauli b, std::size_t m, Pauli lm) {
  AttachmentSpec s;
  s.connector_site = c;
  s.alpha = a;
  s.beta = b;
  s.attached_site = m;
  s.attached_letter = lm;
  return s;
}

Mat rotation_matrix(const InvolutionRotation& r) {
  return reference_expm(kron_matrix(r.generator()), r.angle());
}

TEST(MakeAttachment, PlaquetteGenerator) {
  auto r = make_attachment(attach(2, Pauli::Z, Pauli::X, 0, Pauli::X), 4);
  WeightedPauliSum expected(4);
  expected.add(1 / std::sqrt(2.0), P("IIZI"));
  expected.add(1 / std::sqrt(2.0), P("XIXI"));
  EXPECT_TRUE(r.generator() == expected);
  EXPECT_DOUBLE_EQ(r.angle(), -kPi / 2);
  EXPECT_TRUE(square(r.generator()).is_identity());
  // Forward pulse equals i·H_A.
  Mat h = kron_matrix(r.generator());
  EXPECT_LT(max_abs(rotation_matrix(r) - Cx(0, 1) * h), 1e-12);
}

TEST(MakeAttachment, RejectsBadSpecs) {
  EXPECT_THROW(make_attachment(attach(0, Pauli::X, Pauli::X, 1, Pauli::X), 2),
               DomainError);
  EXPECT_THROW(make_attachment(attach(0, Pauli::Z, Pauli::X, 5, Pauli::X), 2),
               DomainError);
  EXPECT_THROW(make_attachment(attach(1, Pauli::Z, Pauli::X, 1, Pauli::X), 2),
               DomainError);
  EXPECT_THROW(make_attachment(attach(0, Pauli::Z, Pauli::X, 1, Pauli::I), 2),
               DomainError);
}

TEST(MakeAttachment, BranchesGiveIdenticalPropagators) {
  auto spec = attach(0, Pauli::Z, Pauli::X, 1, Pauli::Y);
  Mat base = rotation_matrix(make_attachment(spec, 2));
  Mat base_inv = rotation_matrix(make_attachment(spec, 2, Direction::inverse));
  for (int m : {-2, 0, 1}) {
    spec.branch = {m, m + 1};
    EXPECT_LT(max_abs(rotation_matrix(make_attachment(spec, 2)) - base), 1e-10);
    EXPECT_LT(max_abs(rotation_matrix(make_attachment(spec, 2, Direction::inverse)) -
                      base_inv),
              1e-10);
  }
}

TEST(MakeSwapper, GeneratorAndInverse) {
  SwapperSpec s;
  s.site = 1;
  s.alpha = Pauli::Z;
  s.beta = Pauli::Y;
  auto fwd = make_swapper(s, 3);
  WeightedPauliSum expected(3);
  expected.add(1 / std::sqrt(2.0), P("IZI"));
  expected.add(1 / std::sqrt(2.0), P("IYI"));
  EXPECT_TRUE(fwd.generator() == expected);
  EXPECT_TRUE(square(fwd.generator()).is_identity());
  Mat prod = rotation_matrix(fwd) * rotation_matrix(make_swapper(s, 3, Direction::inverse));
  EXPECT_LT(max_abs(prod - Mat::Identity(8, 8)), 1e-12);

  s.beta = Pauli::Z;
  EXPECT_THROW(make_swapper(s, 3), DomainError);
}

TEST(Conjugate, Examples) {
  auto r1 = make_attachment(attach(1, Pauli::Z, Pauli::X, 2, Pauli::X), 3);
  auto same = conjugate(P("XII"), r1);
  ASSERT_TRUE(same.single_term());
  EXPECT_EQ(same.single_term()->string, P("XII"));

  auto r2 = make_attachment(attach(2, Pauli::Z, Pauli::X, 0, Pauli::X), 4);
  auto step1 = conjugate(P("IXXI"), r2);
  ASSERT_TRUE(step1.single_term());
  EXPECT_EQ(step1.single_term()->string, P("XXZI"));
  EXPECT_DOUBLE_EQ(step1.single_term()->coeff, 1.0);

  auto r3 = make_attachment(attach(1, Pauli::Z, Pauli::X, 3, Pauli::X), 4);
  auto step2 = conjugate(P("XXZI"), r3);
  ASSERT_TRUE(step2.single_term());
  EXPECT_EQ(step2.single_term()->string, P("XZZX"));
  EXPECT_DOUBLE_EQ(step2.single_term()->coeff, 1.0);
}

TEST(Conjugate, GeneralAngleKeepsSeveralTerms) {
  InvolutionRotation r(make_attachment(attach(2, Pauli::Z, Pauli::X, 0, Pauli::X), 4)
                           .generator(),
                       0.3);
  auto out = conjugate(P("IXXI"), r);
  EXPECT_GT(out.size(), 1u);
  // Dense: U q U†.
  Mat u = rotation_matrix(r);
  Mat expect = u * kron_matrix(P("IXXI")) * u.adjoint();
  EXPECT_LT(max_abs(kron_matrix(out) - expect), 1e-12);
}

TEST(ApplySwap, Examples) {
  SwapperSpec s;
  s.site = 1;
  s.alpha = Pauli::Z;
  s.beta = Pauli::Y;
  EXPECT_EQ(apply_swap(P("XZX"), s), P("XYX"));

  SwapperSpec bad;
  bad.site = 0;
  bad.alpha = Pauli::X;
  bad.beta = Pauli::X;
  EXPECT_THROW(bad.check(), DomainError);

  SwapperSpec mismatch;
  mismatch.site = 1;
  mismatch.alpha = Pauli::X;
  mismatch.beta = Pauli::Y;
  EXPECT_THROW(apply_swap(P("XZ"), mismatch), ConnectorMismatchError);
}

TEST(PropagatorProperties, SwapMatchesConjugationAndIsInvolution) {
  std::mt19937_64 rng(5);
  const Pauli letters[] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 5;
    PauliString q = testing::random_string(rng, n, false);
    SwapperSpec s;
    s.site = rng() % n;
    s.alpha = letters[rng() % 3];
    do { s.beta = letters[rng() % 3]; } while (s.beta == s.alpha);
    Pauli cur = q[s.site];
    if (cur != s.alpha && cur != s.beta) {
      EXPECT_THROW(apply_swap(q, s), ConnectorMismatchError);
      auto strict = conjugate_strict(q, make_swapper(s, n));
      if (cur == Pauli::I) {
        // Untouched site: the swapper commutes with q.
        ASSERT_TRUE(strict);
        EXPECT_EQ(*strict, q);
      } else {
        // The third letter flips sign, which is not a letter relabelling.
        EXPECT_FALSE(strict);
      }
      continue;
    }
    PauliString swapped = apply_swap(q, s);
    EXPECT_EQ(apply_swap(swapped, s), q);
    auto via_conj = conjugate_strict(q, make_swapper(s, n));
    ASSERT_TRUE(via_conj);
    EXPECT_EQ(*via_conj, swapped);
  }
}

TEST(PropagatorProperties, AttachmentMovesConnectorLetter) {
  std::mt19937_64 rng(9);
  const Pauli letters[] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + trial % 5;
    PauliString q = testing::random_string(rng, n, false);
    AttachmentSpec a;
    a.connector_site = rng() % n;
    do { a.attached_site = rng() % n; } while (a.attached_site == a.connector_site);
    q.set(a.attached_site, Pauli::I);
    q.set(a.connector_site, letters[rng() % 3]);
    Pauli sigma_k = q[a.connector_site];
    Pauli other;
    do { other = letters[rng() % 3]; } while (other == sigma_k);
    a.attached_letter = letters[rng() % 3];
    if (rng() % 2) {
      a.alpha = sigma_k;
      a.beta = other;
    } else {
      a.alpha = other;
      a.beta = sigma_k;
    }
    auto out = conjugate_strict(q, make_attachment(a, n));
    ASSERT_TRUE(out) << q.str() << " " << a.str();
    PauliString expect = q;
    expect.set(a.connector_site, other);
    expect.set(a.attached_site, a.attached_letter);
    EXPECT_EQ(*out, expect);
  }
}

TEST(PropagatorProperties, ConjugationIsAnAutomorphism) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + trial % 3;
    PauliString q1 = testing::random_string(rng, n, false);
    PauliString q2 = testing::random_string(rng, n, false);
    AttachmentSpec a;
    a.connector_site = 0;
    a.attached_site = 1;
    a.attached_letter = static_cast<Pauli>(1 + rng() % 3);
    InvolutionRotation r(attachment_generator(a, n), 0.1 + 0.2 * (trial % 7));
    ComplexPauliSum lhs = conjugate_general(q1 * q2, r);
    ComplexPauliSum rhs = conjugate_general(q1, r) * conjugate_general(q2, r);
    EXPECT_TRUE(lhs == rhs);
    Mat u = rotation_matrix(r);
    Mat dense = u * kron_matrix(q1 * q2) * u.adjoint();
    Mat symbolic = Mat::Zero(dense.rows(), dense.cols());
    for (const auto& [letters, c] : lhs.terms()) {
      symbolic += c * kron_matrix(PauliString(letters));
    }
    EXPECT_LT(max_abs(dense - symbolic), 1e-12);
  }
}

TEST(PropagatorProperties, PropagatorLifting) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = trial < 28 ? 3 + trial % 4 : 10;
    PauliString q(n);
    q.set(0, Pauli::X);
    q.set(1, static_cast<Pauli>(1 + rng() % 3));
    AttachmentSpec a;
    a.connector_site = 1;
    a.alpha = q[1] == Pauli::Z ? Pauli::X : Pauli::Z;
    a.beta = q[1];
    a.attached_site = 2 + rng() % (n - 2);
    a.attached_letter = static_cast<Pauli>(1 + rng() % 3);
    auto r = make_attachment(a, n);
    auto lifted = conjugate_strict(q, r);
    ASSERT_TRUE(lifted);
    double tg = 0.37;
    // Pauli strings square to 𝕀, so their exponentials are cos·𝕀 - i·sin·P.
    auto string_exp = [&](const PauliString& p) {
      Mat m = kron_matrix(p);
      return Mat(std::cos(tg) * Mat::Identity(m.rows(), m.cols()) +
                 Cx(0, -std::sin(tg)) * m);
    };
    Mat h = kron_matrix(r.generator());
    Mat u = Cx(0, 1) * h;  // forward pulse at the default branch
    Mat lhs = u * string_exp(q) * u.adjoint();
    Mat rhs = string_exp(*lifted);
    Eigen::BDCSVD<Mat> svd(lhs - rhs);
    EXPECT_LE(svd.singularValues()(0), 1e-10);
  }
}

}  // namespace
}  // namespace qsa
