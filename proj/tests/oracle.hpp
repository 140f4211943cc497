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

#pragma once

// Independent reference constructions for tests: Kronecker products of the
// 2x2 Pauli matrices, built without the bit-mask kernels of the library.

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "qsa/pauli.hpp"

namespace qsa::testing {

using Mat = Eigen::MatrixXcd;
using Cx = std::complex<double>;

inline Mat pauli_2x2(Pauli p) {
  Mat m(2, 2);
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, Cx(0, -1), Cx(0, 1), 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Mat kron_matrix(const PauliString& p) {
  Mat m = Mat::Identity(1, 1);
  for (Pauli l : p.letters()) m = kron(m, pauli_2x2(l));
  return m * p.phase_value();
}

inline Mat kron_matrix(const WeightedPauliSum& h) {
  const Eigen::Index dim = Eigen::Index{1} << h.n_sites();
  Mat m = Mat::Zero(dim, dim);
  for (const auto& t : h.terms()) m += t.coeff * kron_matrix(t.string);
  return m;
}

/** exp(-i·angle·H) through Eigen's general matrix exponential. */
inline Mat reference_expm(const Mat& h, double angle) {
  Mat a = Cx(0, -angle) * h;
  return a.exp();
}

inline PauliString random_string(std::mt19937_64& rng, std::size_t n,
                                 bool random_phase = true) {
  std::uniform_int_distribution<int> letter(0, 3);
  std::vector<Pauli> l(n);
  for (auto& p : l) p = static_cast<Pauli>(letter(rng));
  return PauliString(l, random_phase ? static_cast<unsigned>(letter(rng)) : 0u);
}

inline double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace qsa::testing
