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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qsa/pauli.hpp"
#include "qsa/propagator.hpp"
#include "qsa/schedule.hpp"

namespace qsa {

using Complex = std::complex<double>;
using DenseOperator = Eigen::MatrixXcd;
using Statevector = Eigen::VectorXcd;

/**
 * Largest qubit count for which a full operator matrix may be built.
 *
 * Read once from QSA_MAX_DENSE_QUBITS, default 14.
 */
int max_dense_qubits();

/**
 * Largest qubit count for a statevector: twice the operator limit, so a
 * state never costs more memory than the largest allowed matrix.
 */
int max_state_qubits();

/** Unitaries above this size are compared by their action on random states. */
inline constexpr int kMatrixCompareQubits = 10;

void require_dense(std::size_t n_qubits);
void require_state(std::size_t n_qubits);

/** Site 0 is the most significant bit of a basis index. */
std::size_t qubit_count(const Statevector& v);

DenseOperator to_matrix(const PauliString& p);
DenseOperator to_matrix(const WeightedPauliSum& h);

/** exp(-i·angle·h). Closed form when h² = 𝕀, else Hermitian eigendecomposition. */
DenseOperator expm(const WeightedPauliSum& h, double angle);
DenseOperator expm_eigen(const WeightedPauliSum& h, double angle);

/** Spectral norm of a - b. */
double distance(const DenseOperator& a, const DenseOperator& b);
bool is_unitary(const DenseOperator& u, double tol = 1e-10);

Statevector basis_state(std::size_t n_qubits, std::uint64_t index = 0);
Statevector random_state(std::size_t n_qubits, std::uint64_t seed);

Statevector apply(const PauliString& p, const Statevector& v);
Statevector apply(const WeightedPauliSum& h, const Statevector& v);
Statevector apply(const InvolutionRotation& r, const Statevector& v);
Statevector apply(const std::vector<InvolutionRotation>& pulses, const Statevector& v);

/** exp(-i·angle·h)|v⟩ by a Taylor series with step splitting; h need not be an involution. */
Statevector expm_multiply(const WeightedPauliSum& h, double angle, const Statevector& v);

/** Expectation ⟨v|p|v⟩ (real part). */
double expectation(const PauliString& p, const Statevector& v);

/** |⟨a|b⟩|². */
double fidelity(const Statevector& a, const Statevector& b);

DenseOperator pulses_unitary(const std::vector<InvolutionRotation>& pulses,
                             std::size_t n_qubits);
DenseOperator schedule_unitary(const QsaSchedule& schedule);

struct CompareReport {
  std::uint64_t seed = 0;
  std::string metric;  // "spectral" or "state_probe"
  double distance = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

using StateMap = std::function<Statevector(const Statevector&)>;

/**
 * Compares two unitaries given by their action.
 *
 * Up to kMatrixCompareQubits both are materialised and the spectral
 * distance is reported; above it the maximum ‖Aψ - Bψ‖ over k seeded
 * random states is reported.
 */
CompareReport compare_unitaries(const StateMap& a, const StateMap& b,
                                std::size_t n_qubits, double tolerance,
                                std::uint64_t seed = 0, int k = 20);

DenseOperator materialize(const StateMap& a, std::size_t n_qubits);

}  // namespace qsa
