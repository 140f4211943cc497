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

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <random>

#include "qsa/errors.hpp"

namespace qsa {

namespace {

// Bit masks of a Pauli string plus the constant part of its phase.
struct PauliMasks {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  unsigned phase = 0;  // exponent of i, including i per Y
};

PauliMasks masks_of(const PauliString& p) {
  PauliMasks m;
  const std::size_t n = p.n_sites();
  m.phase = p.phase();
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t b = std::uint64_t{1} << (n - 1 - k);
    switch (p[k]) {
      case Pauli::X: m.x |= b; break;
      case Pauli::Z: m.z |= b; break;
      case Pauli::Y:  // Y = i·X·Z
        m.x |= b;
        m.z |= b;
        m.phase += 1;
        break;
      case Pauli::I: break;
    }
  }
  m.phase %= 4;
  return m;
}

const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// out += c·P·in
void accumulate(const PauliMasks& m, Complex c, const Complex* in, Complex* out,
                std::size_t dim) {
  const Complex base = c * kIPow[m.phase];
  for (std::size_t b = 0; b < dim; ++b) {
    const bool neg = std::popcount(static_cast<std::uint64_t>(b) & m.z) & 1;
    out[b ^ m.x] += neg ? -base * in[b] : base * in[b];
  }
}

int read_limit() {
  const char* env = std::getenv("QSA_MAX_DENSE_QUBITS");
  if (!env || !*env) return 14;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 30) {
    throw ParseError(std::string("invalid QSA_MAX_DENSE_QUBITS '") + env + "'");
  }
  return static_cast<int>(v);
}

}  // namespace

int max_dense_qubits() {
  static const int limit = read_limit();
  return limit;
}

int max_state_qubits() { return 2 * max_dense_qubits(); }

void require_dense(std::size_t n_qubits) {
  if (static_cast<int>(n_qubits) > max_dense_qubits()) {
    throw ResourceError(std::to_string(n_qubits) + " qubits exceed the dense limit of " +
                        std::to_string(max_dense_qubits()));
  }
}

void require_state(std::size_t n_qubits) {
  if (static_cast<int>(n_qubits) > max_state_qubits()) {
    throw ResourceError(std::to_string(n_qubits) +
                        " qubits exceed the statevector limit of " +
                        std::to_string(max_state_qubits()));
  }
}

std::size_t qubit_count(const Statevector& v) {
  auto dim = static_cast<std::uint64_t>(v.size());
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw DimensionError("statevector length is not a power of two");
  }
  return static_cast<std::size_t>(std::countr_zero(dim));
}

DenseOperator to_matrix(const PauliString& p) {
  require_dense(p.n_sites());
  const std::size_t dim = std::size_t{1} << p.n_sites();
  DenseOperator m = DenseOperator::Zero(dim, dim);
  PauliMasks pm = masks_of(p);
  for (std::size_t b = 0; b < dim; ++b) {
    const bool neg = std::popcount(static_cast<std::uint64_t>(b) & pm.z) & 1;
    m(b ^ pm.x, b) = neg ? -kIPow[pm.phase] : kIPow[pm.phase];
  }
  return m;
}

DenseOperator to_matrix(const WeightedPauliSum& h) {
  require_dense(h.n_sites());
  const std::size_t dim = std::size_t{1} << h.n_sites();
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (const auto& t : h.terms()) m += t.coeff * to_matrix(t.string);
  return m;
}

DenseOperator expm_eigen(const WeightedPauliSum& h, double angle) {
  DenseOperator hm = to_matrix(h);
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(hm);
  Eigen::VectorXcd phases(es.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::exp(Complex(0, -angle * es.eigenvalues()(k)));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

DenseOperator expm(const WeightedPauliSum& h, double angle) {
  require_dense(h.n_sites());
  if (square(h).is_identity()) {
    const std::size_t dim = std::size_t{1} << h.n_sites();
    DenseOperator id = DenseOperator::Identity(dim, dim);
    return std::cos(angle) * id + Complex(0, -std::sin(angle)) * to_matrix(h);
  }
  return expm_eigen(h, angle);
}

double distance(const DenseOperator& a, const DenseOperator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("distance: operator shapes differ");
  }
  if (a.size() == 0) return 0.0;
  const DenseOperator d = a - b;
  if (d.rows() <= 64) {
    Eigen::BDCSVD<DenseOperator> svd(d);
    return svd.singularValues()(0);
  }
  // Larger operators: the top eigenvalue of the Hermitian d†d is several
  // times cheaper than a full bidiagonalisation.
  Eigen::SelfAdjointEigenSolver<DenseOperator> eig(d.adjoint() * d,
                                                   Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, eig.eigenvalues().maxCoeff()));
}

bool is_unitary(const DenseOperator& u, double tol) {
  DenseOperator id = DenseOperator::Identity(u.rows(), u.cols());
  return distance(u.adjoint() * u, id) <= tol;
}

Statevector basis_state(std::size_t n_qubits, std::uint64_t index) {
  require_state(n_qubits);
  Statevector v = Statevector::Zero(std::size_t{1} << n_qubits);
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return v;
}

Statevector random_state(std::size_t n_qubits, std::uint64_t seed) {
  require_state(n_qubits);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Statevector v(std::size_t{1} << n_qubits);
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

Statevector apply(const PauliString& p, const Statevector& v) {
  if (p.n_sites() != qubit_count(v)) throw DimensionError("apply: size mismatch");
  Statevector out = Statevector::Zero(v.size());
  accumulate(masks_of(p), 1.0, v.data(), out.data(), v.size());
  return out;
}

Statevector apply(const WeightedPauliSum& h, const Statevector& v) {
  if (h.n_sites() != qubit_count(v)) throw DimensionError("apply: size mismatch");
  Statevector out = Statevector::Zero(v.size());
  for (const auto& t : h.terms()) {
    accumulate(masks_of(t.string), t.coeff, v.data(), out.data(), v.size());
  }
  return out;
}

Statevector apply(const InvolutionRotation& r, const Statevector& v) {
  if (r.n_sites() != qubit_count(v)) throw DimensionError("apply: size mismatch");
  Statevector out = std::cos(r.angle()) * v;
  const Complex f(0, -std::sin(r.angle()));
  for (const auto& t : r.generator().terms()) {
    accumulate(masks_of(t.string), f * t.coeff, v.data(), out.data(), v.size());
  }
  return out;
}

Statevector apply(const std::vector<InvolutionRotation>& pulses,
                  const Statevector& v) {
  Statevector s = v;
  for (const auto& p : pulses) s = qsa::apply(p, s);
  return s;
}

Statevector expm_multiply(const WeightedPauliSum& h, double angle,
                          const Statevector& v) {
  double norm_bound = 0.0;
  for (const auto& t : h.terms()) norm_bound += std::abs(t.coeff);
  const double total = std::abs(angle) * norm_bound;
  const int steps = std::max(1, static_cast<int>(std::ceil(total / 0.5)));
  const Complex step_factor(0, -angle / steps);
  Statevector s = v;
  for (int k = 0; k < steps; ++k) {
    Statevector term = s;
    Statevector acc = s;
    for (int order = 1; order < 60; ++order) {
      term = (step_factor / static_cast<double>(order)) * qsa::apply(h, term);
      acc += term;
      if (term.norm() < 1e-18 * acc.norm()) break;
    }
    s = acc;
  }
  return s;
}

double expectation(const PauliString& p, const Statevector& v) {
  return v.dot(qsa::apply(p, v)).real();
}

double fidelity(const Statevector& a, const Statevector& b) {
  return std::norm(a.dot(b));
}

DenseOperator materialize(const StateMap& a, std::size_t n_qubits) {
  require_dense(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  DenseOperator m(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) m.col(c) = a(basis_state(n_qubits, c));
  return m;
}

DenseOperator pulses_unitary(const std::vector<InvolutionRotation>& pulses,
                             std::size_t n_qubits) {
  require_dense(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  DenseOperator m = DenseOperator::Identity(dim, dim);
  DenseOperator next(dim, dim);
  for (const auto& r : pulses) {
    if (r.n_sites() != n_qubits) throw DimensionError("pulse size mismatch");
    next = std::cos(r.angle()) * m;
    const Complex f(0, -std::sin(r.angle()));
    for (const auto& t : r.generator().terms()) {
      PauliMasks pm = masks_of(t.string);
      for (std::size_t c = 0; c < dim; ++c) {
        accumulate(pm, f * t.coeff, m.col(c).data(), next.col(c).data(), dim);
      }
    }
    m.swap(next);
  }
  return m;
}

DenseOperator schedule_unitary(const QsaSchedule& schedule) {
  return pulses_unitary(pulse_sequence(schedule), schedule.n_sites);
}

CompareReport compare_unitaries(const StateMap& a, const StateMap& b,
                                std::size_t n_qubits, double tolerance,
                                std::uint64_t seed, int k) {
  CompareReport r;
  r.seed = seed;
  r.tolerance = tolerance;
  if (static_cast<int>(n_qubits) <= kMatrixCompareQubits &&
      static_cast<int>(n_qubits) <= max_dense_qubits()) {
    r.metric = "spectral";
    r.distance = distance(materialize(a, n_qubits), materialize(b, n_qubits));
  } else {
    r.metric = "state_probe";
    for (int j = 0; j < k; ++j) {
      Statevector psi = random_state(n_qubits, seed + static_cast<std::uint64_t>(j));
      r.distance = std::max(r.distance, (a(psi) - b(psi)).norm());
    }
  }
  r.pass = r.distance <= tolerance;
  return r;
}

}  // namespace qsa
