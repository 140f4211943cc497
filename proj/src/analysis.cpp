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

#include "qsa/analysis.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "qsa/dense.hpp"
#include "qsa/errors.hpp"

namespace qsa {

namespace {

std::vector<double> offsets(std::size_t count, const ScalingOptions& options) {
  std::vector<double> u(count, 1.0);
  if (options.random_offsets) {
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (auto& x : u) x = dist(rng);
  }
  return u;
}

}  // namespace

void StrengthParams::check() const {
  if (!(t > 0)) throw DomainError("evolution time t must be positive");
  if (n < 1) throw DomainError("step count n must be positive");
  const bool by_time = tau || tau_prime;
  const bool by_strength = omega || omega_prime;
  if (by_time == by_strength) {
    throw DomainError("give either (tau, tau_prime) or (omega, omega_prime)");
  }
  if (by_time) {
    if (!tau || !tau_prime) throw DomainError("tau and tau_prime go together");
    if (*tau < 0 || *tau_prime < 0) throw DomainError("pulse durations are nonnegative");
  } else {
    if (!omega || !omega_prime) throw DomainError("omega and omega_prime go together");
    if (!(*omega < 0 && *omega_prime > 0)) throw DomainError("need omega < 0 < omega_prime");
  }
}

std::pair<double, double> StrengthParams::durations() const {
  check();
  if (tau) return {*tau, *tau_prime};
  constexpr double kPi = std::numbers::pi;
  return {-kPi / (2 * *omega), kPi / (2 * *omega_prime)};
}

double total_time(const StrengthParams& p) {
  const auto [tau, tau_prime] = p.durations();
  return p.t + p.n * (tau + tau_prime);
}

double strength_target(const StrengthParams& p) { return p.g * p.t / total_time(p); }

double strength_toric(const StrengthParams& p) {
  if (p.n != 1) throw DomainError("the toric strength is defined for n == 1");
  return p.g * p.t / (4 * total_time(p));
}

double perturbed_distance(const std::vector<InvolutionRotation>& pulses, std::size_t n_sites,
                          double delta, const ScalingOptions& options) {
  require_dense(n_sites);
  const auto u = offsets(pulses.size(), options);
  std::vector<InvolutionRotation> shifted;
  shifted.reserve(pulses.size());
  for (std::size_t k = 0; k < pulses.size(); ++k) shifted.push_back(pulses[k].offset(delta * u[k]));
  return distance(pulses_unitary(shifted, n_sites), pulses_unitary(pulses, n_sites));
}

ErrorScalingReport error_scaling(const std::vector<InvolutionRotation>& pulses,
                                 std::size_t n_sites, const std::string& subject,
                                 const std::vector<double>& deltas,
                                 const ScalingOptions& options) {
  if (deltas.size() < 2) throw DomainError("need at least two deltas");
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    if (!(deltas[k] > 0 && deltas[k] <= 0.1)) throw DomainError("deltas must lie in (0, 0.1]");
    if (k && !(deltas[k] < deltas[k - 1])) throw DomainError("deltas must strictly decrease");
  }
  require_dense(n_sites);
  ErrorScalingReport r;
  r.subject = subject;
  r.deltas = deltas;
  r.pulses = pulses.size();
  r.random_offsets = options.random_offsets;
  r.seed = options.seed;
  for (double u : offsets(pulses.size(), options)) {
    r.max_offset = std::max(r.max_offset, std::abs(deltas.front() * u));
  }

  const DenseOperator ideal = pulses_unitary(pulses, n_sites);
  const auto u = offsets(pulses.size(), options);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double delta : deltas) {
    std::vector<InvolutionRotation> shifted;
    shifted.reserve(pulses.size());
    for (std::size_t k = 0; k < pulses.size(); ++k) {
      shifted.push_back(pulses[k].offset(delta * u[k]));
    }
    const double d = distance(pulses_unitary(shifted, n_sites), ideal);
    if (!(d > 0)) throw DomainError("zero distance at a nonzero delta; slope undefined");
    r.distances.push_back(d);
    const double x = std::log(delta);
    const double y = std::log(d);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(deltas.size());
  r.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  r.intercept = (sy - r.slope * sx) / m;
  return r;
}

ErrorScalingReport error_scaling(const QsaSchedule& schedule, const std::string& subject,
                                 const std::vector<double>& deltas,
                                 const ScalingOptions& options) {
  return error_scaling(pulse_sequence(schedule), schedule.n_sites, subject, deltas, options);
}

ErrorScalingReport error_scaling(const PulseProgram& program, const std::string& subject,
                                 const std::vector<double>& deltas,
                                 const ScalingOptions& options) {
  return error_scaling(pulse_sequence(program), program.n_sites, subject, deltas, options);
}

}  // namespace qsa
