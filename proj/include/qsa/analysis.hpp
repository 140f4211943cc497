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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsa/propagator.hpp"
#include "qsa/schedule.hpp"

namespace qsa {

/**
 * Pulse accounting for one QSA step.
 *
 * Either the pulse durations (tau, tau_prime) or the pulse strengths
 * (omega < 0 < omega_prime) are given, never both. The strength form
 * stands for durations -π/(2ω) and π/(2ω').
 */
struct StrengthParams {
  double g = 1.0;
  double t = 1.0;
  std::optional<double> tau;
  std::optional<double> tau_prime;
  std::optional<double> omega;
  std::optional<double> omega_prime;
  int n = 1;

  /** Throws DomainError when the invariants fail. */
  void check() const;
  /** (τ, τ') after converting the strength form. */
  std::pair<double, double> durations() const;
};

/** t + n(τ + τ'). */
double total_time(const StrengthParams& p);

/** g' = g·t / (t + n(τ + τ')); t·g is conserved. */
double strength_target(const StrengthParams& p);

/** Four sequential stages share the time: g·t / (4(t + τ + τ')). Needs n == 1. */
double strength_toric(const StrengthParams& p);

struct ScalingOptions {
  /** Independent offsets δ·u, u uniform in [-1, 1], instead of +δ on every pulse. */
  bool random_offsets = false;
  std::uint64_t seed = 0;
};

struct ErrorScalingReport {
  std::string subject;
  std::vector<double> deltas;
  std::vector<double> distances;
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t pulses = 0;
  bool random_offsets = false;
  std::uint64_t seed = 0;
  /** Largest |offset| applied at the largest δ. */
  double max_offset = 0.0;
};

/** Spectral distance between the pulses offset by δ and the ideal pulses. */
double perturbed_distance(const std::vector<InvolutionRotation>& pulses, std::size_t n_sites,
                          double delta, const ScalingOptions& options = {});

/**
 * Distances for each δ and the least-squares slope of log(distance) on log(δ).
 *
 * deltas must be strictly decreasing and lie in (0, 0.1].
 */
ErrorScalingReport error_scaling(const std::vector<InvolutionRotation>& pulses,
                                 std::size_t n_sites, const std::string& subject,
                                 const std::vector<double>& deltas,
                                 const ScalingOptions& options = {});
ErrorScalingReport error_scaling(const QsaSchedule& schedule, const std::string& subject,
                                 const std::vector<double>& deltas,
                                 const ScalingOptions& options = {});
ErrorScalingReport error_scaling(const PulseProgram& program, const std::string& subject,
                                 const std::vector<double>& deltas,
                                 const ScalingOptions& options = {});

}  // namespace qsa
