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

#include <cstddef>
#include <string>

#include "qsa/pauli.hpp"

namespace qsa {

enum class Direction { forward, inverse };

/** Branch integers (m, m') selecting the forward/inverse pulse angles. */
struct Branch {
  int m = -1;
  int mp = 0;
  friend bool operator==(const Branch&, const Branch&) = default;
};

/** Forward angle 3π/2 + 2πm. */
double forward_angle(const Branch& b);
/** Inverse angle π/2 + 2πm'. */
double inverse_angle(const Branch& b);

/**
 * exp(-i·angle·H) for a generator with H² = 𝕀.
 *
 * The closed form cos(angle)·𝕀 - i·sin(angle)·H holds exactly.
 */
class InvolutionRotation {
 public:
  /** Throws DomainError unless square(generator) == 𝕀. */
  InvolutionRotation(WeightedPauliSum generator, double angle,
                     Direction direction = Direction::forward);

  const WeightedPauliSum& generator() const { return generator_; }
  double angle() const { return angle_; }
  Direction direction() const { return direction_; }
  std::size_t n_sites() const { return generator_.n_sites(); }

  /** Same generator, angle shifted by delta. */
  InvolutionRotation offset(double delta) const;

 private:
  WeightedPauliSum generator_;
  double angle_;
  Direction direction_;
};

struct AttachmentSpec {
  std::size_t connector_site = 0;
  Pauli alpha = Pauli::Z;
  Pauli beta = Pauli::X;
  std::size_t attached_site = 0;
  Pauli attached_letter = Pauli::X;
  Branch branch;

  /** Throws DomainError on alpha == beta, identity letters or equal sites. */
  void check() const;
  std::string str() const;
  friend bool operator==(const AttachmentSpec&, const AttachmentSpec&) = default;
};

struct SwapperSpec {
  std::size_t site = 0;
  Pauli alpha = Pauli::Z;
  Pauli beta = Pauli::X;
  Branch branch;

  void check() const;
  std::string str() const;
  friend bool operator==(const SwapperSpec&, const SwapperSpec&) = default;
};

/** (σ_α@connector + σ_β@connector ⊗ σ_m@attached)/√2. */
WeightedPauliSum attachment_generator(const AttachmentSpec& spec,
                                      std::size_t n_sites);
/** (σ_α + σ_β)/√2 on one site. */
WeightedPauliSum swapper_generator(const SwapperSpec& spec, std::size_t n_sites);

InvolutionRotation make_attachment(const AttachmentSpec& spec, std::size_t n_sites,
                                   Direction direction = Direction::forward);
InvolutionRotation make_swapper(const SwapperSpec& spec, std::size_t n_sites,
                                Direction direction = Direction::forward);

/**
 * U q U† for U = exp(-i·angle·H), expanded as
 * cos²θ·q + sin²θ·HqH - i·sinθ·cosθ·[H, q].
 */
ComplexPauliSum conjugate_general(const PauliString& q, const InvolutionRotation& r);

/** As conjugate_general for Hermitian q; the result is a real collected sum. */
WeightedPauliSum conjugate(const PauliString& q, const InvolutionRotation& r);

/**
 * Strict form: the conjugated string, which must collapse to one string
 * with coefficient +1. Returns nullopt otherwise.
 */
std::optional<PauliString> conjugate_strict(const PauliString& q,
                                            const InvolutionRotation& r);

/** Replaces the connector letter at s.site by the other connector. */
PauliString apply_swap(const PauliString& q, const SwapperSpec& s);

}  // namespace qsa
