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

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "qsa/dense.hpp"
#include "qsa/pauli.hpp"
#include "qsa/propagator.hpp"
#include "qsa/toric.hpp"

namespace qsa {

/**
 * Open or closed chain of Wen-lattice spins carrying Pauli letters.
 *
 * `letters` holds one letter per site, or a single letter used everywhere.
 * Consecutive sites must be nearest or diagonal neighbours.
 */
struct StringPath {
  std::vector<Cell> sites;
  std::string letters;

  /** Throws DomainError for repeated, non-adjacent or off-lattice sites. */
  void check(const LatticeSpec& spec) const;
  Pauli letter(std::size_t k) const;
  PauliString to_pauli(const LatticeSpec& spec) const;
};

enum class AnyonKind { e, m };
std::string to_string(AnyonKind k);

/** e on dark plaquettes, i + j even, so P(0,0) is dark. */
AnyonKind plaquette_kind(const Cell& plaquette);

struct Excitation {
  Cell plaquette;
  AnyonKind kind;
  friend bool operator==(const Excitation&, const Excitation&) = default;
};

/** Sorted by plaquette index. */
using Syndrome = std::vector<Excitation>;

/**
 * Excited plaquettes from the per-letter rule: Z at (i,j) flips P(i-1,j-1)
 * and P(i,j), X flips P(i,j-1) and P(i-1,j), Y flips all four. Pairs cancel.
 */
Syndrome syndrome_of(const StringPath& path, const LatticeSpec& spec);

/** Driven plaquettes that anticommute with the string. */
Syndrome syndrome_by_commutation(const PauliString& string, const LatticeSpec& spec);

/** exp(-i·tg·P) for a string P: cos(tg)·𝕀 - i·sin(tg)·P. */
class StringPropagator {
 public:
  StringPropagator(PauliString string, double tg);

  const PauliString& string() const { return string_; }
  double tg() const { return tg_; }
  InvolutionRotation rotation() const;
  Statevector apply(const Statevector& v) const;

 private:
  PauliString string_;
  double tg_;
};

StringPropagator string_propagator(const StringPath& path, const LatticeSpec& spec, double tg);

/**
 * Runs two propagators one after the other.
 *
 * Slicing them into alternating pieces is only accepted when the strings
 * share no site; crossing strings throw UnsupportedError.
 */
Statevector apply_interleaved(const StringPropagator& a, const StringPropagator& b,
                              int slices, const Statevector& v);

/**
 * Non-contractible loops of a periodic Wen lattice along column 0 and row 0.
 *
 * m-loops put Z on spins with i + j odd and X elsewhere; e-loops swap the
 * two letters. psi0 and the ground state are +1 eigenstates of the e-loops,
 * so the m-loops generate the other three memory states.
 */
struct MemoryLoops {
  PauliString vertical_m;
  PauliString horizontal_m;
  PauliString vertical_e;
  PauliString horizontal_e;
};

MemoryLoops memory_loops(const LatticeSpec& spec);

/** |G⟩, V_m|G⟩, H_m|G⟩, V_m·H_m|G⟩. */
std::array<Statevector, 4> memory_basis(const LatticeSpec& spec);

struct MemoryEncoding {
  Statevector state;
  /** Phase multiplied in after the loop propagators. */
  Complex global_phase;
  /** Loop propagators in the order applied to |G⟩. */
  std::vector<InvolutionRotation> propagators;
};

/**
 * Σ amplitudes[k]·basis[k] built from loop propagators only.
 *
 * The amplitudes are normalised first. Logical qubit 1 is flipped by the
 * vertical m-loop, qubit 2 by the horizontal one.
 */
MemoryEncoding memory_encode(const LatticeSpec& spec, const std::array<Complex, 4>& amplitudes);

/** Logical Pauli pair of a hole-encoded qubit. */
struct LogicalQubit {
  std::string encoding;  // smooth_hole, rough_hole, memory_loops
  PauliString x;
  PauliString z;
};

enum class Side { top, bottom, left, right };
std::string to_string(Side s);
Side side_from_string(const std::string& s);

/**
 * Smooth hole: X along a dual path to a smooth side, Z around the hole.
 * Rough hole: Z along a path to the rough right side, X around the hole.
 * Throws EncodingError for an incompatible side or when the pair fails to
 * commute with the driven terms.
 */
LogicalQubit hole_logicals(const LatticeSpec& spec, std::size_t hole, Side side);

/** Default side: left for smooth holes, right for rough ones. */
LogicalQubit hole_logicals(const LatticeSpec& spec, std::size_t hole);

/** |0…0⟩ projected onto every driven star: all logical Z equal +1. */
Statevector code_zero(const LatticeSpec& spec);

/** Π X_q^{b_q}|code_zero⟩ with qubit 0 as the most significant bit. */
std::vector<Statevector> logical_basis(const Statevector& zero,
                                       const std::vector<LogicalQubit>& qubits);

/** ⟨basis_r|U|basis_c⟩. */
DenseOperator logical_matrix(const StateMap& u, const std::vector<Statevector>& basis);

/** e^{i·tg}·exp(-i·tg·Z) on one qubit, equal to diag(1, e^{2i·tg}). */
DenseOperator phase_gate(double tg);

/**
 * (|0_L⟩ + e^{iθ}|1_L⟩)/√2: exp(-i·π/4·X_L), then the phase gate with
 * tg = (θ + π/2)/2 to absorb the -i.
 */
Statevector magic_state(const LogicalQubit& qubit, const Statevector& zero, double theta);

/** X on the boundary edges of a vertex region: a dual loop around it. */
PauliString vertex_loop(const LatticeSpec& spec, const std::vector<Cell>& region);

/** exp(-i·tg·loop) for the vertex-region loop. */
StringPropagator loop_propagator(const LatticeSpec& spec, const std::vector<Cell>& region,
                                 double tg);

/**
 * Controlled loop propagator exp(-i·tg·(1 - Z_c)(1 - X_loop)/2) as three
 * commuting string propagators plus a global phase e^{-i·tg/2}.
 */
struct LoopCnot {
  std::vector<StringPropagator> propagators;
  Complex global_phase;
  Statevector apply(const Statevector& v) const;
};

/**
 * CNOT from a smooth-hole control to a rough-hole target at tg = π/2.
 *
 * The region's loop must anticommute with the target's logical Z, i.e.
 * enclose the target hole; otherwise TopologyError.
 */
LoopCnot loop_cnot(const LatticeSpec& spec, std::size_t control_hole,
                   std::size_t target_hole, const std::vector<Cell>& region,
                   double tg = 1.5707963267948966);

struct NaiveMoveReport {
  double tg = 0.0;
  double naive_distance = 0.0;
  double predicted = 0.0;
  double loop_distance = 0.0;
};

/**
 * Extending a superposed string by a bare Pauli versus by a propagator.
 *
 * With |s⟩ = exp(-i·tg·X)|0⟩ the intended state is cos|0⟩ - i·sin·X·X_ext|0⟩.
 * The naive result X_ext|s⟩ misses it by 2|cos tg|·√((1 - Re⟨0|X_ext|0⟩)/2);
 * exp(-i·tg·X·X_ext)|0⟩ reaches it.
 */
NaiveMoveReport naive_move_error(const Statevector& zero, const PauliString& x_string,
                                 const PauliString& x_ext, double tg);

struct BraidReport {
  PauliString loop;
  Complex phase;      // ⟨ψ|loop|ψ⟩ with the anyons present
  Complex reference;  // ⟨G|loop|G⟩
  int enclosed_e = 0;
};

/**
 * Carries an m anyon around the given dark plaquettes.
 *
 * The closed m-string is the product of the enclosed dark plaquettes; it is
 * applied to path|G⟩ and to |G⟩.
 */
BraidReport braid(const LatticeSpec& spec, const StringPath& e_path,
                  const std::vector<Cell>& enclosed);

}  // namespace qsa
