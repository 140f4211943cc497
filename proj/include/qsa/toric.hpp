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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsa/dense.hpp"
#include "qsa/pauli.hpp"
#include "qsa/schedule.hpp"

namespace qsa {

enum class Boundary { open, periodic };
enum class LatticeModel { wen, kitaev_holes };
enum class HoleKind { smooth, rough };

std::string to_string(Boundary b);
std::string to_string(LatticeModel m);
std::string to_string(HoleKind k);
Boundary boundary_from_string(const std::string& s);
LatticeModel model_from_string(const std::string& s);
HoleKind hole_kind_from_string(const std::string& s);

/** Lattice coordinate (i, j): row i counts upward, column j rightward. */
using Cell = std::pair<int, int>;

/**
 * Undriven region.
 *
 * On the Wen model the cells are plaquette indices. On the kitaev_holes
 * model a smooth hole lists faces and a rough hole lists vertices.
 */
struct Hole {
  std::vector<Cell> plaquettes;
  HoleKind kind = HoleKind::smooth;
};

/**
 * Twist defect on row `row` of an open Wen lattice.
 *
 * A paired twist places a five-site term at column `col`, `extent`
 * deformed plaquettes to its right and a second five-site term after
 * them. An unpaired twist runs its deformed row to the right boundary
 * and carries a single five-site term.
 */
struct Twist {
  int row = 0;
  int col = 0;
  int extent = 0;
  bool paired = true;
};

/**
 * Square lattice description.
 *
 * Wen: rows × cols spins, site index i·cols + j. kitaev_holes: rows × cols
 * vertices with spins on edges; horizontal edges h(i, j), j = 1..cols, join
 * vertex (i, j-1) to (i, j), so h(i, cols) dangles off a rough right
 * boundary; vertical edges v(i, j) join (i, j) to (i+1, j).
 */
struct LatticeSpec {
  int rows = 2;
  int cols = 2;
  Boundary boundary = Boundary::open;
  LatticeModel model = LatticeModel::wen;
  double J = 1.0;
  std::vector<Hole> holes;
  std::vector<Twist> twists;

  /** Throws DomainError when the invariants fail. */
  void check() const;

  std::size_t n_sites() const;

  /** Wen spin index; wraps on periodic lattices, throws DomainError off lattice. */
  std::size_t site(int i, int j) const;

  bool plaquette_exists(int i, int j) const;
  bool in_hole(const Cell& cell, HoleKind kind) const;
};

/** kitaev_holes edge indices. */
std::size_t h_edge(const LatticeSpec& spec, int i, int j);
std::size_t v_edge(const LatticeSpec& spec, int i, int j);

/** One Hamiltonian term with its stage group (1-based). */
struct Plaquette {
  Cell index;
  PauliString op;
  int group = 1;
  std::string kind;  // plaquette, twist, deformed, star, face
};

struct PlaquetteSet {
  std::size_t n_sites = 0;
  std::vector<Plaquette> terms;

  /** Σ coeff·op over all terms. */
  WeightedPauliSum sum(double coeff = 1.0) const;
  int group_count() const;
  const Plaquette* find(const Cell& index, const std::string& kind = "plaquette") const;
};

/** P(i,j) = X(i,j) Z(i,j+1) Z(i+1,j) X(i+1,j+1). */
PauliString wen_plaquette(const LatticeSpec& spec, int i, int j);

/** Wen plaquettes, minus those inside holes. Group 2(i mod 2) + (j mod 2) + 1. */
PlaquetteSet build_wen(const LatticeSpec& spec);

/**
 * Nearest and diagonal neighbours for the Wen model; for kitaev_holes every
 * pair of spins that share a star or face term.
 */
ConnectivityGraph lattice_graph(const LatticeSpec& spec);

/**
 * Three-pulse schedule for exp(-i·tg·P(i,j)).
 *
 * Returns nullopt when the plaquette lies in a hole, which means it is not
 * driven. Throws DomainError when the plaquette does not exist.
 */
std::optional<QsaSchedule> plaquette_schedule(int i, int j, const LatticeSpec& spec,
                                              double tg = 0.0);

/** Four stages, one per group, realising exp(+i·J_tau·Σ P). */
PulseProgram digital_sequence(const LatticeSpec& spec, double J_tau);

/** (X+Z)/√2 on every spin with i + j odd, applied to |0…0⟩. */
Statevector build_psi0(const LatticeSpec& spec);

/** Plaquettes with i + j even: the ones the ground-state preparation drives. */
std::vector<Cell> even_plaquettes(const LatticeSpec& spec);

/** Π(1 + P)/√2 over the even plaquettes applied to psi0, normalised. */
Statevector ground_state_projector(const LatticeSpec& spec);

/** One sweep rotation exp(-i·π/4·generator) on a plaquette. */
struct SweepStep {
  Cell plaquette;
  PauliString generator;
};

/**
 * Stages of the sweep, each advancing one plaquette on every diagonal.
 *
 * Open Wen lattices only.
 */
std::vector<std::vector<SweepStep>> sweep_plan(const LatticeSpec& spec);

/** psi0 driven through the sweep with compiled four-body rotations. */
Statevector ground_state_sweep(const LatticeSpec& spec);

/**
 * Wen terms with twists inserted, or the kitaev_holes star/face terms with
 * hole regions omitted. Groups come from a greedy colouring of overlaps.
 */
PlaquetteSet build_variant(const LatticeSpec& spec);

/** The terms digital_sequence drives: build_wen, or build_variant with twists. */
PlaquetteSet driven_terms(const LatticeSpec& spec);

/** kitaev_holes star at vertex (i, j) and face F(i, j), j in 1..cols. */
PauliString kitaev_star(const LatticeSpec& spec, int i, int j);
PauliString kitaev_face(const LatticeSpec& spec, int i, int j);

}  // namespace qsa
