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

#include "qsa/toric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "qsa/errors.hpp"

namespace qsa {

namespace {

constexpr double kPi = std::numbers::pi;

int wrap(int a, int m) { return ((a % m) + m) % m; }

struct TwistTerms {
  std::vector<Plaquette> terms;
  std::set<Cell> dropped;  // regular plaquettes the twist replaces
};

TwistTerms twist_terms(const LatticeSpec& spec, const Twist& t) {
  const std::size_t n = spec.n_sites();
  const int r = t.row;
  const int c = t.col;
  auto term = [&](std::vector<std::tuple<int, int, Pauli>> letters) {
    std::vector<std::pair<std::size_t, Pauli>> sites;
    for (auto [i, j, p] : letters) sites.emplace_back(spec.site(i, j), p);
    return PauliString::from_sites(n, sites);
  };
  TwistTerms out;
  out.terms.push_back({{r, c},
                       term({{r, c, Pauli::X},
                             {r, c + 1, Pauli::Z},
                             {r + 1, c, Pauli::Z},
                             {r + 1, c + 1, Pauli::Y},
                             {r + 1, c + 2, Pauli::X}}),
                       0,
                       "twist"});
  const int last = t.paired ? c + t.extent : spec.cols - 3;
  for (int j = c + 1; j <= last; ++j) {
    out.terms.push_back({{r, j},
                         term({{r, j, Pauli::X},
                               {r, j + 1, Pauli::Z},
                               {r + 1, j + 1, Pauli::Z},
                               {r + 1, j + 2, Pauli::X}}),
                         0,
                         "deformed"});
  }
  int drop_to = spec.cols - 2;
  if (t.paired) {
    const int b = c + t.extent + 2;
    out.terms.push_back({{r, b - 1},
                         term({{r, b - 1, Pauli::X},
                               {r, b, Pauli::Y},
                               {r, b + 1, Pauli::Z},
                               {r + 1, b, Pauli::Z},
                               {r + 1, b + 1, Pauli::X}}),
                         0,
                         "twist"});
    drop_to = b;
  }
  for (int j = c; j <= drop_to; ++j) out.dropped.insert({r, j});
  return out;
}

bool overlaps(const PauliString& a, const PauliString& b) {
  for (std::size_t v = 0; v < a.n_sites(); ++v) {
    if (a[v] != Pauli::I && b[v] != Pauli::I) return true;
  }
  return false;
}

// Smallest group not used by an overlapping earlier term.
void greedy_groups(std::vector<Plaquette>& terms) {
  for (std::size_t k = 0; k < terms.size(); ++k) {
    std::set<int> used;
    for (std::size_t l = 0; l < k; ++l) {
      if (overlaps(terms[k].op, terms[l].op)) used.insert(terms[l].group);
    }
    int g = 1;
    while (used.count(g)) ++g;
    terms[k].group = g;
  }
}

void check_cell_unique(std::set<Cell>& seen, const Cell& c) {
  if (!seen.insert(c).second) throw DomainError("holes overlap");
}

Statevector apply_pulses(const std::vector<InvolutionRotation>& pulses, Statevector v) {
  for (const auto& p : pulses) v = qsa::apply(p, v);
  return v;
}

}  // namespace

std::string to_string(Boundary b) { return b == Boundary::open ? "open" : "periodic"; }
std::string to_string(LatticeModel m) {
  return m == LatticeModel::wen ? "wen" : "kitaev_holes";
}
std::string to_string(HoleKind k) { return k == HoleKind::smooth ? "smooth" : "rough"; }

Boundary boundary_from_string(const std::string& s) {
  if (s == "open") return Boundary::open;
  if (s == "periodic") return Boundary::periodic;
  throw ParseError("unknown boundary: " + s);
}

LatticeModel model_from_string(const std::string& s) {
  if (s == "wen") return LatticeModel::wen;
  if (s == "kitaev_holes") return LatticeModel::kitaev_holes;
  throw ParseError("unknown lattice model: " + s);
}

HoleKind hole_kind_from_string(const std::string& s) {
  if (s == "smooth") return HoleKind::smooth;
  if (s == "rough") return HoleKind::rough;
  throw ParseError("unknown hole kind: " + s);
}

void LatticeSpec::check() const {
  if (rows < 2 || cols < 2) throw DomainError("lattice needs at least 2 rows and 2 columns");
  if (model == LatticeModel::kitaev_holes) {
    if (boundary != Boundary::open) {
      throw DomainError("kitaev_holes lattices have open boundaries");
    }
    if (!twists.empty()) throw DomainError("twists need the wen model");
    std::set<Cell> faces;
    std::set<Cell> vertices;
    for (const auto& h : holes) {
      for (const auto& [i, j] : h.plaquettes) {
        if (h.kind == HoleKind::smooth) {
          if (i < 0 || i > rows - 2 || j < 1 || j > cols) {
            throw DomainError("smooth hole face out of bounds");
          }
          check_cell_unique(faces, {i, j});
        } else {
          if (i < 0 || i >= rows || j < 0 || j >= cols) {
            throw DomainError("rough hole vertex out of bounds");
          }
          check_cell_unique(vertices, {i, j});
        }
      }
    }
    return;
  }
  if (boundary == Boundary::periodic && (rows % 2 || cols % 2 || rows < 4 || cols < 4)) {
    // Odd sizes break the group parity across the seam; 2 makes P(0,0) == P(1,1).
    throw DomainError("periodic Wen lattices need even dimensions of at least 4");
  }
  std::set<Cell> seen;
  for (const auto& h : holes) {
    for (const auto& [i, j] : h.plaquettes) {
      if (!plaquette_exists(i, j)) throw DomainError("hole plaquette out of bounds");
      check_cell_unique(seen, {i, j});
    }
  }
  for (const auto& t : twists) {
    if (boundary != Boundary::open) throw DomainError("twists need an open lattice");
    if (t.extent < 0) throw DomainError("twist extent must be nonnegative");
    const int right = t.paired ? t.col + t.extent + 3 : t.col + 2;
    if (t.row < 0 || t.row > rows - 2 || t.col < 0 || right > cols - 1) {
      throw DomainError("twist out of bounds");
    }
  }
}

std::size_t LatticeSpec::n_sites() const {
  if (model == LatticeModel::kitaev_holes) {
    return static_cast<std::size_t>(cols) * static_cast<std::size_t>(2 * rows - 1);
  }
  return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
}

std::size_t LatticeSpec::site(int i, int j) const {
  if (boundary == Boundary::periodic) {
    i = wrap(i, rows);
    j = wrap(j, cols);
  } else if (i < 0 || i >= rows || j < 0 || j >= cols) {
    throw DomainError("site (" + std::to_string(i) + "," + std::to_string(j) +
                      ") off lattice");
  }
  return static_cast<std::size_t>(i * cols + j);
}

bool LatticeSpec::plaquette_exists(int i, int j) const {
  if (boundary == Boundary::periodic) return i >= 0 && i < rows && j >= 0 && j < cols;
  return i >= 0 && i < rows - 1 && j >= 0 && j < cols - 1;
}

bool LatticeSpec::in_hole(const Cell& cell, HoleKind kind) const {
  for (const auto& h : holes) {
    if (model == LatticeModel::kitaev_holes && h.kind != kind) continue;
    if (std::find(h.plaquettes.begin(), h.plaquettes.end(), cell) != h.plaquettes.end()) {
      return true;
    }
  }
  return false;
}

std::size_t h_edge(const LatticeSpec& spec, int i, int j) {
  if (i < 0 || i >= spec.rows || j < 1 || j > spec.cols) {
    throw DomainError("horizontal edge out of bounds");
  }
  return static_cast<std::size_t>(i * spec.cols + (j - 1));
}

std::size_t v_edge(const LatticeSpec& spec, int i, int j) {
  if (i < 0 || i > spec.rows - 2 || j < 0 || j >= spec.cols) {
    throw DomainError("vertical edge out of bounds");
  }
  return static_cast<std::size_t>(spec.rows * spec.cols + i * spec.cols + j);
}

PauliString kitaev_star(const LatticeSpec& spec, int i, int j) {
  PauliString p(spec.n_sites());
  if (j >= 1) p.set(h_edge(spec, i, j), Pauli::X);
  p.set(h_edge(spec, i, j + 1), Pauli::X);
  if (i >= 1) p.set(v_edge(spec, i - 1, j), Pauli::X);
  if (i <= spec.rows - 2) p.set(v_edge(spec, i, j), Pauli::X);
  return p;
}

PauliString kitaev_face(const LatticeSpec& spec, int i, int j) {
  PauliString p(spec.n_sites());
  p.set(h_edge(spec, i, j), Pauli::Z);
  p.set(h_edge(spec, i + 1, j), Pauli::Z);
  p.set(v_edge(spec, i, j - 1), Pauli::Z);
  if (j < spec.cols) p.set(v_edge(spec, i, j), Pauli::Z);
  return p;
}

WeightedPauliSum PlaquetteSet::sum(double coeff) const {
  WeightedPauliSum h(n_sites);
  for (const auto& t : terms) h.add(coeff, t.op);
  return h;
}

int PlaquetteSet::group_count() const {
  int g = 0;
  for (const auto& t : terms) g = std::max(g, t.group);
  return g;
}

const Plaquette* PlaquetteSet::find(const Cell& index, const std::string& kind) const {
  for (const auto& t : terms) {
    if (t.index == index && t.kind == kind) return &t;
  }
  return nullptr;
}

PauliString wen_plaquette(const LatticeSpec& spec, int i, int j) {
  if (!spec.plaquette_exists(i, j)) throw DomainError("no such plaquette");
  return PauliString::from_sites(spec.n_sites(), {{spec.site(i, j), Pauli::X},
                                                  {spec.site(i, j + 1), Pauli::Z},
                                                  {spec.site(i + 1, j), Pauli::Z},
                                                  {spec.site(i + 1, j + 1), Pauli::X}});
}

PlaquetteSet build_wen(const LatticeSpec& spec) {
  spec.check();
  if (spec.model != LatticeModel::wen) throw DomainError("build_wen needs the wen model");
  PlaquetteSet out;
  out.n_sites = spec.n_sites();
  const int pr = spec.boundary == Boundary::periodic ? spec.rows : spec.rows - 1;
  const int pc = spec.boundary == Boundary::periodic ? spec.cols : spec.cols - 1;
  for (int i = 0; i < pr; ++i) {
    for (int j = 0; j < pc; ++j) {
      if (spec.in_hole({i, j}, HoleKind::smooth)) continue;
      out.terms.push_back({{i, j}, wen_plaquette(spec, i, j), 2 * (i % 2) + (j % 2) + 1,
                           "plaquette"});
    }
  }
  return out;
}

ConnectivityGraph lattice_graph(const LatticeSpec& spec) {
  spec.check();
  ConnectivityGraph g(spec.n_sites());
  if (spec.model == LatticeModel::kitaev_holes) {
    LatticeSpec bare = spec;
    bare.holes.clear();
    for (const auto& t : build_variant(bare).terms) {
      auto s = t.op.support();
      for (std::size_t a = 0; a < s.size(); ++a) {
        for (std::size_t b = a + 1; b < s.size(); ++b) g.add_edge(s[a], s[b]);
      }
    }
    return g;
  }
  const bool periodic = spec.boundary == Boundary::periodic;
  auto link = [&](int i, int j, int i2, int j2) {
    if (!periodic && (i2 < 0 || i2 >= spec.rows || j2 < 0 || j2 >= spec.cols)) return;
    g.add_edge(spec.site(i, j), spec.site(i2, j2));
  };
  for (int i = 0; i < spec.rows; ++i) {
    for (int j = 0; j < spec.cols; ++j) {
      link(i, j, i, j + 1);
      link(i, j, i + 1, j);
      link(i, j, i + 1, j + 1);
      link(i, j, i + 1, j - 1);
    }
  }
  return g;
}

std::optional<QsaSchedule> plaquette_schedule(int i, int j, const LatticeSpec& spec,
                                              double tg) {
  spec.check();
  if (spec.model != LatticeModel::wen) throw DomainError("plaquette schedules need the wen model");
  if (!spec.plaquette_exists(i, j)) throw DomainError("no such plaquette");
  if (spec.in_hole({i, j}, HoleKind::smooth)) return std::nullopt;

  const std::size_t n = spec.n_sites();
  const std::size_t bl = spec.site(i, j);
  const std::size_t br = spec.site(i, j + 1);
  const std::size_t tl = spec.site(i + 1, j);
  const std::size_t tr = spec.site(i + 1, j + 1);

  QsaSchedule s;
  s.n_sites = n;
  s.seed = {PauliString::from_sites(n, {{br, Pauli::X}, {tl, Pauli::X}}), tg};
  AttachmentSpec left;
  left.connector_site = tl;
  left.alpha = Pauli::Z;
  left.beta = Pauli::X;
  left.attached_site = bl;
  left.attached_letter = Pauli::X;
  AttachmentSpec right;
  right.connector_site = br;
  right.alpha = Pauli::Z;
  right.beta = Pauli::X;
  right.attached_site = tr;
  right.attached_letter = Pauli::X;
  s.layers = {{left, right}};
  s.target = wen_plaquette(spec, i, j);
  return s;
}

PlaquetteSet build_variant(const LatticeSpec& spec) {
  spec.check();
  PlaquetteSet out;
  out.n_sites = spec.n_sites();
  if (spec.model == LatticeModel::kitaev_holes) {
    for (int i = 0; i < spec.rows; ++i) {
      for (int j = 0; j < spec.cols; ++j) {
        if (spec.in_hole({i, j}, HoleKind::rough)) continue;
        out.terms.push_back({{i, j}, kitaev_star(spec, i, j), 0, "star"});
      }
    }
    for (int i = 0; i + 1 < spec.rows; ++i) {
      for (int j = 1; j <= spec.cols; ++j) {
        if (spec.in_hole({i, j}, HoleKind::smooth)) continue;
        out.terms.push_back({{i, j}, kitaev_face(spec, i, j), 0, "face"});
      }
    }
    greedy_groups(out.terms);
    return out;
  }

  std::set<Cell> dropped;
  std::vector<Plaquette> extra;
  for (const auto& t : spec.twists) {
    auto tt = twist_terms(spec, t);
    dropped.insert(tt.dropped.begin(), tt.dropped.end());
    extra.insert(extra.end(), tt.terms.begin(), tt.terms.end());
  }
  for (auto& p : build_wen(spec).terms) {
    if (!dropped.count(p.index)) out.terms.push_back(std::move(p));
  }
  out.terms.insert(out.terms.end(), extra.begin(), extra.end());
  greedy_groups(out.terms);
  return out;
}

PlaquetteSet driven_terms(const LatticeSpec& spec) {
  if (spec.model == LatticeModel::wen && spec.twists.empty()) return build_wen(spec);
  return build_variant(spec);
}

PulseProgram digital_sequence(const LatticeSpec& spec, double J_tau) {
  PlaquetteSet terms = driven_terms(spec);
  PulseProgram program;
  program.n_sites = spec.n_sites();
  const bool plain = spec.model == LatticeModel::wen && spec.twists.empty();
  program.stages.resize(plain ? 4 : static_cast<std::size_t>(terms.group_count()));
  ConnectivityGraph graph;
  if (!plain) graph = lattice_graph(spec);
  // exp(+i·Jτ·P) is the propagator at tg = -Jτ.
  for (const auto& t : terms.terms) {
    QsaSchedule s = plain ? *plaquette_schedule(t.index.first, t.index.second, spec, -J_tau)
                          : compile(t.op, graph, Strategy::automatic, -J_tau);
    program.stages[static_cast<std::size_t>(t.group - 1)].push_back(std::move(s));
  }
  return program;
}

Statevector build_psi0(const LatticeSpec& spec) {
  spec.check();
  if (spec.model != LatticeModel::wen) throw DomainError("psi0 needs the wen model");
  const std::size_t n = spec.n_sites();
  require_state(n);
  Statevector v = basis_state(n, 0);
  const double r = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < spec.rows; ++i) {
    for (int j = 0; j < spec.cols; ++j) {
      if ((i + j) % 2 == 0) continue;
      WeightedPauliSum h(n);
      h.add(r, PauliString::single(n, spec.site(i, j), Pauli::X));
      h.add(r, PauliString::single(n, spec.site(i, j), Pauli::Z));
      v = qsa::apply(h, v);
    }
  }
  return v;
}

std::vector<Cell> even_plaquettes(const LatticeSpec& spec) {
  std::vector<Cell> out;
  for (const auto& t : build_wen(spec).terms) {
    if ((t.index.first + t.index.second) % 2 == 0) out.push_back(t.index);
  }
  return out;
}

Statevector ground_state_projector(const LatticeSpec& spec) {
  Statevector v = build_psi0(spec);
  const double r = 1.0 / std::sqrt(2.0);
  for (const auto& [i, j] : even_plaquettes(spec)) {
    v = r * (v + qsa::apply(wen_plaquette(spec, i, j), v));
  }
  const double norm = v.norm();
  if (norm < 1e-8) throw DomainError("projected state vanishes");
  return v / norm;
}

std::vector<std::vector<SweepStep>> sweep_plan(const LatticeSpec& spec) {
  spec.check();
  if (spec.model != LatticeModel::wen || spec.boundary != Boundary::open) {
    throw UnsupportedError("the sweep is defined on open Wen lattices");
  }
  const std::size_t n = spec.n_sites();
  std::map<int, std::vector<Cell>> diagonals;  // keyed by i - j, ascending i
  for (const auto& c : even_plaquettes(spec)) diagonals[c.first - c.second].push_back(c);

  std::vector<std::vector<SweepStep>> stages;
  for (auto& [key, cells] : diagonals) {
    std::sort(cells.begin(), cells.end());
    // Diagonals starting on the left edge grow upward with Y on the top-right
    // corner; the rest grow downward with Y on the bottom-left corner. Either
    // way the Y corner is an even spin not yet touched by the sweep.
    const bool from_left = cells.front().second == 0;
    if (!from_left) std::reverse(cells.begin(), cells.end());
    for (std::size_t k = 0; k < cells.size(); ++k) {
      const auto [i, j] = cells[k];
      PauliString g = PauliString::from_sites(
          n, {{spec.site(i, j), from_left ? Pauli::X : Pauli::Y},
              {spec.site(i, j + 1), Pauli::Z},
              {spec.site(i + 1, j), Pauli::Z},
              {spec.site(i + 1, j + 1), from_left ? Pauli::Y : Pauli::X}});
      if (stages.size() <= k) stages.resize(k + 1);
      stages[k].push_back({{i, j}, g});
    }
  }
  return stages;
}

Statevector ground_state_sweep(const LatticeSpec& spec) {
  auto plan = sweep_plan(spec);
  ConnectivityGraph graph = lattice_graph(spec);
  Statevector v = build_psi0(spec);
  for (const auto& stage : plan) {
    for (const auto& step : stage) {
      QsaSchedule s = compile(step.generator, graph, Strategy::automatic, kPi / 4);
      v = apply_pulses(pulse_sequence(s), std::move(v));
    }
  }
  return v;
}

}  // namespace qsa
