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

#include "qsa/anyon.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "qsa/errors.hpp"

namespace qsa {

namespace {

constexpr double kPi = std::numbers::pi;

int wrap(int a, int m) { return ((a % m) + m) % m; }

// Signed offset on a ring of size m, folded into [-m/2, m/2].
int ring_offset(int d, int m) {
  d = wrap(d, m);
  return d > m / 2 ? d - m : d;
}

std::optional<Cell> driven_plaquette(const LatticeSpec& spec, int i, int j) {
  if (spec.boundary == Boundary::periodic) {
    i = wrap(i, spec.rows);
    j = wrap(j, spec.cols);
  }
  if (!spec.plaquette_exists(i, j) || spec.in_hole({i, j}, HoleKind::smooth)) {
    return std::nullopt;
  }
  return Cell{i, j};
}

Syndrome to_syndrome(const std::map<Cell, int>& counts) {
  Syndrome out;
  for (const auto& [cell, c] : counts) {
    if (c % 2) out.push_back({cell, plaquette_kind(cell)});
  }
  return out;
}

bool share_site(const PauliString& a, const PauliString& b) {
  for (std::size_t v = 0; v < a.n_sites(); ++v) {
    if (a[v] != Pauli::I && b[v] != Pauli::I) return true;
  }
  return false;
}

// A = e^{iφ}·Rz(a)·Rx(b)·Rz(c) with R_σ(θ) = exp(-i·θ/2·σ).
struct Euler {
  double phi, a, b, c;
};

Eigen::Matrix2cd euler_matrix(const Euler& e) {
  const Complex i(0, 1);
  auto rz = [&](double t) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = std::exp(-i * (t / 2));
    m(1, 1) = std::exp(i * (t / 2));
    return m;
  };
  Eigen::Matrix2cd rx;
  rx << std::cos(e.b / 2), -i * std::sin(e.b / 2), -i * std::sin(e.b / 2),
      std::cos(e.b / 2);
  return std::exp(i * e.phi) * rz(e.a) * rx * rz(e.c);
}

Euler zxz_angles(const Eigen::Matrix2cd& u) {
  Euler e{};
  e.phi = std::arg(u.determinant()) / 2;
  const Eigen::Matrix2cd w = u * std::exp(Complex(0, -e.phi));
  const double cb = std::abs(w(0, 0));
  const double sb = std::abs(w(1, 0));
  e.b = 2 * std::atan2(sb, cb);
  const double sum = cb > 1e-12 ? -2 * std::arg(w(0, 0)) : 0.0;
  const double diff = sb > 1e-12 ? 2 * (std::arg(w(1, 0)) + kPi / 2) : 0.0;
  e.a = (sum + diff) / 2;
  e.c = (sum - diff) / 2;
  if ((euler_matrix(e) - u).norm() > 1e-10) {
    throw Error("Euler decomposition failed to reproduce the rotation");
  }
  return e;
}

}  // namespace

void StringPath::check(const LatticeSpec& spec) const {
  if (spec.model != LatticeModel::wen) throw DomainError("string paths live on the wen model");
  if (sites.empty()) throw DomainError("empty path");
  if (letters.size() != 1 && letters.size() != sites.size()) {
    throw DomainError("path needs one letter or one per site");
  }
  std::vector<std::size_t> seen;
  for (std::size_t k = 0; k < sites.size(); ++k) {
    const auto [i, j] = sites[k];
    if (i < 0 || i >= spec.rows || j < 0 || j >= spec.cols) {
      throw DomainError("path site off lattice");
    }
    seen.push_back(spec.site(i, j));
    if (k == 0) continue;
    int di = i - sites[k - 1].first;
    int dj = j - sites[k - 1].second;
    if (spec.boundary == Boundary::periodic) {
      di = ring_offset(di, spec.rows);
      dj = ring_offset(dj, spec.cols);
    }
    if (std::abs(di) > 1 || std::abs(dj) > 1) {
      throw DomainError("consecutive path sites are not adjacent");
    }
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw DomainError("path repeats a site");
  }
  for (std::size_t k = 0; k < sites.size(); ++k) {
    if (letter(k) == Pauli::I) throw DomainError("path letters must be X, Y or Z");
  }
}

Pauli StringPath::letter(std::size_t k) const {
  return pauli_from_char(letters.size() == 1 ? letters[0] : letters.at(k));
}

PauliString StringPath::to_pauli(const LatticeSpec& spec) const {
  check(spec);
  PauliString p(spec.n_sites());
  for (std::size_t k = 0; k < sites.size(); ++k) {
    p.set(spec.site(sites[k].first, sites[k].second), letter(k));
  }
  return p;
}

std::string to_string(AnyonKind k) { return k == AnyonKind::e ? "e" : "m"; }

AnyonKind plaquette_kind(const Cell& plaquette) {
  return (plaquette.first + plaquette.second) % 2 == 0 ? AnyonKind::e : AnyonKind::m;
}

Syndrome syndrome_of(const StringPath& path, const LatticeSpec& spec) {
  path.check(spec);
  std::map<Cell, int> counts;
  auto flip = [&](int i, int j) {
    if (auto c = driven_plaquette(spec, i, j)) ++counts[*c];
  };
  for (std::size_t k = 0; k < path.sites.size(); ++k) {
    const auto [i, j] = path.sites[k];
    const Pauli p = path.letter(k);
    // Z meets the X corners of a plaquette, X meets the Z corners.
    if (p == Pauli::Z || p == Pauli::Y) {
      flip(i - 1, j - 1);
      flip(i, j);
    }
    if (p == Pauli::X || p == Pauli::Y) {
      flip(i, j - 1);
      flip(i - 1, j);
    }
  }
  return to_syndrome(counts);
}

Syndrome syndrome_by_commutation(const PauliString& string, const LatticeSpec& spec) {
  std::map<Cell, int> counts;
  for (const auto& t : build_wen(spec).terms) {
    if (!commutes(t.op, string)) counts[t.index] = 1;
  }
  return to_syndrome(counts);
}

StringPropagator::StringPropagator(PauliString string, double tg)
    : string_(std::move(string)), tg_(tg) {
  if (!string_.is_hermitian()) throw DomainError("string propagators need a Hermitian string");
}

InvolutionRotation StringPropagator::rotation() const {
  return InvolutionRotation(WeightedPauliSum(string_), tg_);
}

Statevector StringPropagator::apply(const Statevector& v) const {
  return std::cos(tg_) * v + Complex(0, -std::sin(tg_)) * qsa::apply(string_, v);
}

StringPropagator string_propagator(const StringPath& path, const LatticeSpec& spec, double tg) {
  return StringPropagator(path.to_pauli(spec), tg);
}

Statevector apply_interleaved(const StringPropagator& a, const StringPropagator& b,
                              int slices, const Statevector& v) {
  if (slices < 1) throw DomainError("need at least one slice");
  if (share_site(a.string(), b.string())) {
    throw UnsupportedError("interleaving crossing string propagators is not supported");
  }
  StringPropagator pa(a.string(), a.tg() / slices);
  StringPropagator pb(b.string(), b.tg() / slices);
  Statevector out = v;
  for (int k = 0; k < slices; ++k) out = pb.apply(pa.apply(out));
  return out;
}

MemoryLoops memory_loops(const LatticeSpec& spec) {
  spec.check();
  if (spec.model != LatticeModel::wen || spec.boundary != Boundary::periodic) {
    throw DomainError("memory loops need a periodic Wen lattice");
  }
  const std::size_t n = spec.n_sites();
  MemoryLoops out{PauliString(n), PauliString(n), PauliString(n), PauliString(n)};
  auto m_letter = [](int i, int j) { return (i + j) % 2 ? Pauli::Z : Pauli::X; };
  auto e_letter = [](int i, int j) { return (i + j) % 2 ? Pauli::X : Pauli::Z; };
  for (int i = 0; i < spec.rows; ++i) {
    out.vertical_m.set(spec.site(i, 0), m_letter(i, 0));
    out.vertical_e.set(spec.site(i, 0), e_letter(i, 0));
  }
  for (int j = 0; j < spec.cols; ++j) {
    out.horizontal_m.set(spec.site(0, j), m_letter(0, j));
    out.horizontal_e.set(spec.site(0, j), e_letter(0, j));
  }
  return out;
}

std::array<Statevector, 4> memory_basis(const LatticeSpec& spec) {
  const MemoryLoops loops = memory_loops(spec);
  Statevector g = ground_state_projector(spec);
  Statevector v = qsa::apply(loops.vertical_m, g);
  Statevector h = qsa::apply(loops.horizontal_m, g);
  Statevector vh = qsa::apply(loops.vertical_m, h);
  return {g, v, h, vh};
}

MemoryEncoding memory_encode(const LatticeSpec& spec,
                             const std::array<Complex, 4>& amplitudes) {
  const MemoryLoops loops = memory_loops(spec);
  Eigen::Matrix2cd m;
  m << amplitudes[0], amplitudes[2], amplitudes[1], amplitudes[3];
  const double norm = m.norm();
  if (norm < 1e-12) throw DomainError("amplitudes vanish");
  m /= norm;

  // Σ m_ab|ab⟩ = (A ⊗ B)(cos α|00⟩ - i·sin α|11⟩) from the Schmidt form.
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto s = svd.singularValues();
  const double alpha = std::atan2(s(1), s(0));
  const Eigen::Matrix2cd a = svd.matrixU();
  Eigen::Matrix2cd b = svd.matrixV().conjugate();
  b.col(1) *= Complex(0, 1);

  const Euler ea = zxz_angles(a);
  const Euler eb = zxz_angles(b);
  const PauliString xx = loops.vertical_m * loops.horizontal_m;

  MemoryEncoding out;
  out.propagators.emplace_back(WeightedPauliSum(xx), alpha);
  auto push_euler = [&](const Euler& e, const PauliString& x, const PauliString& z) {
    out.propagators.emplace_back(WeightedPauliSum(z), e.c / 2);
    out.propagators.emplace_back(WeightedPauliSum(x), e.b / 2);
    out.propagators.emplace_back(WeightedPauliSum(z), e.a / 2);
  };
  push_euler(ea, loops.vertical_m, loops.horizontal_e);
  push_euler(eb, loops.horizontal_m, loops.vertical_e);
  out.global_phase = std::exp(Complex(0, ea.phi + eb.phi));

  Statevector v = ground_state_projector(spec);
  for (const auto& r : out.propagators) v = qsa::apply(r, v);
  out.state = out.global_phase * v;
  return out;
}

std::string to_string(Side s) {
  switch (s) {
    case Side::top: return "top";
    case Side::bottom: return "bottom";
    case Side::left: return "left";
    case Side::right: return "right";
  }
  return "?";
}

Side side_from_string(const std::string& s) {
  if (s == "top") return Side::top;
  if (s == "bottom") return Side::bottom;
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  throw ParseError("unknown side: " + s);
}

LogicalQubit hole_logicals(const LatticeSpec& spec, std::size_t hole, Side side) {
  spec.check();
  if (spec.model != LatticeModel::kitaev_holes) {
    throw EncodingError("hole logicals need the kitaev_holes model");
  }
  if (hole >= spec.holes.size()) throw DomainError("no such hole");
  const Hole& h = spec.holes[hole];
  if (h.plaquettes.empty()) throw EncodingError("empty hole");
  const std::size_t n = spec.n_sites();
  const auto [i0, j0] = h.plaquettes.front();
  LogicalQubit q{"", PauliString(n), PauliString(n)};

  if (h.kind == HoleKind::smooth) {
    q.encoding = "smooth_hole";
    for (const auto& [i, j] : h.plaquettes) q.z = q.z * kitaev_face(spec, i, j);
    switch (side) {
      case Side::bottom:
        for (int i = i0; i >= 0; --i) q.x.set(h_edge(spec, i, j0), Pauli::X);
        break;
      case Side::top:
        for (int i = i0 + 1; i < spec.rows; ++i) q.x.set(h_edge(spec, i, j0), Pauli::X);
        break;
      case Side::left:
        for (int j = j0 - 1; j >= 0; --j) q.x.set(v_edge(spec, i0, j), Pauli::X);
        break;
      case Side::right:
        throw EncodingError("a smooth hole's X string must end on a smooth side");
    }
  } else {
    q.encoding = "rough_hole";
    for (const auto& [i, j] : h.plaquettes) q.x = q.x * kitaev_star(spec, i, j);
    if (side != Side::right) {
      throw EncodingError("a rough hole's Z string must end on the rough side");
    }
    for (int j = j0 + 1; j <= spec.cols; ++j) q.z.set(h_edge(spec, i0, j), Pauli::Z);
  }

  if (commutes(q.x, q.z)) throw EncodingError("logical X and Z commute");
  for (const auto& t : build_variant(spec).terms) {
    if (!commutes(t.op, q.x) || !commutes(t.op, q.z)) {
      throw EncodingError("logical string crosses a driven term; move the hole or side");
    }
  }
  return q;
}

LogicalQubit hole_logicals(const LatticeSpec& spec, std::size_t hole) {
  if (spec.model != LatticeModel::kitaev_holes) {
    throw EncodingError("hole logicals need the kitaev_holes model");
  }
  if (hole >= spec.holes.size()) throw DomainError("no such hole");
  return hole_logicals(spec, hole,
                       spec.holes[hole].kind == HoleKind::smooth ? Side::left : Side::right);
}

Statevector code_zero(const LatticeSpec& spec) {
  if (spec.model != LatticeModel::kitaev_holes) {
    throw DomainError("code_zero needs the kitaev_holes model");
  }
  const std::size_t n = spec.n_sites();
  Statevector v = basis_state(n, 0);
  for (const auto& t : build_variant(spec).terms) {
    if (t.kind == "star") v = 0.5 * (v + qsa::apply(t.op, v));
  }
  const double norm = v.norm();
  if (norm < 1e-8) throw DomainError("projected code state vanishes");
  return v / norm;
}

std::vector<Statevector> logical_basis(const Statevector& zero,
                                       const std::vector<LogicalQubit>& qubits) {
  const std::size_t k = qubits.size();
  std::vector<Statevector> out;
  for (std::size_t r = 0; r < (std::size_t{1} << k); ++r) {
    Statevector v = zero;
    for (std::size_t q = 0; q < k; ++q) {
      if ((r >> (k - 1 - q)) & 1) v = qsa::apply(qubits[q].x, v);
    }
    out.push_back(std::move(v));
  }
  return out;
}

DenseOperator logical_matrix(const StateMap& u, const std::vector<Statevector>& basis) {
  const auto d = static_cast<Eigen::Index>(basis.size());
  DenseOperator m(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    const Statevector image = u(basis[static_cast<std::size_t>(c)]);
    for (Eigen::Index r = 0; r < d; ++r) m(r, c) = basis[static_cast<std::size_t>(r)].dot(image);
  }
  return m;
}

DenseOperator phase_gate(double tg) {
  return std::exp(Complex(0, tg)) * expm(WeightedPauliSum(PauliString::parse("Z")), tg);
}

Statevector magic_state(const LogicalQubit& qubit, const Statevector& zero, double theta) {
  Statevector v = StringPropagator(qubit.x, kPi / 4).apply(zero);
  const double tg = (theta + kPi / 2) / 2;
  return std::exp(Complex(0, tg)) * StringPropagator(qubit.z, tg).apply(v);
}

PauliString vertex_loop(const LatticeSpec& spec, const std::vector<Cell>& region) {
  if (spec.model != LatticeModel::kitaev_holes) {
    throw DomainError("vertex loops need the kitaev_holes model");
  }
  PauliString loop(spec.n_sites());
  for (const auto& [i, j] : region) {
    if (i < 0 || i >= spec.rows || j < 0 || j >= spec.cols) {
      throw DomainError("loop region vertex off lattice");
    }
    loop = loop * kitaev_star(spec, i, j);
  }
  return loop;
}

StringPropagator loop_propagator(const LatticeSpec& spec, const std::vector<Cell>& region,
                                 double tg) {
  return StringPropagator(vertex_loop(spec, region), tg);
}

Statevector LoopCnot::apply(const Statevector& v) const {
  Statevector out = v;
  for (const auto& p : propagators) out = p.apply(out);
  return global_phase * out;
}

LoopCnot loop_cnot(const LatticeSpec& spec, std::size_t control_hole, std::size_t target_hole,
                   const std::vector<Cell>& region, double tg) {
  if (control_hole >= spec.holes.size() || target_hole >= spec.holes.size()) {
    throw DomainError("no such hole");
  }
  if (spec.holes[control_hole].kind != HoleKind::smooth ||
      spec.holes[target_hole].kind != HoleKind::rough) {
    throw EncodingError("the loop CNOT runs from a smooth hole to a rough hole");
  }
  const PauliString zc = hole_logicals(spec, control_hole).z;
  const PauliString zt = hole_logicals(spec, target_hole).z;
  const PauliString loop = vertex_loop(spec, region);
  if (commutes(loop, zt)) throw TopologyError("loop does not enclose the target hole");

  // exp(-i·tg·(1 - Z)(1 - X)/2) = e^{-i·tg/2}·e^{i·tg/2·Z}·e^{i·tg/2·X}·e^{-i·tg/2·ZX}.
  LoopCnot out;
  out.propagators = {StringPropagator(zc, -tg / 2), StringPropagator(loop, -tg / 2),
                     StringPropagator(zc * loop, tg / 2)};
  out.global_phase = std::exp(Complex(0, -tg / 2));
  return out;
}

NaiveMoveReport naive_move_error(const Statevector& zero, const PauliString& x_string,
                                 const PauliString& x_ext, double tg) {
  const PauliString extended = x_string * x_ext;
  const Statevector superposed = StringPropagator(x_string, tg).apply(zero);
  const Statevector naive = qsa::apply(x_ext, superposed);
  const Statevector intended =
      std::cos(tg) * zero + Complex(0, -std::sin(tg)) * qsa::apply(extended, zero);
  const Statevector loop = qsa::apply(InvolutionRotation(WeightedPauliSum(extended), tg), zero);

  NaiveMoveReport r;
  r.tg = tg;
  r.naive_distance = (naive - intended).norm();
  const double overlap = zero.dot(qsa::apply(x_ext, zero)).real();
  r.predicted = 2 * std::abs(std::cos(tg)) * std::sqrt(std::max(0.0, (1 - overlap) / 2));
  r.loop_distance = (loop - intended).norm();
  return r;
}

BraidReport braid(const LatticeSpec& spec, const StringPath& e_path,
                  const std::vector<Cell>& enclosed) {
  const PauliString path = e_path.to_pauli(spec);
  BraidReport r{PauliString(spec.n_sites()), {}, {}, 0};
  const Syndrome syn = syndrome_of(e_path, spec);
  for (const auto& c : enclosed) {
    if (plaquette_kind(c) != AnyonKind::e) throw DomainError("braid loops enclose dark plaquettes");
    r.loop = r.loop * wen_plaquette(spec, c.first, c.second);
    for (const auto& x : syn) r.enclosed_e += x.plaquette == c && x.kind == AnyonKind::e;
  }
  const Statevector g = ground_state_projector(spec);
  const Statevector psi = qsa::apply(path, g);
  r.phase = psi.dot(qsa::apply(r.loop, psi));
  r.reference = g.dot(qsa::apply(r.loop, g));
  return r;
}

}  // namespace qsa
