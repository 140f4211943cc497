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

// Batch front end. Every run prints one JSON report on standard output.
// Exit status: 0 all checks pass, 1 a check failed, 2 malformed input,
// 3 resource limit.

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "qsa/analysis.hpp"
#include "qsa/anyon.hpp"
#include "qsa/dense.hpp"
#include "qsa/errors.hpp"
#include "qsa/io.hpp"
#include "qsa/schedule.hpp"
#include "qsa/toric.hpp"

namespace {

using qsa::Json;
constexpr double kPi = std::numbers::pi;

class Fnv1a {
 public:
  void add(std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash_ ^= c;
      hash_ *= 0x100000001b3ULL;
    }
    hash_ ^= 0xff;  // field separator
    hash_ *= 0x100000001b3ULL;
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
    return buf;
  }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

struct Report {
  Json checks = Json::array();
  Json metrics = Json::object();
  Json artifacts = Json::object();
  bool pass = true;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    Json c{{"name", name}, {"pass", ok}};
    if (!detail.empty()) c["detail"] = detail;
    checks.push_back(std::move(c));
    pass = pass && ok;
  }
};

struct Context {
  Fnv1a digest;
  std::uint64_t seed = 0;
  Report report;

  Json load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qsa::ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    digest.add(ss.str());
    try {
      return Json::parse(ss.str());
    } catch (const nlohmann::json::exception& e) {
      throw qsa::ParseError(path + ": " + e.what());
    }
  }
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

// ---- compile / verify ----

void run_compile(Context& ctx, const std::string& target, const std::string& graph_file,
                 const std::string& strategy, double tg, const std::string& out) {
  const auto graph = qsa::graph_from_json(ctx.load(graph_file));
  const auto pauli = qsa::PauliString::parse(target);
  const auto s = qsa::strategy_from_string(strategy);
  const auto used = qsa::resolve_strategy(pauli, graph, s);
  const auto schedule = qsa::compile(pauli, graph, s, tg);
  const auto v = qsa::validate(schedule, graph);
  ctx.report.check("validate", v.ok());
  ctx.report.metrics["depth"] = schedule.depth();
  ctx.report.metrics["strategy"] = qsa::to_string(used);
  ctx.report.metrics["n_bodies"] = pauli.weight();
  if (out.empty()) {
    ctx.report.artifacts["schedule"] = qsa::to_json(schedule);
  } else {
    qsa::write_json_file(out, qsa::to_json(schedule));
    const auto back = qsa::schedule_from_json(qsa::read_json_file(out));
    ctx.report.check("round_trip", qsa::validate(back, graph).ok() && back.target == pauli);
    ctx.report.artifacts["schedule_file"] = out;
  }
}

void run_verify(Context& ctx, const std::string& schedule_file, const std::string& graph_file,
                std::optional<double> tg, double tolerance) {
  auto schedule = qsa::schedule_from_json(ctx.load(schedule_file));
  if (tg) schedule.seed.tg = *tg;
  const auto graph = graph_file.empty() ? qsa::ConnectivityGraph::complete(schedule.n_sites)
                                        : qsa::graph_from_json(ctx.load(graph_file));
  const auto v = qsa::validate(schedule, graph);
  ctx.report.artifacts["validation"] = qsa::to_json(v);
  if (!v.ok()) {
    for (const auto& x : v.violations) ctx.report.check(x.rule, false, x.detail);
    return;
  }
  ctx.report.check("validate", true);
  const std::size_t n = schedule.n_sites;
  if (static_cast<int>(n) > qsa::max_state_qubits()) {
    ctx.report.metrics["dense"] = "skipped";
    return;
  }
  const auto pulses = qsa::pulse_sequence(schedule);
  const qsa::InvolutionRotation ideal(qsa::WeightedPauliSum(schedule.target), schedule.seed.tg);
  auto cmp = qsa::compare_unitaries(
      [&](const qsa::Statevector& x) { return qsa::apply(pulses, x); },
      [&](const qsa::Statevector& x) { return qsa::apply(ideal, x); }, n, tolerance, ctx.seed);
  ctx.report.artifacts["dense"] = qsa::to_json(cmp);
  ctx.report.check("dense_identity", cmp.pass, cmp.metric + " " + fmt(cmp.distance));
}

// ---- toric ----

void run_toric_build(Context& ctx, const qsa::LatticeSpec& spec) {
  const auto terms = qsa::driven_terms(spec);
  bool commute = true;
  bool disjoint = true;
  for (std::size_t a = 0; a < terms.terms.size(); ++a) {
    for (std::size_t b = a + 1; b < terms.terms.size(); ++b) {
      const auto& x = terms.terms[a].op;
      const auto& y = terms.terms[b].op;
      commute = commute && qsa::commutes(x, y);
      if (terms.terms[a].group == terms.terms[b].group) {
        for (std::size_t v = 0; v < x.n_sites(); ++v) {
          if (x[v] != qsa::Pauli::I && y[v] != qsa::Pauli::I) disjoint = false;
        }
      }
    }
  }
  ctx.report.check("terms_commute", commute);
  ctx.report.check("groups_disjoint", disjoint);
  const auto graph = qsa::lattice_graph(spec);
  bool schedules_ok = true;
  Json list = Json::array();
  for (const auto& t : terms.terms) {
    list.push_back({{"index", {t.index.first, t.index.second}},
                    {"kind", t.kind},
                    {"group", t.group},
                    {"op", t.op.str()}});
    if (t.op.weight() < 2) continue;
    const bool plain = t.kind == "plaquette";
    const auto s = plain ? *qsa::plaquette_schedule(t.index.first, t.index.second, spec)
                         : qsa::compile(t.op, graph);
    schedules_ok = schedules_ok && qsa::validate(s, graph).ok();
  }
  ctx.report.check("schedules_validate", schedules_ok);
  ctx.report.metrics["terms"] = terms.terms.size();
  ctx.report.metrics["groups"] = terms.group_count();
  ctx.report.artifacts["terms"] = std::move(list);
}

void run_toric_ground(Context& ctx, const qsa::LatticeSpec& spec) {
  const auto proj = qsa::ground_state_projector(spec);
  if (spec.boundary == qsa::Boundary::open) {
    const auto sweep = qsa::ground_state_sweep(spec);
    const double f = std::abs(proj.dot(sweep));
    ctx.report.metrics["sweep_overlap"] = f;
    ctx.report.metrics["sweep_stages"] = qsa::sweep_plan(spec).size();
    ctx.report.check("sweep_matches_projector", f >= 1 - 1e-10);
  }
  double worst_even = 0.0;
  double min_odd = 1.0;
  double max_odd = -1.0;
  for (const auto& t : qsa::build_wen(spec).terms) {
    const double e = qsa::expectation(t.op, proj);
    if ((t.index.first + t.index.second) % 2 == 0) {
      worst_even = std::max(worst_even, std::abs(e - 1));
    } else {
      min_odd = std::min(min_odd, e);
      max_odd = std::max(max_odd, e);
    }
  }
  ctx.report.check("even_stabilisers", worst_even <= 1e-10, "max |<P>-1| " + fmt(worst_even));
  ctx.report.metrics["odd_expectation_min"] = min_odd;
  ctx.report.metrics["odd_expectation_max"] = max_odd;
}

void run_toric_digital(Context& ctx, const qsa::LatticeSpec& spec, double jtau) {
  const auto program = qsa::digital_sequence(spec, jtau);
  const auto pulses = qsa::pulse_sequence(program);
  const auto sum = qsa::driven_terms(spec).sum();
  ctx.report.metrics["stages"] = program.stages.size();
  ctx.report.metrics["pulses"] = pulses.size();
  const std::size_t n = spec.n_sites();
  auto cmp = qsa::compare_unitaries(
      [&](const qsa::Statevector& x) { return qsa::apply(pulses, x); },
      [&](const qsa::Statevector& x) { return qsa::expm_multiply(sum, -jtau, x); }, n, 1e-8,
      ctx.seed);
  ctx.report.artifacts["dense"] = qsa::to_json(cmp);
  ctx.report.check("digital_identity", cmp.pass, cmp.metric + " " + fmt(cmp.distance));
}

// ---- anyon ----

void run_anyon_syndrome(Context& ctx, const qsa::LatticeSpec& spec, const qsa::StringPath& p) {
  const auto rule = qsa::syndrome_of(p, spec);
  const auto comm = qsa::syndrome_by_commutation(p.to_pauli(spec), spec);
  ctx.report.check("routes_agree", rule == comm);
  ctx.report.artifacts["syndrome"] = qsa::to_json(rule);
}

void run_anyon_braid(Context& ctx, const qsa::LatticeSpec& spec, const qsa::StringPath& p) {
  const auto syn = qsa::syndrome_of(p, spec);
  std::optional<qsa::Cell> end;
  for (const auto& x : syn) {
    if (x.kind == qsa::AnyonKind::e) end = x.plaquette;
  }
  if (!end) throw qsa::DomainError("path creates no e anyon to braid around");
  const auto r = qsa::braid(spec, p, {*end});
  ctx.report.metrics["phase"] = {r.phase.real(), r.phase.imag()};
  ctx.report.metrics["reference"] = {r.reference.real(), r.reference.imag()};
  ctx.report.metrics["enclosed_plaquette"] = {end->first, end->second};
  ctx.report.check("braid_phase", std::abs(r.phase + 1.0) <= 1e-10);
  ctx.report.check("reference_phase", std::abs(r.reference - 1.0) <= 1e-10);
}

void run_anyon_memory(Context& ctx, const qsa::LatticeSpec& spec, double tg) {
  const auto basis = qsa::memory_basis(spec);
  double worst = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) worst = std::max(worst, std::abs(basis[a].dot(basis[b])));
  }
  ctx.report.check("basis_orthogonal", worst <= 1e-10, "max overlap " + fmt(worst));
  const auto loops = qsa::memory_loops(spec);
  const auto v = qsa::StringPropagator(loops.vertical_m, tg).apply(basis[0]);
  const auto a0 = basis[0].dot(v);
  const auto a1 = basis[1].dot(v);
  ctx.report.metrics["amplitude_G"] = {a0.real(), a0.imag()};
  ctx.report.metrics["amplitude_psi1"] = {a1.real(), a1.imag()};
  const double err = std::max(std::abs(a0 - std::cos(tg)),
                              std::abs(a1 - qsa::Complex(0, -std::sin(tg))));
  ctx.report.check("loop_amplitudes", err <= 1e-10, "max error " + fmt(err));
}

void run_anyon_magic(Context& ctx, const qsa::LatticeSpec& spec, std::size_t hole, double theta) {
  const auto q = qsa::hole_logicals(spec, hole);
  const auto zero = qsa::code_zero(spec);
  const auto one = qsa::apply(q.x, zero);
  const qsa::Statevector expect =
      (zero + std::exp(qsa::Complex(0, theta)) * one) / std::sqrt(2.0);
  const double f = qsa::fidelity(qsa::magic_state(q, zero, theta), expect);
  ctx.report.metrics["fidelity"] = f;
  ctx.report.check("magic_fidelity", f >= 1 - 1e-10);
  const double tg = (theta + kPi / 2) / 2;
  qsa::DenseOperator p = qsa::DenseOperator::Zero(2, 2);
  p(0, 0) = 1;
  p(1, 1) = std::exp(qsa::Complex(0, 2 * tg));
  ctx.report.check("phase_gate_identity", (qsa::phase_gate(tg) - p).cwiseAbs().maxCoeff() <= 1e-12);
}

void run_anyon_cnot(Context& ctx, const qsa::LatticeSpec& spec, std::size_t control,
                    std::size_t target) {
  if (target >= spec.holes.size()) throw qsa::DomainError("no such hole");
  const auto cnot = qsa::loop_cnot(spec, control, target, spec.holes[target].plaquettes);
  const auto basis = qsa::logical_basis(
      qsa::code_zero(spec), {qsa::hole_logicals(spec, control), qsa::hole_logicals(spec, target)});
  const auto m = qsa::logical_matrix(
      [&](const qsa::Statevector& v) { return cnot.apply(v); }, basis);
  qsa::DenseOperator expect = qsa::DenseOperator::Zero(4, 4);
  expect(0, 0) = expect(1, 1) = expect(2, 3) = expect(3, 2) = 1;
  const double d = qsa::distance(m, expect);
  Json table = Json::array();
  for (int r = 0; r < 4; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 4; ++c) row.push_back(std::abs(m(r, c)));
    table.push_back(std::move(row));
  }
  ctx.report.artifacts["logical_magnitudes"] = std::move(table);
  ctx.report.metrics["distance"] = d;
  ctx.report.check("cnot_truth_table", d <= 1e-8);
}

// ---- analyze ----

void run_strength(Context& ctx, const qsa::StrengthParams& p) {
  const double gp = qsa::strength_target(p);
  const double tp = qsa::total_time(p);
  ctx.report.metrics["g_prime"] = gp;
  ctx.report.metrics["t_prime"] = tp;
  ctx.report.check("tg_conserved", std::abs(p.t * p.g - tp * gp) <= 1e-12 * std::abs(p.t * p.g));
  if (p.n == 1) {
    const double gw = qsa::strength_toric(p);
    const auto [tau, tau_prime] = p.durations();
    ctx.report.metrics["g_w"] = gw;
    ctx.report.metrics["ratio_g_w"] = gw / p.g;
    const bool regime = tau + tau_prime <= p.t;
    ctx.report.metrics["in_stated_regime"] = regime;
    if (regime) ctx.report.check("toric_ratio_at_least_tenth", gw / p.g >= 0.1);
  }
}

void run_error_scaling(Context& ctx, const std::string& schedule_file,
                       const std::string& spec_file, double jtau,
                       const std::vector<double>& deltas, bool random) {
  qsa::ScalingOptions opt{random, ctx.seed};
  qsa::ErrorScalingReport r;
  if (!schedule_file.empty()) {
    r = qsa::error_scaling(qsa::schedule_from_json(ctx.load(schedule_file)), schedule_file,
                           deltas, opt);
  } else if (!spec_file.empty()) {
    const auto spec = qsa::lattice_from_json(ctx.load(spec_file));
    r = qsa::error_scaling(qsa::digital_sequence(spec, jtau), spec_file, deltas, opt);
  } else {
    throw qsa::ParseError("error-scaling needs --schedule or --spec");
  }
  ctx.report.artifacts["error_scaling"] = qsa::to_json(r);
  ctx.report.check("first_order_slope", r.slope >= 0.9 && r.slope <= 1.1, "slope " + fmt(r.slope));
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const qsa::ResourceError*>(&e)) return 3;
  if (dynamic_cast<const qsa::ParseError*>(&e) || dynamic_cast<const qsa::DomainError*>(&e) ||
      dynamic_cast<const qsa::DimensionError*>(&e) ||
      dynamic_cast<const qsa::EncodingError*>(&e)) {
    return 2;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Attachment-based Hamiltonian compiler and lattice experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  app.add_option("--seed", ctx.seed, "Seed for oracle state sampling");

  std::string target, graph_file, strategy = "auto", out, schedule_file, spec_file, path_file;
  double tg = 0.0;
  std::optional<double> tg_override;
  double tolerance = 1e-10;
  double jtau = 0.3;
  double theta = kPi / 4;
  double memory_tg = kPi / 8;
  std::size_t hole = 0, control = 0, target_hole = 1;
  std::vector<double> deltas{1e-2, 1e-3, 1e-4};
  bool random = false;
  qsa::StrengthParams sp;
  double tau = -1, tau_prime = -1, omega = 0, omega_prime = 0;

  auto* compile = app.add_subcommand("compile", "Lower a Pauli string to a schedule");
  compile->add_option("--target", target, "Pauli literal")->required();
  compile->add_option("--graph", graph_file, "Graph JSON")->required();
  compile->add_option("--strategy", strategy, "auto, doubling, line_endpoints, single_endpoint, greedy");
  compile->add_option("--tg", tg, "Seed angle");
  compile->add_option("--out", out, "Write the schedule here");

  auto* verify = app.add_subcommand("verify", "Validate a schedule and check it densely");
  verify->add_option("--schedule", schedule_file)->required();
  verify->add_option("--graph", graph_file, "Graph JSON; complete graph if absent");
  verify->add_option("--tg", tg_override, "Override the seed angle");
  verify->add_option("--tolerance", tolerance);

  auto* toric = app.add_subcommand("toric", "Wen-lattice experiments");
  toric->require_subcommand(1);
  toric->fallthrough();
  auto* t_build = toric->add_subcommand("build", "Terms, groups and schedules");
  auto* t_ground = toric->add_subcommand("ground", "Ground state by sweep and projector");
  auto* t_digital = toric->add_subcommand("digital", "Four-stage digital sequence");
  for (auto* c : {t_build, t_ground, t_digital}) c->add_option("--spec", spec_file)->required();
  t_digital->add_option("--jtau", jtau);

  auto* anyon = app.add_subcommand("anyon", "Anyon and logical-qubit experiments");
  anyon->require_subcommand(1);
  anyon->fallthrough();
  auto* a_syn = anyon->add_subcommand("syndrome", "Excited plaquettes of a string");
  auto* a_braid = anyon->add_subcommand("braid", "m loop around a string endpoint");
  auto* a_mem = anyon->add_subcommand("memory", "Loop-basis memory states");
  auto* a_magic = anyon->add_subcommand("magic", "Hole-encoded magic state");
  auto* a_cnot = anyon->add_subcommand("cnot", "Loop CNOT truth table");
  for (auto* c : {a_syn, a_braid, a_mem, a_magic, a_cnot}) {
    c->add_option("--spec", spec_file)->required();
  }
  for (auto* c : {a_syn, a_braid}) c->add_option("--path", path_file)->required();
  a_mem->add_option("--tg", memory_tg);
  a_magic->add_option("--theta", theta);
  a_magic->add_option("--hole", hole);
  a_cnot->add_option("--control", control);
  a_cnot->add_option("--target", target_hole);

  auto* analyze = app.add_subcommand("analyze", "Strength accounting and error scaling");
  analyze->require_subcommand(1);
  analyze->fallthrough();
  auto* strength = analyze->add_subcommand("strength", "Target strength after pulses");
  strength->add_option("--g", sp.g);
  strength->add_option("--t", sp.t);
  strength->add_option("--n", sp.n);
  strength->add_option("--tau", tau);
  strength->add_option("--tau-prime", tau_prime);
  strength->add_option("--omega", omega);
  strength->add_option("--omega-prime", omega_prime);
  auto* scaling = analyze->add_subcommand("error-scaling", "Distance versus pulse offset");
  scaling->add_option("--schedule", schedule_file);
  scaling->add_option("--spec", spec_file);
  scaling->add_option("--jtau", jtau);
  scaling->add_option("--deltas", deltas)->delimiter(',');
  scaling->add_flag("--random", random, "Independent seeded offsets");

  Fnv1a& digest = ctx.digest;
  std::string command;
  for (int k = 1; k < argc; ++k) {
    digest.add(argv[k]);
    command += (k > 1 ? " " : "") + std::string(argv[k]);
  }

  int code = 0;
  Json error;
  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      throw qsa::ParseError(e.what());
    }
    auto spec = [&] { return qsa::lattice_from_json(ctx.load(spec_file)); };
    auto path = [&] { return qsa::path_from_json(ctx.load(path_file)); };
    if (*compile) {
      run_compile(ctx, target, graph_file, strategy, tg, out);
    } else if (*verify) {
      run_verify(ctx, schedule_file, graph_file, tg_override, tolerance);
    } else if (*t_build) {
      run_toric_build(ctx, spec());
    } else if (*t_ground) {
      run_toric_ground(ctx, spec());
    } else if (*t_digital) {
      run_toric_digital(ctx, spec(), jtau);
    } else if (*a_syn) {
      const auto s = spec();
      run_anyon_syndrome(ctx, s, path());
    } else if (*a_braid) {
      const auto s = spec();
      run_anyon_braid(ctx, s, path());
    } else if (*a_mem) {
      run_anyon_memory(ctx, spec(), memory_tg);
    } else if (*a_magic) {
      run_anyon_magic(ctx, spec(), hole, theta);
    } else if (*a_cnot) {
      run_anyon_cnot(ctx, spec(), control, target_hole);
    } else if (*strength) {
      if (tau >= 0 || tau_prime >= 0) {
        sp.tau = tau;
        sp.tau_prime = tau_prime;
      }
      if (omega != 0 || omega_prime != 0) {
        sp.omega = omega;
        sp.omega_prime = omega_prime;
      }
      sp.check();
      run_strength(ctx, sp);
    } else if (*scaling) {
      run_error_scaling(ctx, schedule_file, spec_file, jtau, deltas, random);
    }
    code = ctx.report.pass ? 0 : 1;
  } catch (const std::exception& e) {
    code = exit_code_for(e);
    error = {{"message", e.what()}, {"exit", code}};
    ctx.report.pass = false;
  }

  Json out_json{{"command", command},
                {"inputs_digest", "fnv1a:" + digest.hex()},
                {"seed", ctx.seed},
                {"pass", ctx.report.pass && code == 0},
                {"checks", ctx.report.checks},
                {"metrics", ctx.report.metrics}};
  if (!ctx.report.artifacts.empty()) out_json["artifacts"] = ctx.report.artifacts;
  if (!error.is_null()) out_json["error"] = error;
  std::cout << out_json.dump(2) << '\n';
  return code;
}
