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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qsa/pauli.hpp"
#include "qsa/propagator.hpp"

namespace qsa {

/** Available two-body interactions, as unordered site pairs. */
class ConnectivityGraph {
 public:
  ConnectivityGraph() = default;
  explicit ConnectivityGraph(std::size_t n_sites) : n_sites_(n_sites) {}

  static ConnectivityGraph complete(std::size_t n_sites);
  /** Sites 0..n-1 on a line, joined when their index distance is at most reach. */
  static ConnectivityGraph path(std::size_t n_sites, std::size_t reach = 1);

  void add_edge(std::size_t a, std::size_t b);
  bool has_edge(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> neighbors(std::size_t v) const;

  std::size_t n_sites() const { return n_sites_; }
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }

 private:
  std::size_t n_sites_ = 0;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
};

enum class Strategy { automatic, doubling, line_endpoints, single_endpoint, greedy };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

struct Seed {
  PauliString string;
  double tg = 0.0;
};

/**
 * Layered attachment program.
 *
 * Realises exp(-i·tg·target) as
 *   S·U_L···U_1·exp(-i·tg·seed)·U_1†···U_L†·S†
 * with U_k the forward pulses of layer k and S the final swapper layer.
 */
struct QsaSchedule {
  std::size_t n_sites = 0;
  Seed seed;
  std::vector<std::vector<AttachmentSpec>> layers;
  std::vector<SwapperSpec> final_swappers;
  PauliString target;

  std::size_t depth() const { return layers.size(); }
};

/** Layer count the given strategy reaches for an n_bodies target. */
int depth_bound(int n_bodies, Strategy strategy);

/** Strategy compile() would actually use, after auto resolution and fallback. */
Strategy resolve_strategy(const PauliString& target, const ConnectivityGraph& graph,
                          Strategy strategy);

/**
 * Lowers a target string to a schedule over the graph.
 *
 * Throws UnsupportedError for targets of weight below two and
 * InfeasibleError when the support is not connected in the graph.
 */
QsaSchedule compile(const PauliString& target, const ConnectivityGraph& graph,
                    Strategy strategy = Strategy::automatic, double tg = 0.0);

/** Composes every conjugation; throws InvalidScheduleError on failed collapse. */
PauliString replay_symbolic(const QsaSchedule& schedule);

struct Violation {
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(const std::string& rule) const;
};

ValidationReport validate(const QsaSchedule& schedule, const ConnectivityGraph& graph);

/**
 * Time-ordered pulses of the schedule, first pulse first.
 *
 * Every pulse angle and the seed tg are shifted by delta.
 */
std::vector<InvolutionRotation> pulse_sequence(const QsaSchedule& schedule,
                                               double delta = 0.0);

/** Stages of simultaneous schedules, run in order. */
struct PulseProgram {
  std::size_t n_sites = 0;
  std::vector<std::vector<QsaSchedule>> stages;
};

std::vector<InvolutionRotation> pulse_sequence(const PulseProgram& program,
                                               double delta = 0.0);

}  // namespace qsa
