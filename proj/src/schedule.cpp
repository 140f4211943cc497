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

#include "qsa/schedule.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>

#include "qsa/errors.hpp"

namespace qsa {

// ConnectivityGraph

ConnectivityGraph ConnectivityGraph::complete(std::size_t n_sites) {
  ConnectivityGraph g(n_sites);
  for (std::size_t a = 0; a < n_sites; ++a) {
    for (std::size_t b = a + 1; b < n_sites; ++b) g.add_edge(a, b);
  }
  return g;
}

ConnectivityGraph ConnectivityGraph::path(std::size_t n_sites, std::size_t reach) {
  ConnectivityGraph g(n_sites);
  for (std::size_t a = 0; a < n_sites; ++a) {
    for (std::size_t b = a + 1; b < n_sites && b - a <= reach; ++b) g.add_edge(a, b);
  }
  return g;
}

void ConnectivityGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= n_sites_ || b >= n_sites_) {
    throw DomainError("edge endpoint out of range");
  }
  if (a == b) throw DomainError("self-loop at site " + std::to_string(a));
  edges_.insert({std::min(a, b), std::max(a, b)});
}

bool ConnectivityGraph::has_edge(std::size_t a, std::size_t b) const {
  return edges_.count({std::min(a, b), std::max(a, b)}) > 0;
}

std::vector<std::size_t> ConnectivityGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::automatic: return "auto";
    case Strategy::doubling: return "doubling";
    case Strategy::line_endpoints: return "line_endpoints";
    case Strategy::single_endpoint: return "single_endpoint";
    case Strategy::greedy: return "greedy";
  }
  return "?";
}

Strategy strategy_from_string(const std::string& s) {
  if (s == "auto") return Strategy::automatic;
  if (s == "doubling") return Strategy::doubling;
  if (s == "line_endpoints") return Strategy::line_endpoints;
  if (s == "single_endpoint") return Strategy::single_endpoint;
  if (s == "greedy") return Strategy::greedy;
  throw ParseError("unknown strategy '" + s + "'");
}

int depth_bound(int n_bodies, Strategy strategy) {
  if (n_bodies < 2) throw DomainError("depth_bound needs at least two bodies");
  switch (strategy) {
    case Strategy::doubling:
    case Strategy::automatic: {
      int layers = 0;
      for (long size = 2; size < n_bodies; size *= 2) ++layers;
      return layers;
    }
    case Strategy::line_endpoints: return (n_bodies + 1) / 2 - 1;
    case Strategy::single_endpoint:
    case Strategy::greedy: return n_bodies - 2;
  }
  return n_bodies - 2;
}

namespace {

using Mask = std::uint64_t;
using Move = std::pair<std::size_t, std::size_t>;  // (connector, attached)

struct Plan {
  Move seed;
  std::vector<std::vector<Move>> layers;
};

Mask bit(std::size_t v) { return Mask{1} << v; }

std::vector<std::size_t> sites_of(Mask m) {
  std::vector<std::size_t> out;
  while (m) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

class Planner {
 public:
  Planner(const PauliString& target, const ConnectivityGraph& graph)
      : graph_(graph), support_(target.support()) {
    for (auto v : support_) support_mask_ |= bit(v);
    adj_.assign(graph.n_sites(), 0);
    for (const auto& [a, b] : graph.edges()) {
      if ((support_mask_ & bit(a)) && (support_mask_ & bit(b))) {
        adj_[a] |= bit(b);
        adj_[b] |= bit(a);
      }
    }
  }

  bool connected() const {
    Mask seen = bit(support_.front());
    std::vector<std::size_t> stack{support_.front()};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : sites_of(adj_[v] & ~seen)) {
        seen |= bit(w);
        stack.push_back(w);
      }
    }
    return seen == support_mask_;
  }

  // Seed edges inside the support, most central pair first, then lowest pair.
  std::vector<Move> ranked_seeds() const {
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t k = 0; k < support_.size(); ++k) pos[support_[k]] = k;
    const long lo = (static_cast<long>(support_.size()) - 2) / 2;
    std::vector<std::tuple<long, std::size_t, std::size_t>> keyed;
    for (const auto& [a, b] : graph_.edges()) {
      if (!(support_mask_ & bit(a)) || !(support_mask_ & bit(b))) continue;
      long off = std::labs(static_cast<long>(pos[a]) - lo) +
                 std::labs(static_cast<long>(pos[b]) - (lo + 1));
      keyed.emplace_back(off, a, b);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<Move> out;
    for (const auto& [k, a, b] : keyed) out.push_back({a, b});
    return out;
  }

  std::optional<Plan> doubling() {
    const int bound = depth_bound(static_cast<int>(support_.size()), Strategy::doubling);
    for (const auto& seed : ranked_seeds()) {
      budget_ = 200000;
      Plan plan{seed, {}};
      Mask grown = bit(seed.first) | bit(seed.second);
      if (grow_doubling(grown, support_mask_ & ~grown, bound, plan)) return plan;
    }
    return std::nullopt;
  }

  std::optional<Plan> line() {
    auto order = line_order();
    if (!order) return std::nullopt;
    const auto& o = *order;
    const long n = static_cast<long>(o.size());
    const long m = (n - 2) / 2;
    Plan plan{{o[m], o[m + 1]}, {}};
    long left = m - 1;
    long right = m + 2;
    while (left >= 0 || right < n) {
      std::vector<Move> layer;
      if (left >= 0) {
        layer.push_back({o[left + 1], o[left]});
        --left;
      }
      if (right < n) {
        layer.push_back({o[right - 1], o[right]});
        ++right;
      }
      plan.layers.push_back(layer);
    }
    return plan;
  }

  Plan single() const {
    Move seed = lowest_seed();
    Plan plan{seed, {}};
    Mask grown = bit(seed.first) | bit(seed.second);
    while (grown != support_mask_) {
      bool done = false;
      for (auto f : sites_of(support_mask_ & ~grown)) {
        Mask conn = adj_[f] & grown;
        if (conn) {
          auto c = static_cast<std::size_t>(std::countr_zero(conn));
          plan.layers.push_back({{c, f}});
          grown |= bit(f);
          done = true;
          break;
        }
      }
      if (!done) throw InfeasibleError("support is not connected");
    }
    return plan;
  }

  Plan greedy() const {
    Move seed = ranked_seeds().front();
    Plan plan{seed, {}};
    Mask grown = bit(seed.first) | bit(seed.second);
    while (grown != support_mask_) {
      auto layer = match(grown, support_mask_ & ~grown);
      if (layer.empty()) throw InfeasibleError("support is not connected");
      for (const auto& mv : layer) grown |= bit(mv.second);
      plan.layers.push_back(layer);
    }
    return plan;
  }

 private:
  Move lowest_seed() const {
    for (const auto& [a, b] : graph_.edges()) {
      if ((support_mask_ & bit(a)) && (support_mask_ & bit(b))) return {a, b};
    }
    throw InfeasibleError("support is not connected");
  }

  // Maximum matching of fresh sites onto connectors, low-index connectors first.
  std::vector<Move> match(Mask connectors, Mask fresh) const {
    std::map<std::size_t, std::size_t> owner;  // connector -> fresh
    std::function<bool(std::size_t, Mask&)> augment = [&](std::size_t f,
                                                          Mask& visited) {
      for (auto c : sites_of(adj_[f] & connectors & ~visited)) {
        visited |= bit(c);
        auto it = owner.find(c);
        if (it == owner.end() || augment(it->second, visited)) {
          owner[c] = f;
          return true;
        }
      }
      return false;
    };
    for (auto f : sites_of(fresh)) {
      Mask visited = 0;
      augment(f, visited);
    }
    std::vector<Move> out;
    for (const auto& [c, f] : owner) out.push_back({c, f});
    return out;
  }

  bool grow_doubling(Mask grown, Mask fresh, int layers_left, Plan& plan) {
    if (!fresh) return true;
    if (layers_left == 0 || --budget_ < 0) return false;
    const int s = std::popcount(grown);
    const int r = std::popcount(fresh);
    if (layers_left < 32 && r > static_cast<long>(s) * ((1L << layers_left) - 1)) {
      return false;
    }
    if (r <= s) {
      auto layer = match(grown, fresh);
      if (static_cast<int>(layer.size()) != r) return false;
      plan.layers.push_back(layer);
      return true;
    }
    // Every connector must take a distinct fresh neighbour.
    auto conns = sites_of(grown);
    std::vector<Move> layer;
    std::function<bool(std::size_t, Mask)> choose = [&](std::size_t k, Mask used) {
      if (budget_ < 0) return false;
      if (k == conns.size()) {
        plan.layers.push_back(layer);
        if (grow_doubling(grown | used, fresh & ~used, layers_left - 1, plan)) {
          return true;
        }
        plan.layers.pop_back();
        return false;
      }
      for (auto f : sites_of(adj_[conns[k]] & fresh & ~used)) {
        --budget_;
        layer.push_back({conns[k], f});
        if (choose(k + 1, used | bit(f))) return true;
        layer.pop_back();
      }
      return false;
    };
    return choose(0, 0);
  }

  std::optional<std::vector<std::size_t>> line_order() {
    bool sorted_path = true;
    for (std::size_t k = 0; k + 1 < support_.size(); ++k) {
      if (!(adj_[support_[k]] & bit(support_[k + 1]))) sorted_path = false;
    }
    if (sorted_path) return support_;
    // Hamiltonian path in the induced subgraph, bounded search.
    long budget = 200000;
    std::vector<std::size_t> path;
    std::function<bool(Mask)> extend = [&](Mask used) {
      if (used == support_mask_) return true;
      if (--budget < 0) return false;
      for (auto w : sites_of(adj_[path.back()] & ~used)) {
        path.push_back(w);
        if (extend(used | bit(w))) return true;
        path.pop_back();
      }
      return false;
    };
    for (auto start : support_) {
      path = {start};
      if (extend(bit(start))) return path;
    }
    return std::nullopt;
  }

  const ConnectivityGraph& graph_;
  std::vector<std::size_t> support_;
  Mask support_mask_ = 0;
  std::vector<Mask> adj_;
  long budget_ = 0;
};

Pauli other_letter(Pauli p) { return p == Pauli::X ? Pauli::Z : Pauli::X; }

QsaSchedule assign_letters(const PauliString& target, const Plan& plan, double tg) {
  const std::size_t n = target.n_sites();
  QsaSchedule s;
  s.n_sites = n;
  s.target = target;
  s.seed.tg = tg;
  s.seed.string = PauliString::from_sites(
      n, {{plan.seed.first, Pauli::X}, {plan.seed.second, Pauli::X}});

  std::vector<long> last_use(n, -1);
  for (std::size_t l = 0; l < plan.layers.size(); ++l) {
    for (const auto& [c, m] : plan.layers[l]) last_use[c] = static_cast<long>(l);
  }
  std::vector<Pauli> cur = s.seed.string.letters();
  for (std::size_t l = 0; l < plan.layers.size(); ++l) {
    std::vector<AttachmentSpec> layer;
    for (const auto& [c, m] : plan.layers[l]) {
      Pauli now = cur[c];
      Pauli next = other_letter(now);
      if (last_use[c] == static_cast<long>(l) && target[c] != now) next = target[c];
      AttachmentSpec spec;
      spec.connector_site = c;
      spec.alpha = next;
      spec.beta = now;
      spec.attached_site = m;
      spec.attached_letter = target[m];
      layer.push_back(spec);
      cur[c] = next;
      cur[m] = target[m];
    }
    s.layers.push_back(layer);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (cur[v] != target[v]) {
      SwapperSpec sw;
      sw.site = v;
      sw.alpha = cur[v];
      sw.beta = target[v];
      s.final_swappers.push_back(sw);
    }
  }
  return s;
}

void check_target(const PauliString& target, const ConnectivityGraph& graph) {
  if (target.n_sites() != graph.n_sites()) {
    throw DimensionError("target and graph differ in site count");
  }
  if (target.weight() < 2) {
    throw UnsupportedError("target " + target.str() +
                           " has fewer than two non-identity letters");
  }
  if (target.n_sites() > 64) {
    throw UnsupportedError("compile supports at most 64 sites");
  }
  if (target.phase() != 0) {
    throw DomainError("target must carry phase +1, got " + target.str());
  }
}

std::pair<Strategy, Plan> plan_for(const PauliString& target,
                                   const ConnectivityGraph& graph, Strategy strategy) {
  check_target(target, graph);
  Planner planner(target, graph);
  if (!planner.connected()) {
    throw InfeasibleError("support of " + target.str() + " is not connected");
  }
  switch (strategy) {
    case Strategy::doubling:
      if (auto p = planner.doubling()) return {Strategy::doubling, *p};
      return {Strategy::greedy, planner.greedy()};
    case Strategy::line_endpoints:
      if (auto p = planner.line()) return {Strategy::line_endpoints, *p};
      return {Strategy::greedy, planner.greedy()};
    case Strategy::single_endpoint:
      return {Strategy::single_endpoint, planner.single()};
    case Strategy::greedy:
      return {Strategy::greedy, planner.greedy()};
    case Strategy::automatic: break;
  }
  std::vector<std::pair<Strategy, Plan>> options;
  if (auto p = planner.doubling()) options.emplace_back(Strategy::doubling, *p);
  if (auto p = planner.line()) options.emplace_back(Strategy::line_endpoints, *p);
  options.emplace_back(Strategy::single_endpoint, planner.single());
  options.emplace_back(Strategy::greedy, planner.greedy());
  auto best = std::min_element(options.begin(), options.end(),
                               [](const auto& a, const auto& b) {
                                 return a.second.layers.size() < b.second.layers.size();
                               });
  return *best;
}

}  // namespace

Strategy resolve_strategy(const PauliString& target, const ConnectivityGraph& graph,
                          Strategy strategy) {
  return plan_for(target, graph, strategy).first;
}

QsaSchedule compile(const PauliString& target, const ConnectivityGraph& graph,
                    Strategy strategy, double tg) {
  return assign_letters(target, plan_for(target, graph, strategy).second, tg);
}

PauliString replay_symbolic(const QsaSchedule& schedule) {
  PauliString q = schedule.seed.string;
  if (q.n_sites() != schedule.n_sites) {
    throw InvalidScheduleError("seed string has the wrong site count");
  }
  auto step = [&](const InvolutionRotation& r, const std::string& name) {
    auto next = conjugate_strict(q, r);
    if (!next) {
      throw InvalidScheduleError("conjugation by " + name + " on " + q.str() +
                                 " does not collapse to a single string");
    }
    q = *next;
  };
  for (std::size_t l = 0; l < schedule.layers.size(); ++l) {
    for (const auto& spec : schedule.layers[l]) {
      try {
        step(make_attachment(spec, schedule.n_sites), spec.str());
      } catch (const DomainError& e) {
        throw InvalidScheduleError("layer " + std::to_string(l) + " " + spec.str() +
                                   ": " + e.what());
      }
    }
  }
  for (const auto& sw : schedule.final_swappers) {
    try {
      step(make_swapper(sw, schedule.n_sites), sw.str());
    } catch (const DomainError& e) {
      throw InvalidScheduleError(sw.str() + ": " + e.what());
    }
  }
  return q;
}

bool ValidationReport::has(const std::string& rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

ValidationReport validate(const QsaSchedule& schedule, const ConnectivityGraph& graph) {
  ValidationReport report;
  auto flag = [&](const std::string& rule, const std::string& detail) {
    report.violations.push_back({rule, detail});
  };
  const std::size_t n = schedule.n_sites;
  if (graph.n_sites() != n || schedule.target.n_sites() != n ||
      schedule.seed.string.n_sites() != n) {
    flag("site_count", "schedule, target, seed and graph must agree on n_sites");
    return report;
  }
  auto seed_sites = schedule.seed.string.support();
  if (seed_sites.size() != 2 || !schedule.seed.string.is_hermitian()) {
    flag("seed_shape", "seed must be a Hermitian two-site string");
  } else if (!graph.has_edge(seed_sites[0], seed_sites[1])) {
    flag("edge_existence", "seed pair (" + std::to_string(seed_sites[0]) + "," +
                               std::to_string(seed_sites[1]) + ") is not an edge");
  }
  std::vector<bool> grown(n, false);
  for (auto v : seed_sites) grown[v] = true;
  bool structural = true;
  for (std::size_t l = 0; l < schedule.layers.size(); ++l) {
    std::vector<bool> used(n, false);
    std::vector<std::size_t> attached;
    for (const auto& spec : schedule.layers[l]) {
      const std::string where = "layer " + std::to_string(l) + " " + spec.str();
      if (spec.connector_site >= n || spec.attached_site >= n) {
        flag("site_range", where);
        structural = false;
        continue;
      }
      try {
        spec.check();
      } catch (const DomainError& e) {
        flag("spec_invalid", where + ": " + e.what());
        structural = false;
      }
      for (auto v : {spec.connector_site, spec.attached_site}) {
        if (used[v]) {
          flag("layer_disjointness",
               where + " reuses site " + std::to_string(v) + " within the layer");
        }
        used[v] = true;
      }
      if (grown[spec.attached_site]) {
        flag("freshness", where + " attaches already occupied site " +
                              std::to_string(spec.attached_site));
      }
      if (!graph.has_edge(spec.connector_site, spec.attached_site)) {
        flag("edge_existence", where + " is not an edge");
      }
      attached.push_back(spec.attached_site);
    }
    for (auto v : attached) grown[v] = true;
  }
  std::vector<bool> swapped(n, false);
  for (const auto& sw : schedule.final_swappers) {
    if (sw.site >= n) {
      flag("site_range", sw.str());
      structural = false;
      continue;
    }
    if (swapped[sw.site]) flag("layer_disjointness", sw.str() + " repeats a site");
    swapped[sw.site] = true;
  }
  if (!structural) return report;
  try {
    PauliString out = replay_symbolic(schedule);
    if (!(out == schedule.target)) {
      flag("replay_equality",
           "replay gives " + out.str() + ", target is " + schedule.target.str());
    }
  } catch (const InvalidScheduleError& e) {
    flag("replay_collapse", e.what());
  }
  return report;
}

std::vector<InvolutionRotation> pulse_sequence(const QsaSchedule& schedule,
                                               double delta) {
  const std::size_t n = schedule.n_sites;
  std::vector<InvolutionRotation> out;
  for (const auto& sw : schedule.final_swappers) {
    out.push_back(make_swapper(sw, n, Direction::inverse).offset(delta));
  }
  for (auto l = schedule.layers.rbegin(); l != schedule.layers.rend(); ++l) {
    for (const auto& spec : *l) {
      out.push_back(make_attachment(spec, n, Direction::inverse).offset(delta));
    }
  }
  out.emplace_back(WeightedPauliSum(schedule.seed.string), schedule.seed.tg + delta);
  for (const auto& layer : schedule.layers) {
    for (const auto& spec : layer) {
      out.push_back(make_attachment(spec, n, Direction::forward).offset(delta));
    }
  }
  for (const auto& sw : schedule.final_swappers) {
    out.push_back(make_swapper(sw, n, Direction::forward).offset(delta));
  }
  return out;
}

std::vector<InvolutionRotation> pulse_sequence(const PulseProgram& program,
                                               double delta) {
  std::vector<InvolutionRotation> out;
  for (const auto& stage : program.stages) {
    for (const auto& s : stage) {
      if (s.n_sites != program.n_sites) {
        throw DimensionError("schedule size differs from program size");
      }
      auto p = pulse_sequence(s, delta);
      out.insert(out.end(), p.begin(), p.end());
    }
  }
  return out;
}

}  // namespace qsa
