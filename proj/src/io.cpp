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

#include "qsa/io.hpp"

#include <fstream>
#include <sstream>

#include "qsa/errors.hpp"

namespace qsa {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ParseError(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

template <typename T>
T get(const Json& j, const char* name) {
  try {
    return field(j, name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field \"") + name + "\" has the wrong type");
  }
}

template <typename T>
T get_or(const Json& j, const char* name, T fallback) {
  if (!j.is_object() || !j.contains(name)) return fallback;
  return get<T>(j, name);
}

Pauli letter(const Json& j, const char* name) {
  const auto s = get<std::string>(j, name);
  if (s.size() != 1) throw ParseError(std::string("field \"") + name + "\" is not one letter");
  return pauli_from_char(s[0]);
}

std::string letter_str(Pauli p) { return std::string(1, to_char(p)); }

// Branch fields are optional on input and default to (-1, 0).
Branch branch_from(const Json& j) {
  Branch b;
  if (j.contains("branch_m")) b.m = get<int>(j, "branch_m");
  if (j.contains("branch_mp")) b.mp = get<int>(j, "branch_mp");
  return b;
}

Cell cell_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw ParseError("cell must be [i, j]");
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

std::size_t site_index(const Json& j, const char* name) {
  const auto v = get<long long>(j, name);
  if (v < 0) throw ParseError(std::string("field \"") + name + "\" is negative");
  return static_cast<std::size_t>(v);
}

}  // namespace

Json to_json(const PauliString& p) { return p.str(); }

PauliString pauli_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("Pauli literal must be a string");
  return PauliString::parse(j.get<std::string>());
}

Json to_json(const AttachmentSpec& a) {
  return Json{{"connector_site", a.connector_site}, {"alpha", letter_str(a.alpha)},
              {"beta", letter_str(a.beta)},         {"attached_site", a.attached_site},
              {"attached_letter", letter_str(a.attached_letter)},
              {"branch_m", a.branch.m},
              {"branch_mp", a.branch.mp}};
}

AttachmentSpec attachment_from_json(const Json& j) {
  AttachmentSpec a;
  a.connector_site = site_index(j, "connector_site");
  a.alpha = letter(j, "alpha");
  a.beta = letter(j, "beta");
  a.attached_site = site_index(j, "attached_site");
  a.attached_letter = letter(j, "attached_letter");
  a.branch = branch_from(j);
  return a;
}

Json to_json(const SwapperSpec& s) {
  return Json{{"connector_site", s.site},
              {"alpha", letter_str(s.alpha)},
              {"beta", letter_str(s.beta)},
              {"branch_m", s.branch.m},
              {"branch_mp", s.branch.mp}};
}

SwapperSpec swapper_from_json(const Json& j) {
  SwapperSpec s;
  s.site = site_index(j, "connector_site");
  s.alpha = letter(j, "alpha");
  s.beta = letter(j, "beta");
  s.branch = branch_from(j);
  return s;
}

Json to_json(const QsaSchedule& s) {
  Json layers = Json::array();
  for (const auto& layer : s.layers) {
    Json l = Json::array();
    for (const auto& a : layer) l.push_back(to_json(a));
    layers.push_back(std::move(l));
  }
  Json swappers = Json::array();
  for (const auto& sw : s.final_swappers) swappers.push_back(to_json(sw));
  return Json{{"n_sites", s.n_sites},
              {"seed", {{"string", s.seed.string.str()}, {"tg", s.seed.tg}}},
              {"layers", std::move(layers)},
              {"final_swappers", std::move(swappers)},
              {"target", s.target.str()}};
}

QsaSchedule schedule_from_json(const Json& j) {
  QsaSchedule s;
  s.n_sites = site_index(j, "n_sites");
  const Json& seed = field(j, "seed");
  s.seed.string = pauli_from_json(field(seed, "string"));
  s.seed.tg = get<double>(seed, "tg");
  const Json& layers = field(j, "layers");
  if (!layers.is_array()) throw ParseError("\"layers\" must be an array");
  for (const auto& l : layers) {
    if (!l.is_array()) throw ParseError("each layer must be an array");
    std::vector<AttachmentSpec> layer;
    for (const auto& a : l) layer.push_back(attachment_from_json(a));
    s.layers.push_back(std::move(layer));
  }
  const Json& sw = field(j, "final_swappers");
  if (!sw.is_array()) throw ParseError("\"final_swappers\" must be an array");
  for (const auto& x : sw) s.final_swappers.push_back(swapper_from_json(x));
  s.target = pauli_from_json(field(j, "target"));
  return s;
}

Json to_json(const ConnectivityGraph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return Json{{"n_sites", g.n_sites()}, {"edges", std::move(edges)}};
}

ConnectivityGraph graph_from_json(const Json& j) {
  ConnectivityGraph g(site_index(j, "n_sites"));
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw ParseError("\"edges\" must be an array");
  for (const auto& e : edges) {
    const Cell c = cell_from(e);
    if (c.first < 0 || c.second < 0 || static_cast<std::size_t>(c.first) >= g.n_sites() ||
        static_cast<std::size_t>(c.second) >= g.n_sites() || c.first == c.second) {
      throw ParseError("edge [" + std::to_string(c.first) + ", " + std::to_string(c.second) +
                       "] is not a pair of distinct sites");
    }
    g.add_edge(static_cast<std::size_t>(c.first), static_cast<std::size_t>(c.second));
  }
  return g;
}

Json to_json(const LatticeSpec& s) {
  Json holes = Json::array();
  for (const auto& h : s.holes) {
    Json cells = Json::array();
    for (const auto& [i, j] : h.plaquettes) cells.push_back({i, j});
    holes.push_back({{"plaquettes", std::move(cells)}, {"kind", to_string(h.kind)}});
  }
  Json twists = Json::array();
  for (const auto& t : s.twists) {
    twists.push_back(
        {{"row", t.row}, {"col", t.col}, {"extent", t.extent}, {"paired", t.paired}});
  }
  return Json{{"rows", s.rows},
              {"cols", s.cols},
              {"boundary", to_string(s.boundary)},
              {"model", to_string(s.model)},
              {"J", s.J},
              {"holes", std::move(holes)},
              {"twists", std::move(twists)}};
}

LatticeSpec lattice_from_json(const Json& j) {
  LatticeSpec s;
  s.rows = get<int>(j, "rows");
  s.cols = get<int>(j, "cols");
  s.boundary = boundary_from_string(get_or<std::string>(j, "boundary", "open"));
  s.model = model_from_string(get_or<std::string>(j, "model", "wen"));
  s.J = get_or<double>(j, "J", 1.0);
  if (j.contains("holes")) {
    for (const auto& h : j.at("holes")) {
      Hole hole;
      hole.kind = hole_kind_from_string(get<std::string>(h, "kind"));
      for (const auto& c : field(h, "plaquettes")) hole.plaquettes.push_back(cell_from(c));
      s.holes.push_back(std::move(hole));
    }
  }
  if (j.contains("twists")) {
    for (const auto& t : j.at("twists")) {
      s.twists.push_back({get<int>(t, "row"), get<int>(t, "col"), get_or<int>(t, "extent", 0),
                          get_or<bool>(t, "paired", true)});
    }
  }
  try {
    s.check();
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid lattice: ") + e.what());
  }
  return s;
}

Json to_json(const StringPath& p) {
  Json sites = Json::array();
  for (const auto& [i, j] : p.sites) sites.push_back({i, j});
  return Json{{"sites", std::move(sites)}, {"letters", p.letters}};
}

StringPath path_from_json(const Json& j) {
  StringPath p;
  for (const auto& c : field(j, "sites")) p.sites.push_back(cell_from(c));
  p.letters = get<std::string>(j, "letters");
  return p;
}

Json to_json(const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"rule", x.rule}, {"detail", x.detail}});
  return Json{{"ok", r.ok()}, {"violations", std::move(v)}};
}

Json to_json(const CompareReport& r) {
  return Json{{"metric", r.metric}, {"distance", r.distance}, {"tolerance", r.tolerance},
              {"pass", r.pass},     {"seed", r.seed}};
}

Json to_json(const ErrorScalingReport& r) {
  return Json{{"subject", r.subject},   {"deltas", r.deltas},
              {"distances", r.distances}, {"slope", r.slope},
              {"intercept", r.intercept}, {"pulses", r.pulses},
              {"random_offsets", r.random_offsets}, {"seed", r.seed},
              {"max_offset", r.max_offset}};
}

Json to_json(const Syndrome& s) {
  Json out = Json::array();
  for (const auto& x : s) {
    out.push_back({{"plaquette", {x.plaquette.first, x.plaquette.second}},
                   {"kind", to_string(x.kind)}});
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace qsa
