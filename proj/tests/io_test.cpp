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

#include <gtest/gtest.h>

#include "qsa/errors.hpp"

namespace qsa {
namespace {

TEST(Io, ScheduleRoundTripRevalidates) {
  const auto g = ConnectivityGraph::path(10, 2);
  const auto s = compile(PauliString::parse("XZYXZZYXXZ"), g, Strategy::line_endpoints, 0.7);
  const auto back = schedule_from_json(Json::parse(to_json(s).dump()));
  EXPECT_EQ(to_json(back), to_json(s));
  EXPECT_TRUE(validate(back, g).ok());
  EXPECT_EQ(replay_symbolic(back), s.target);
}

TEST(Io, AttachmentFieldNames) {
  AttachmentSpec a;
  a.connector_site = 2;
  a.alpha = Pauli::Z;
  a.beta = Pauli::X;
  a.attached_site = 5;
  a.attached_letter = Pauli::Y;
  const Json j = to_json(a);
  for (const char* f : {"connector_site", "alpha", "beta", "attached_site", "attached_letter",
                        "branch_m", "branch_mp"}) {
    EXPECT_TRUE(j.contains(f)) << f;
  }
  EXPECT_EQ(j["branch_m"], -1);
  const Json sw = to_json(SwapperSpec{});
  EXPECT_FALSE(sw.contains("attached_site"));
}

TEST(Io, GraphAndLatticeRoundTrip) {
  const auto g = ConnectivityGraph::complete(5);
  EXPECT_EQ(graph_from_json(to_json(g)).edges(), g.edges());

  LatticeSpec spec;
  spec.rows = 3;
  spec.cols = 3;
  spec.model = LatticeModel::kitaev_holes;
  spec.holes = {Hole{{{1, 1}}, HoleKind::smooth}, Hole{{{1, 2}}, HoleKind::rough}};
  EXPECT_EQ(to_json(lattice_from_json(to_json(spec))), to_json(spec));

  StringPath p{{{0, 0}, {0, 1}, {1, 1}}, "ZXY"};
  const auto q = path_from_json(to_json(p));
  EXPECT_EQ(q.sites, p.sites);
  EXPECT_EQ(q.letters, p.letters);
}

TEST(Io, MalformedInputIsParseError) {
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n_sites": 3})")), ParseError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n_sites": 3, "edges": [[0, 7]]})")),
               ParseError);
  EXPECT_THROW(pauli_from_json(Json(7)), ParseError);
  EXPECT_THROW(lattice_from_json(Json::parse(
                   R"({"rows": 3, "cols": 3, "boundary": "open", "model": "wen", "J": 1,
                       "holes": [], "twists": [{"row": 9, "col": 0, "extent": 1}]})")),
               ParseError);
  EXPECT_THROW(schedule_from_json(Json::parse(R"({"n_sites": 2})")), ParseError);
}

}  // namespace
}  // namespace qsa
