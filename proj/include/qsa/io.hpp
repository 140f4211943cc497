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

#include <json.hpp>
#include <string>

#include "qsa/analysis.hpp"
#include "qsa/anyon.hpp"
#include "qsa/dense.hpp"
#include "qsa/schedule.hpp"
#include "qsa/toric.hpp"

namespace qsa {

using Json = nlohmann::ordered_json;

// Malformed documents throw ParseError naming the offending field.

Json to_json(const PauliString& p);
PauliString pauli_from_json(const Json& j);

Json to_json(const AttachmentSpec& a);
AttachmentSpec attachment_from_json(const Json& j);
Json to_json(const SwapperSpec& s);
SwapperSpec swapper_from_json(const Json& j);

Json to_json(const QsaSchedule& s);
QsaSchedule schedule_from_json(const Json& j);

Json to_json(const ConnectivityGraph& g);
ConnectivityGraph graph_from_json(const Json& j);

Json to_json(const LatticeSpec& s);
LatticeSpec lattice_from_json(const Json& j);

Json to_json(const StringPath& p);
StringPath path_from_json(const Json& j);

Json to_json(const ValidationReport& r);
Json to_json(const CompareReport& r);
Json to_json(const ErrorScalingReport& r);
Json to_json(const Syndrome& s);

/** Reads and parses a JSON file; ParseError on I/O or syntax failure. */
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace qsa
