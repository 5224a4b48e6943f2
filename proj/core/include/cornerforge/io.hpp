// Copyright 2026 The Cornerforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "cornerforge/double_fold.hpp"
#include "cornerforge/drill_algebraic.hpp"
#include "cornerforge/drill_local.hpp"
#include "cornerforge/germ.hpp"
#include "cornerforge/mpoly.hpp"
#include "cornerforge/report.hpp"
#include "cornerforge/surface.hpp"
#include "cornerforge/variety.hpp"
#include "json.hpp"

// JSON encodings shared by the CLI and the tests. Every decoder throws
// cornerforge::Error with a message naming the offending field.
namespace cornerforge::io {

using Json = nlohmann::ordered_json;

Json poly_to_json(const poly::MPoly& p);
poly::MPoly poly_from_json(const Json& j);

Json germ_to_json(const germ::OrthantGerm& g);
germ::OrthantGerm germ_from_json(const Json& j);

Json stratum_to_json(const germ::StratumDescriptor& s);

Json tree_to_json(const drill::BlowupNode& node);
drill::BlowupNode tree_from_json(const Json& j);

Json system_to_json(const VarietySystem& s);
VarietySystem system_from_json(const Json& j);

/// {"vars":[...],"ambient":[poly...],"generators":[poly...],"anchors":[[...]]}
Json center_to_json(const algdrill::CenterData& c);
algdrill::CenterData center_from_json(const Json& j);

/// {"vars":[...],"inequalities":[poly...]}
Json corners_to_json(const corners::CornersSpec& c);
corners::CornersSpec corners_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);
Json verdicts_to_json(const std::vector<Verdict>& v);

Json topology_to_json(const surface::TopologyReport& t);
Json partition_to_json(const surface::EdgePartition& p);
Json polygon_to_json(const surface::ConvexPolygon& p);

/// Parses text as JSON, converting parse failures to Error.
Json parse(const std::string& text);
Json read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace cornerforge::io
