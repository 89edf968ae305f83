/*
 * Copyright 2026 The gamedyn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Structured reports behind the C API. Every report is a JSON document;
// the text form is rendered from the same document.

#pragma once

#include <string>
#include <utility>

#include "gamedyn/analysis.hpp"
#include "gamedyn/config.hpp"
#include "gamedyn/dynamics.hpp"
#include "gamedyn/minors.hpp"
#include "gamedyn/spp.hpp"
#include "json_io.hpp"

namespace gamedyn::report {

enum class Verdict { Ok = 0, Violated = 3, Unknown = 4 };

struct Report {
  detail::json doc;
  Verdict verdict = Verdict::Ok;
};

std::string render_text(const detail::json& doc);

Report dynamics(const DynamicsGraph& dg);
/// check is "termination", "fair-termination" or "equilibria".
Report analyze(const DynamicsGraph& dg, const std::string& check);
Report minor(const Game& source, const MinorResult& m, const Limits& limits);
Report dominated(const Game& g, std::pair<VertexId, VertexId> e1, std::pair<VertexId, VertexId> e2,
                 const Limits& limits);
Report belief(const BeliefGraph& bg);
Report dis_minor(const Game& g, const DisMinorResult& r);

Report spp_validate(const OneTargetGame& otg);
Report spp_dw(const OneTargetGame& otg);
Report spp_sdw(const OneTargetGame& otg, const Limits& limits);
Report spp_safety(const OneTargetGame& otg, SafetyMode mode, const Limits& limits);

}  // namespace gamedyn::report
