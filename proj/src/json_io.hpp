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

// Internal JSON helpers shared by the parsers and report writers.

#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include "gamedyn/error.hpp"
#include "gamedyn/game.hpp"
#include "json.hpp"

namespace gamedyn::detail {

using json = nlohmann::ordered_json;

/// Parses text, turning parser failures into Syntax errors with a line number.
json parse_json(std::string_view text, std::string_view what);

[[noreturn]] void syntax_error(const std::string& locus, const std::string& message);

void require_object(const json& j, const std::string& locus);
void require_array(const json& j, const std::string& locus);
void reject_unknown_fields(const json& j, std::initializer_list<std::string_view> allowed,
                           const std::string& locus);
std::string require_string(const json& j, const std::string& locus);

/// Vertex lookup by name; unknown names raise UnknownVertex with the locus.
VertexId lookup_vertex(const Game& g, const json& j, const std::string& locus);

/// {"path":[...]} or {"lasso":{"stem":[...],"loop":[...]}} in terms of the
/// vertex names of `g`. The result is not canonicalized.
Play parse_play(const Game& g, const json& j, const std::string& locus);
json play_to_json(const Game& g, const Play& p);

json names_to_json(const Game& g, const std::vector<VertexId>& vs);

}  // namespace gamedyn::detail
