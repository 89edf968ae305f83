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

#include "json_io.hpp"

#include <algorithm>

namespace gamedyn::detail {

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

}  // namespace

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Syntax, std::string(what) + ": line " +
                                       std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
}

void syntax_error(const std::string& locus, const std::string& message) {
  throw Error(ErrorCode::Syntax, locus + ": " + message);
}

void require_object(const json& j, const std::string& locus) {
  if (!j.is_object()) syntax_error(locus, "expected an object");
}

void require_array(const json& j, const std::string& locus) {
  if (!j.is_array()) syntax_error(locus, "expected an array");
}

void reject_unknown_fields(const json& j, std::initializer_list<std::string_view> allowed,
                           const std::string& locus) {
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      syntax_error(locus, "unknown field '" + key + "'");
  }
}

std::string require_string(const json& j, const std::string& locus) {
  if (!j.is_string()) syntax_error(locus, "expected a string");
  return j.get<std::string>();
}

VertexId lookup_vertex(const Game& g, const json& j, const std::string& locus) {
  const std::string name = require_string(j, locus);
  auto v = g.find(name);
  if (!v) throw Error(ErrorCode::UnknownVertex, locus + ": unknown vertex '" + name + "'");
  return *v;
}

namespace {

std::vector<VertexId> parse_sequence(const Game& g, const json& j, const std::string& locus) {
  require_array(j, locus);
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(lookup_vertex(g, j[i], locus + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

Play parse_play(const Game& g, const json& j, const std::string& locus) {
  require_object(j, locus);
  reject_unknown_fields(j, {"path", "lasso"}, locus);
  if (j.contains("path") == j.contains("lasso"))
    syntax_error(locus, "a play needs exactly one of 'path' or 'lasso'");
  if (j.contains("path")) {
    auto path = parse_sequence(g, j["path"], locus + ".path");
    if (path.empty()) syntax_error(locus + ".path", "empty path");
    return Play::finite(std::move(path));
  }
  const json& l = j["lasso"];
  require_object(l, locus + ".lasso");
  reject_unknown_fields(l, {"stem", "loop"}, locus + ".lasso");
  if (!l.contains("loop")) syntax_error(locus + ".lasso", "missing 'loop'");
  auto stem = l.contains("stem") ? parse_sequence(g, l["stem"], locus + ".lasso.stem")
                                 : std::vector<VertexId>{};
  auto loop = parse_sequence(g, l["loop"], locus + ".lasso.loop");
  if (loop.empty()) syntax_error(locus + ".lasso.loop", "empty loop");
  return Play::lasso(std::move(stem), std::move(loop));
}

json names_to_json(const Game& g, const std::vector<VertexId>& vs) {
  json out = json::array();
  for (VertexId v : vs) out.push_back(g.name(v));
  return out;
}

json play_to_json(const Game& g, const Play& p) {
  if (p.is_finite()) return json{{"path", names_to_json(g, p.stem)}};
  return json{{"lasso", json{{"stem", names_to_json(g, p.stem)}, {"loop", names_to_json(g, p.loop)}}}};
}

}  // namespace gamedyn::detail
