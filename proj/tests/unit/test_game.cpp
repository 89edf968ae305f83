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

#include <algorithm>

#include "doctest.h"
#include "gamedyn/error.hpp"
#include "gamedyn/game.hpp"
#include "helpers.hpp"

using namespace gamedyn;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_game(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for " << text);
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("disagree game parses with labelled edges") {
  const Game g = testing::fixture("gdis.json");
  CHECK(g.player_count() == 2);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 4);
  CHECK(g.has_edge_labels());
  const VertexId v1 = g.require("v1"), v2 = g.require("v2"), t = g.require("vbot");
  CHECK(g.edge_label(v1, v2) == "c1");
  CHECK(g.edge_label(v2, t) == "s2");
  CHECK(g.is_terminal(t));
  CHECK(g.owner(v1) == 1);
  CHECK(g.owner(t) == 0);
  CHECK(g.vertices_of(2) == std::vector<VertexId>{v2});
  CHECK(validate_game(g).empty());
}

TEST_CASE("preferences compare plays best first") {
  const Game g = testing::fixture("gdis.json");
  const VertexId v1 = g.require("v1"), v2 = g.require("v2"), t = g.require("vbot");
  const Play indirect = Play::finite({v1, v2, t});
  const Play direct = Play::finite({v1, t});
  const Play loop = Play::lasso({}, {v1, v2});
  CHECK(g.compare(1, indirect, direct) == Ordering::Greater);
  CHECK(g.compare(1, direct, loop) == Ordering::Greater);
  CHECK(g.compare(1, loop, indirect) == Ordering::Less);
  CHECK(g.compare(1, direct, direct) == Ordering::Equal);
  CHECK(g.preference(1).rank(loop) == 2);
}

TEST_CASE("unmentioned plays share the bottom class") {
  const Game g = testing::fixture("fig5.json");
  const VertexId v1 = g.require("v1"), v4 = g.require("v4"), t = g.require("vbot");
  const Play listed = Play::finite({v1, v4, t});
  CHECK(g.preference(4).rank(listed) == g.preference(4).bottom_rank());
  CHECK(g.compare(4, listed, Play::finite({v4, t})) == Ordering::Equal);
  CHECK(g.compare(1, listed, Play::finite({v1, t})) == Ordering::Greater);
}

TEST_CASE("canonical form reduces lassos") {
  const Play p = Play::lasso({0, 1}, {2, 1, 2, 1});
  const Play c = canonical_form(p);
  CHECK(c == Play::lasso({0}, {1, 2}));
  CHECK(canonical_form(c) == c);
  CHECK(canonical_form(Play::finite({0, 1})) == Play::finite({0, 1}));
}

TEST_CASE("positional plays of the disagree game") {
  const Game g = testing::fixture("gdis.json");
  const VertexId v1 = g.require("v1"), v2 = g.require("v2"), t = g.require("vbot");
  auto plays = positional_plays(g, v1);
  std::sort(plays.begin(), plays.end());
  std::vector<Play> expected{Play::finite({v1, t}), Play::finite({v1, v2, t}), Play::lasso({}, {v1, v2})};
  std::sort(expected.begin(), expected.end());
  CHECK(plays == expected);
  for (const auto& p : plays) CHECK(g.is_play(p));
  CHECK_FALSE(g.is_play(Play::finite({v1, v2})));
  CHECK_FALSE(g.is_path(Play::finite({t, v1})));
}

TEST_CASE("json round trip") {
  for (const char* name : {"gdis.json", "fig2.json", "fig3.json", "fig4.json", "fig5.json"}) {
    const Game g = testing::fixture(name);
    const Game h = parse_game(game_to_json(g));
    CHECK(game_to_json(h) == game_to_json(g));
    CHECK(h.names() == g.names());
  }
}

TEST_CASE("acyclicity") {
  CHECK_FALSE(testing::fixture("gdis.json").is_acyclic());
  CHECK(testing::fixture("fig2.json").is_acyclic());
}

TEST_CASE("malformed documents") {
  CHECK(code_of("{") == ErrorCode::Syntax);
  CHECK(code_of(R"({"players": 1, "vertices": ["a"]})") == ErrorCode::Syntax);
  CHECK(code_of(R"({"players": 1, "vertices": ["a", "t"], "edges": [["a", "t"]], "owner": {"a": 1},
                   "colour": 3})") == ErrorCode::Syntax);
  CHECK(code_of(R"({"players": 1, "vertices": ["a", "t"], "edges": [["a", "x"]], "owner": {"a": 1}})") ==
        ErrorCode::UnknownVertex);
  CHECK(code_of(R"({"players": 1, "vertices": ["a", "t"], "edges": [["a", "t"]], "owner": {"a": 1},
                   "preferences": {"2": []}})") == ErrorCode::Validation);
}

TEST_CASE("validation diagnostics") {
  // Missing owner on a vertex with successors.
  CHECK(code_of(R"({"players": 1, "vertices": ["a", "t"], "edges": [["a", "t"]]})") == ErrorCode::Validation);
  // A terminal with an owner.
  CHECK(code_of(R"({"players": 1, "vertices": ["a", "t"], "edges": [["a", "t"]],
                   "owner": {"a": 1, "t": 1}})") == ErrorCode::Validation);
  // A preference entry that is not a play of the arena.
  CHECK(code_of(R"({"players": 1, "vertices": ["a", "t"], "edges": [["a", "t"]], "owner": {"a": 1},
                   "preferences": {"1": [[{"path": ["t", "a"]}]]}})") == ErrorCode::Validation);
  // The same play listed twice.
  CHECK(code_of(R"({"players": 1, "vertices": ["a", "t"], "edges": [["a", "t"]], "owner": {"a": 1},
                   "preferences": {"1": [[{"path": ["a", "t"]}], [{"path": ["a", "t"]}]]}})") ==
        ErrorCode::Validation);
  // Duplicate edge.
  CHECK(code_of(R"({"players": 1, "vertices": ["a", "t"], "edges": [["a", "t"], ["a", "t"]],
                   "owner": {"a": 1}})") == ErrorCode::Validation);
}

TEST_CASE("diagnostic names") {
  CHECK(diagnostic_kind_name(DiagnosticKind::DuplicateEdge) == "DuplicateEdge");
  CHECK(error_code_name(ErrorCode::NotDeletable) == "NotDeletable");
}
