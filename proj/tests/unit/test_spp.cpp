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

#include <set>

#include "doctest.h"
#include "gamedyn/analysis.hpp"
#include "gamedyn/error.hpp"
#include "gamedyn/generate.hpp"
#include "gamedyn/spp.hpp"
#include "helpers.hpp"

using namespace gamedyn;

namespace {

OneTargetGame otg_of(const std::string& game_json) {
  auto o = otg_from_game(parse_game(game_json));
  REQUIRE(o.has_value());
  return *o;
}

bool fair_pc(const Game& g) {
  const auto dg = build_dynamics(g, DynamicsKind::PC);
  return find_fair_cycle(dg.graph, dg.players).fair;
}

std::set<OtgAxiom> axioms(const std::vector<OtgDiagnostic>& d) {
  std::set<OtgAxiom> out;
  for (const auto& x : d) out.insert(x.axiom);
  return out;
}

// Three pivots u_i, each reaching the next one through its own relay w_i.
const char* kRelayWheel = R"({
  "players": 6,
  "vertices": ["u1", "u2", "u3", "w1", "w2", "w3", "d"],
  "edges": [["u1", "w1"], ["w1", "u2"], ["u2", "w2"], ["w2", "u3"], ["u3", "w3"], ["w3", "u1"],
            ["u1", "d"], ["u2", "d"], ["u3", "d"]],
  "owner": {"u1": 1, "u2": 2, "u3": 3, "w1": 4, "w2": 5, "w3": 6},
  "preferences": {
    "1": [[{"path": ["u1", "w1", "u2", "d"]}], [{"path": ["u1", "d"]}]],
    "2": [[{"path": ["u2", "w2", "u3", "d"]}], [{"path": ["u2", "d"]}]],
    "3": [[{"path": ["u3", "w3", "u1", "d"]}], [{"path": ["u3", "d"]}]],
    "4": [[{"path": ["w1", "u2", "d"]}]],
    "5": [[{"path": ["w2", "u3", "d"]}]],
    "6": [[{"path": ["w3", "u1", "d"]}]]
  }
})";

// Same wheel, but the first two pivots share the relay w.
const char* kSharedRelay = R"({
  "players": 4,
  "vertices": ["u1", "u2", "u3", "w", "d"],
  "edges": [["u1", "w"], ["w", "u2"], ["w", "u3"], ["u2", "w"], ["u3", "u1"],
            ["u1", "d"], ["u2", "d"], ["u3", "d"]],
  "owner": {"u1": 1, "u2": 2, "u3": 3, "w": 4},
  "preferences": {
    "1": [[{"path": ["u1", "w", "u2", "d"]}], [{"path": ["u1", "d"]}]],
    "2": [[{"path": ["u2", "w", "u3", "d"]}], [{"path": ["u2", "d"]}]],
    "3": [[{"path": ["u3", "u1", "d"]}], [{"path": ["u3", "d"]}]],
    "4": [[{"path": ["w", "u2", "d"]}], [{"path": ["w", "u3", "d"]}]]
  }
})";

}  // namespace

TEST_CASE("disagree instance as a routing problem") {
  const OneTargetGame otg = parse_spp(testing::slurp("gdis.spp.json"));
  CHECK(otg.game.vertex_count() == 3);
  CHECK(otg.game.edge_count() == 4);
  CHECK(validate_otg(otg).empty());
  CHECK(is_notg(otg));
  const VertexId v1 = otg.game.require("v1"), v2 = otg.game.require("v2"), t = otg.game.require("vbot");
  CHECK(otg.target == t);
  CHECK(forbidden_plays(otg, 1) == std::vector<Play>{Play::lasso({}, {v1, v2})});

  const auto dw = find_dispute_wheel(otg);
  REQUIRE(dw.has_value());
  CHECK(dw->pivots == std::vector<VertexId>{v1, v2});
  CHECK(dw->direct == std::vector<Play>{Play::finite({v1, t}), Play::finite({v2, t})});
  CHECK(dw->connecting == std::vector<std::vector<VertexId>>{{v1}, {v2}});
  CHECK(is_dispute_wheel(otg, *dw));
  CHECK(sdw_violation(otg, *dw).empty());

  const auto sdw = find_sdw(otg);
  REQUIRE(sdw.has_value());
  const SdwMinor m = extract_sdw_minor(otg, *sdw);
  CHECK(m.script.empty());
  CHECK(m.game.vertex_count() == 3);
}

TEST_CASE("disagree safety verdicts agree") {
  const OneTargetGame otg = parse_spp(testing::slurp("gdis.spp.json"));
  const auto s = safety_verdict(otg, SafetyMode::Structural);
  CHECK(s.status == SafetyStatus::UnsafeSDW);
  CHECK(s.wheel.has_value());
  const auto e = safety_verdict(otg, SafetyMode::Exact);
  CHECK(e.status == SafetyStatus::UnsafeModelChecked);
  CHECK_FALSE(e.cycle.empty());
  const auto b = safety_verdict(otg, SafetyMode::Both);
  CHECK(is_unsafe(b.status));
  CHECK(b.structural == SafetyStatus::UnsafeSDW);
  CHECK(b.exact == SafetyStatus::UnsafeModelChecked);
}

TEST_CASE("both nodes preferring direct routes is safe") {
  const OneTargetGame otg = parse_spp(testing::slurp("gdis_safe.spp.json"));
  CHECK_FALSE(find_dispute_wheel(otg).has_value());
  CHECK_FALSE(find_sdw(otg).has_value());
  CHECK(safety_verdict(otg, SafetyMode::Structural).status == SafetyStatus::SafeNoDW);
  CHECK(safety_verdict(otg, SafetyMode::Both).exact == SafetyStatus::SafeModelChecked);
  CHECK(is_safe(safety_verdict(otg, SafetyMode::Both).status));
}

TEST_CASE("third-route game: a wheel, yet best replies settle") {
  const auto otg = otg_from_game(testing::fixture("fig3.json"));
  REQUIRE(otg.has_value());
  CHECK(validate_otg(*otg).empty());
  CHECK(is_notg(*otg));
  CHECK(find_dispute_wheel(*otg).has_value());
  CHECK(safety_verdict(*otg, SafetyMode::Exact).status == SafetyStatus::SafeModelChecked);
  CHECK(find_sdw(*otg).has_value() == fair_pc(otg->game));
}

TEST_CASE("axiom violations") {
  OneTargetGame otg = parse_spp(testing::slurp("gdis.spp.json"));
  const VertexId v2 = otg.game.require("v2"), t = otg.game.require("vbot");
  auto permitted = otg.permitted;
  permitted[1].erase(Play::finite({v2, t}));
  CHECK(axioms(validate_otg(otg.game, permitted)).count(OtgAxiom::SuffixClosure));

  const Game tied = parse_game(R"({
    "players": 2, "vertices": ["v1", "v2", "vbot"],
    "edges": [["v1", "v2"], ["v2", "v1"], ["v1", "vbot"], ["v2", "vbot"]],
    "owner": {"v1": 1, "v2": 2},
    "preferences": {"1": [[{"path": ["v1", "v2", "vbot"]}, {"path": ["v1", "vbot"]}]],
                    "2": [[{"path": ["v2", "vbot"]}]]}})");
  std::vector<std::set<Play>> p2{{Play::finite({0, 1, 2}), Play::finite({0, 2})}, {Play::finite({1, 2})}};
  CHECK(axioms(validate_otg(tied, p2)).count(OtgAxiom::SameNextHop));

  const Game two_targets = parse_game(R"({
    "players": 1, "vertices": ["v1", "a", "b"], "edges": [["v1", "a"], ["v1", "b"]], "owner": {"v1": 1},
    "preferences": {"1": [[{"path": ["v1", "a"]}]]}})");
  CHECK(axioms(validate_otg(two_targets, {{Play::finite({0, 1})}})).count(OtgAxiom::SingleTarget));
  CHECK(otg_axiom_name(OtgAxiom::ForbiddenPlateau) == "ForbiddenPlateau");
}

TEST_CASE("next-hop preferences") {
  const auto otg = otg_of(R"({
    "players": 4, "vertices": ["v1", "v2", "v4", "v5", "d"],
    "edges": [["v1", "v2"], ["v2", "v4"], ["v2", "v5"], ["v4", "d"], ["v5", "d"]],
    "owner": {"v1": 1, "v2": 2, "v4": 3, "v5": 4},
    "preferences": {"1": [[{"path": ["v1", "v2", "v4", "d"]}], [{"path": ["v1", "v2", "v5", "d"]}]],
                    "2": [[{"path": ["v2", "v4", "d"]}], [{"path": ["v2", "v5", "d"]}]],
                    "3": [[{"path": ["v4", "d"]}]], "4": [[{"path": ["v5", "d"]}]]}})");
  CHECK(validate_otg(otg).empty());
  CHECK_FALSE(is_notg(otg));
  CHECK(is_notg(parse_spp(testing::slurp("gdis_safe.spp.json"))));
}

TEST_CASE("relay wheel reduces to its pivots") {
  const auto otg = otg_of(kRelayWheel);
  CHECK(validate_otg(otg).empty());
  const auto w = find_sdw(otg);
  REQUIRE(w.has_value());
  CHECK(w->pivots.size() == 3);
  const SdwMinor m = extract_sdw_minor(otg, *w);
  CHECK(m.game.vertex_count() == 4);
  const auto pc = build_dynamics(m.game, DynamicsKind::PC);
  ProfileSpace space(m.game);
  const auto a = static_cast<NodeId>(space.index_of(m.sigma1));
  const auto b = static_cast<NodeId>(space.index_of(m.sigma2));
  CHECK(pc.graph.has_edge(a, b));
  CHECK(pc.graph.has_edge(b, a));
  CHECK_FALSE(terminates(build_dynamics(otg.game, DynamicsKind::PC).graph));
}

TEST_CASE("a wheel with a shared relay is not strong") {
  const auto otg = otg_of(kSharedRelay);
  CHECK(validate_otg(otg).empty());
  const auto& g = otg.game;
  const VertexId u1 = g.require("u1"), u2 = g.require("u2"), u3 = g.require("u3"), w = g.require("w"),
                 d = g.require("d");
  DisputeWheel wheel;
  wheel.pivots = {u1, u2, u3};
  wheel.direct = {Play::finite({u1, d}), Play::finite({u2, d}), Play::finite({u3, d})};
  wheel.connecting = {{u1, w}, {u2, w}, {u3}};
  CHECK(is_dispute_wheel(otg, wheel));
  CHECK_FALSE(sdw_violation(otg, wheel).empty());
  try {
    extract_sdw_minor(otg, wheel);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidSDW);
  }
}

TEST_CASE("routing documents") {
  const char* open_suffix = R"({"origin": "d", "nodes": {"a": {"paths": [["a", "b", "d"]]},
                                                       "b": {"paths": [["b", "a", "d"]]}}})";
  try {
    parse_spp(open_suffix);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SuffixClosureRepairNeeded);
  }
  const OneTargetGame repaired = parse_spp(open_suffix, true);
  CHECK(validate_otg(repaired).empty());
  const VertexId a = repaired.game.require("a"), b = repaired.game.require("b"), d = repaired.game.require("d");
  CHECK(repaired.permitted[1].count(Play::finite({b, d})));
  CHECK(repaired.game.compare(2, Play::finite({b, a, d}), Play::finite({b, d})) == Ordering::Greater);
  (void)a;

  const OneTargetGame single = parse_spp(R"({"origin": "d", "nodes": {"a": {"paths": [["a", "d"]]}}})");
  CHECK(safety_verdict(single, SafetyMode::Both).status == SafetyStatus::SafeNoDW);
  CHECK_THROWS_AS(parse_spp("{\"origin\": 3}"), Error);
}

TEST_CASE("stable assignments of the disagree instance") {
  const OneTargetGame otg = parse_spp(testing::slurp("gdis.spp.json"));
  const auto dg = build_dynamics(otg.game, DynamicsKind::BPC);
  std::vector<Profile> eq;
  for (NodeId n : equilibria(dg.graph)) eq.push_back(dg.states[n]);
  CHECK(count_assignments(otg, eq) == 2);
  const auto v = safety_verdict(otg, SafetyMode::Both);
  CHECK(v.equilibria.size() == 2);
}

TEST_CASE("exact mode honours the guard") {
  const OneTargetGame otg = parse_spp(testing::slurp("gdis.spp.json"));
  Limits tight;
  tight.profile_guard = 2;
  try {
    safety_verdict(otg, SafetyMode::Exact, tight);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StateSpaceTooLarge);
  }
}

TEST_CASE("strong wheel whose path crosses a satisfied non-pivot") {
  // v1 sits on the direct path of pivot v3 but prefers v1 v2 vbot; once it
  // settles there the wheel dissolves.
  const auto otg = otg_from_game(testing::fixture("sdw_unfair.json"));
  REQUIRE(otg.has_value());
  CHECK(validate_otg(*otg).empty());
  CHECK(is_notg(*otg));
  const auto w = find_sdw(*otg);
  REQUIRE(w.has_value());
  CHECK(sdw_violation(*otg, *w).empty());
  CHECK_FALSE(terminates(build_dynamics(otg->game, DynamicsKind::PC).graph));
  CHECK_FALSE(fair_pc(otg->game));
}

TEST_CASE("three-node gadget has a fair cycle but no two-player minor pattern") {
  const auto otg = otg_from_game(testing::fixture("bad_gadget.json"));
  REQUIRE(otg.has_value());
  CHECK(validate_otg(*otg).empty());
  CHECK(is_notg(*otg));
  CHECK(fair_pc(otg->game));
  const auto w = find_sdw(*otg);
  REQUIRE(w.has_value());
  CHECK(w->pivots.size() == 3);
  CHECK_FALSE(find_dis_minor(otg->game).found);
}

TEST_CASE("generated routing games satisfy the axioms") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    OtgShape shape;
    shape.neighbour = seed % 2 == 0;
    shape.max_players = 5;
    const auto otg = random_otg(rng, shape);
    CHECK(validate_otg(otg).empty());
    if (shape.neighbour) CHECK(is_notg(otg));
    const auto back = otg_from_game(otg.game);
    REQUIRE(back.has_value());
    CHECK(back->permitted == otg.permitted);
  }
}
