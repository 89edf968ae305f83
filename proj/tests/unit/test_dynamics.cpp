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
#include "gamedyn/error.hpp"
#include "gamedyn/generate.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gamedyn;
using testing::edge;

namespace {

std::set<std::pair<std::string, std::string>> named_edges(const DynamicsGraph& dg) {
  std::set<std::pair<std::string, std::string>> out;
  for (NodeId u = 0; u < dg.graph.node_count(); ++u)
    for (const Arc& a : dg.graph.out(u)) out.insert({dg.names[u], dg.names[a.to]});
  return out;
}

}  // namespace

TEST_CASE("disagree one-player-per-step dynamics") {
  const auto dg = build_dynamics(testing::fixture("gdis.json"), DynamicsKind::P1);
  CHECK(std::set<std::string>(dg.names.begin(), dg.names.end()) ==
        std::set<std::string>{"c1c2", "s1c2", "c1s2", "s1s2"});
  CHECK(named_edges(dg) == std::set<std::pair<std::string, std::string>>{
                               {"c1c2", "s1c2"}, {"c1c2", "c1s2"}, {"s1s2", "s1c2"}, {"s1s2", "c1s2"}});
}

TEST_CASE("disagree concurrent dynamics adds the two joint switches") {
  const auto dg = build_dynamics(testing::fixture("gdis.json"), DynamicsKind::PC);
  CHECK(named_edges(dg) == std::set<std::pair<std::string, std::string>>{{"c1c2", "s1c2"},
                                                                          {"c1c2", "c1s2"},
                                                                          {"s1s2", "s1c2"},
                                                                          {"s1s2", "c1s2"},
                                                                          {"c1c2", "s1s2"},
                                                                          {"s1s2", "c1c2"}});
  const Arc* joint = nullptr;
  for (const Arc& a : dg.graph.out(testing::node(dg, "c1c2")))
    if (a.to == testing::node(dg, "s1s2")) joint = &a;
  REQUIRE(joint != nullptr);
  CHECK(joint->changed == (player_bit(1) | player_bit(2)));
}

TEST_CASE("best-reply variants coincide on the disagree game") {
  const Game g = testing::fixture("gdis.json");
  CHECK(named_edges(build_dynamics(g, DynamicsKind::BP1)) == named_edges(build_dynamics(g, DynamicsKind::P1)));
  CHECK(named_edges(build_dynamics(g, DynamicsKind::BPC)) == named_edges(build_dynamics(g, DynamicsKind::PC)));
}

TEST_CASE("best reply removes the detour in the third-route game") {
  const Game g = testing::fixture("fig3.json");
  const auto pc = build_dynamics(g, DynamicsKind::PC);
  const auto bpc = build_dynamics(g, DynamicsKind::BPC);
  CHECK(bpc.graph.edge_count() < pc.graph.edge_count());
  for (NodeId u = 0; u < bpc.graph.node_count(); ++u)
    for (const Arc& a : bpc.graph.out(u)) CHECK(pc.graph.has_edge(u, a.to));
}

TEST_CASE("kind names") {
  for (DynamicsKind k : {DynamicsKind::OneStep, DynamicsKind::P1, DynamicsKind::BP1, DynamicsKind::PC,
                         DynamicsKind::BPC})
    CHECK(parse_kind(kind_name(k)) == k);
  CHECK_FALSE(parse_kind("p2").has_value());
  CHECK(is_best_reply(DynamicsKind::BPC));
  CHECK_FALSE(is_best_reply(DynamicsKind::PC));
}

TEST_CASE("positional dynamics agree with the reference on random games") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    GameShape shape;
    shape.labels = seed % 2 == 0;
    const Game g = random_game(rng, shape);
    for (DynamicsKind k : {DynamicsKind::P1, DynamicsKind::BP1, DynamicsKind::PC, DynamicsKind::BPC}) {
      const auto dg = build_dynamics(g, k);
      CHECK(dg.graph.node_count() == profile_count(g));
      CHECK(oracle::edges_of(dg) == oracle::positional(g, k));
    }
  }
}

TEST_CASE("one-step dynamics agree with the reference on acyclic arenas") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    GameShape shape;
    shape.acyclic = true;
    shape.max_vertices = 3;
    const Game g = random_game(rng, shape);
    DynamicsGraph dg;
    try {
      dg = build_one_step(g);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::StateSpaceTooLarge);
      continue;
    }
    const auto ref = oracle::one_step(g);
    CHECK(oracle::one_step_edges_of(dg, ref) == ref.edges);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("one-step dynamics needs an acyclic arena") {
  try {
    build_one_step(testing::fixture("gdis.json"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CyclicArena);
  }
}

TEST_CASE("state-space guard") {
  Limits tight;
  tight.profile_guard = 2;
  try {
    build_dynamics(testing::fixture("gdis.json"), DynamicsKind::PC, tight);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StateSpaceTooLarge);
  }
}

TEST_CASE("belief graph of the disagree game") {
  const Game g = testing::fixture("gdis.json");
  const auto bg = build_belief_graph(g);
  CHECK(bg.players == 2);
  CHECK(bg.graph.node_count() == 16);
  CHECK(bg.graph.label_count() == 3);
  CHECK(player_strategies(g, 1).size() == 2);
  std::size_t agreeing = 0;
  for (bool a : bg.agreeing) agreeing += a;
  CHECK(agreeing == 4);
  for (NodeId n = 0; n < bg.graph.node_count(); ++n)
    for (int l = 0; l < 3; ++l) CHECK(bg.graph.next(n, l) < bg.graph.node_count());
  // The knowledge update always lands on an agreeing matrix.
  for (NodeId n = 0; n < bg.graph.node_count(); ++n) CHECK(bg.agreeing[bg.graph.next(n, 0)]);
}
