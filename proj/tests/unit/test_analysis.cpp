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
#include <random>
#include <set>

#include "doctest.h"
#include "gamedyn/analysis.hpp"
#include "gamedyn/generate.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gamedyn;

namespace {

std::set<std::string> names_of(const DynamicsGraph& dg, const std::vector<NodeId>& nodes) {
  std::set<std::string> out;
  for (NodeId n : nodes) out.insert(dg.names[n]);
  return out;
}

Digraph random_digraph(std::mt19937_64& rng, std::size_t n, int players, double p) {
  Digraph g(n);
  std::bernoulli_distribution keep(p);
  std::uniform_int_distribution<int> who(1, (1 << players) - 1);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = 0; v < n; ++v)
      if (u != v && keep(rng)) g.add_edge(u, v, static_cast<PlayerSet>(who(rng)));
  return g;
}

}  // namespace

TEST_CASE("termination and equilibria of the disagree game") {
  const Game g = testing::fixture("gdis.json");
  const auto p1 = build_dynamics(g, DynamicsKind::P1);
  const auto pc = build_dynamics(g, DynamicsKind::PC);
  CHECK(terminates(p1.graph));
  CHECK_FALSE(terminates(pc.graph));
  CHECK(names_of(p1, equilibria(p1.graph)) == std::set<std::string>{"s1c2", "c1s2"});
  CHECK(names_of(pc, equilibria(pc.graph)) == std::set<std::string>{"s1c2", "c1s2"});
  const auto w = find_cycle(pc.graph);
  REQUIRE(w.has_value());
  CHECK(validate_cycle(pc.graph, *w));
  CHECK(names_of(pc, w->cycle) == std::set<std::string>{"c1c2", "s1s2"});
}

TEST_CASE("the concurrent disagree cycle is fair") {
  const auto pc = build_dynamics(testing::fixture("gdis.json"), DynamicsKind::PC);
  const auto r = find_fair_cycle(pc.graph, pc.players);
  REQUIRE(r.fair);
  CHECK(validate_fairness(pc.graph, pc.players, r));
  CHECK(r.per_player == std::vector<FairClause>{FairClause::Switches, FairClause::Switches});
  const auto p1 = build_dynamics(testing::fixture("gdis.json"), DynamicsKind::P1);
  CHECK_FALSE(find_fair_cycle(p1.graph, p1.players).fair);
}

TEST_CASE("third-route game: concurrent dynamics loops, best reply terminates") {
  const Game g = testing::fixture("fig3.json");
  CHECK_FALSE(terminates(build_dynamics(g, DynamicsKind::PC).graph));
  CHECK(terminates(build_dynamics(g, DynamicsKind::BPC).graph));
}

TEST_CASE("three-cycle game has a cycle but no fair cycle") {
  const Game g = testing::fixture("fig4.json");
  const auto pc = build_dynamics(g, DynamicsKind::PC);
  CHECK_FALSE(terminates(pc.graph));
  const auto r = find_fair_cycle(pc.graph, pc.players);
  CHECK_FALSE(r.fair);
  REQUIRE_FALSE(r.blocked.empty());
  bool names_three = false;
  for (const auto& b : r.blocked) {
    CHECK(b.component.size() > 1);
    names_three = names_three || std::find(b.players.begin(), b.players.end(), 3) != b.players.end();
  }
  CHECK(names_three);
}

TEST_CASE("dominated-edge game contains the listed eight-step cycle") {
  const auto pc = build_dynamics(testing::fixture("fig5.json"), DynamicsKind::PC);
  const std::vector<std::string> seq{"v1>v2,v2>vbot,v3>vbot", "v1>v2,v2>v3,v3>vbot", "v1>vbot,v2>v3,v3>vbot",
                                     "v1>vbot,v2>v3,v3>v1",   "v1>v4,v2>v3,v3>v1",   "v1>v4,v2>vbot,v3>v1",
                                     "v1>v4,v2>vbot,v3>vbot", "v1>v2,v2>vbot,v3>vbot"};
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) CHECK(testing::edge(pc, seq[i], seq[i + 1]));
  CHECK(seq.front() == seq.back());
  CHECK_FALSE(terminates(build_dynamics(testing::fixture("fig5.json"), DynamicsKind::PC).graph));
}

TEST_CASE("fairness clauses on a hand-built graph") {
  // 0 <-> 1 switched by player 1; player 2 can leave from 0 to the sink 2.
  Digraph g(3);
  g.add_edge(0, 1, player_bit(1));
  g.add_edge(1, 0, player_bit(1));
  g.add_edge(0, 2, player_bit(2));
  const auto clauses = fairness_clauses(g, 2, {0, 1});
  CHECK(clauses == std::vector<FairClause>{FairClause::Switches, FairClause::Disabled});
  CHECK(find_fair_cycle(g, 2).fair);
  g.add_edge(1, 2, player_bit(2));
  CHECK_FALSE(find_fair_cycle(g, 2).fair);
  CHECK(fair_clause_name(FairClause::Blocked) == "blocked");
}

TEST_CASE("graph algorithms agree with brute force on random digraphs") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 1 + i % 9;
    const int players = 1 + i % 3;
    const Digraph g = random_digraph(rng, n, players, 0.1 + 0.05 * (i % 6));
    CHECK(terminates(g) == !oracle::has_cycle(g));
    const auto r = find_fair_cycle(g, players);
    CHECK(r.fair == oracle::has_fair_cycle(g, players));
    if (r.fair) CHECK(validate_fairness(g, players, r));
    if (auto w = find_cycle(g)) CHECK(validate_cycle(g, *w));
    const auto reach = oracle::reach(g);
    for (const auto& scc : strongly_connected_components(g))
      for (NodeId a : scc)
        for (NodeId b : scc) CHECK((a == b || (reach[a].count(b) && reach[b].count(a))));
    std::size_t covered = 0;
    for (const auto& scc : strongly_connected_components(g)) covered += scc.size();
    CHECK(covered == n);
    for (NodeId e : equilibria(g)) CHECK(g.out(e).empty());
  }
}

TEST_CASE("belief graph analysis of the disagree game") {
  const auto bg = build_belief_graph(testing::fixture("gdis.json"));
  CHECK(sinks(bg.graph).size() == 2);
  CHECK(check_diamond(bg.graph).holds);
  const auto c = find_lfair_cycle(bg.graph);
  REQUIRE(c.has_value());
  CHECK(validate_lfair_cycle(bg.graph, *c));
  CHECK(std::set<NodeId>(c->nodes.begin(), c->nodes.end()).size() > 1);
  CHECK(std::set<int>(c->labels.begin(), c->labels.end()) == std::set<int>{0, 1, 2});
  CHECK(reachable_two_sinks(bg.graph).has_value());
}

TEST_CASE("labelled-cycle validation rejects a broken replay") {
  const auto bg = build_belief_graph(testing::fixture("gdis.json"));
  auto c = find_lfair_cycle(bg.graph);
  REQUIRE(c.has_value());
  c->labels.front() = (c->labels.front() + 1) % 3;
  CHECK_FALSE(validate_lfair_cycle(bg.graph, *c));
}
