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
#include <set>

#include "doctest.h"
#include "gamedyn/error.hpp"
#include "gamedyn/generate.hpp"
#include "gamedyn/strategy.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gamedyn;

TEST_CASE("profiles of the disagree game") {
  const Game g = testing::fixture("gdis.json");
  CHECK(profile_count(g) == 4);
  const auto all = enumerate_profiles(g);
  REQUIRE(all.size() == 4);
  std::set<std::string> names;
  for (const auto& p : all) {
    CHECK(is_profile(g, p));
    names.insert(profile_name(g, p));
  }
  CHECK(names == std::set<std::string>{"c1c2", "c1s2", "s1c2", "s1s2"});
}

TEST_CASE("outcomes and best replies in the disagree game") {
  const Game g = testing::fixture("gdis.json");
  const VertexId v1 = g.require("v1"), v2 = g.require("v2"), t = g.require("vbot");
  Profile both_cross = enumerate_profiles(g).front();
  both_cross[v1] = v2;
  both_cross[v2] = v1;
  CHECK(outcome(g, both_cross, v1) == Play::lasso({}, {v1, v2}));
  Profile cs = both_cross;
  cs[v2] = t;
  CHECK(outcome(g, cs, v1) == Play::finite({v1, v2, t}));
  CHECK(outcome(g, cs, v2) == Play::finite({v2, t}));
  // Player 2 would rather route through v1, which goes direct only in s1c2.
  CHECK(best_replies(g, cs, v2) == std::vector<VertexId>{t});
  CHECK_FALSE(improves(g, cs, v2, v1));
  CHECK(improves(g, both_cross, v1, t));
  CHECK(restrict_to(g, cs, 1) == std::vector<VertexId>{v2});
  CHECK(deviations_p1(g, cs, 1).size() == 1);
}

TEST_CASE("profile space indexing round trips") {
  const Game g = testing::fixture("fig4.json");
  ProfileSpace space(g);
  CHECK(space.size() == profile_count(g));
  for (std::uint64_t i = 0; i < space.size(); ++i) CHECK(space.index_of(space.at(i)) == i);
}

TEST_CASE("profile guard") {
  const Game g = testing::fixture("fig4.json");
  Limits tight;
  tight.profile_guard = 3;
  CHECK_THROWS_AS(enumerate_profiles(g, tight), Error);
  try {
    enumerate_profiles(g, tight);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StateSpaceTooLarge);
  }
  tight.force = true;
  CHECK(enumerate_profiles(g, tight).size() == profile_count(g));
}

TEST_CASE("outcomes agree with the reference walker on random games") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const Game g = random_game(rng);
    const auto lib = enumerate_profiles(g);
    const auto ref = oracle::profiles(g);
    CHECK(std::set<Profile>(lib.begin(), lib.end()) == std::set<Profile>(ref.begin(), ref.end()));
    for (const auto& p : lib)
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.is_terminal(v)) continue;
        CHECK(outcome(g, p, v) == oracle::walk_outcome(g, p, v));
        const int o = g.owner(v);
        std::size_t best = SIZE_MAX;
        for (VertexId w : g.successors(v)) {
          Profile q = p;
          q[v] = w;
          best = std::min(best, oracle::rank(g, o, oracle::walk_outcome(g, q, v)));
        }
        for (VertexId w : g.successors(v)) {
          Profile q = p;
          q[v] = w;
          const std::size_t r = oracle::rank(g, o, oracle::walk_outcome(g, q, v));
          const auto br = best_replies(g, p, v);
          CHECK((std::find(br.begin(), br.end(), w) != br.end()) == (r == best));
          CHECK(improves(g, p, v, w) == (r < oracle::rank(g, o, oracle::walk_outcome(g, p, v))));
        }
      }
  }
}

TEST_CASE("histories of an acyclic arena") {
  const Game g = testing::fixture("fig2.json");
  HistorySpace hs(g);
  for (const auto& h : hs.histories()) {
    CHECK_FALSE(g.is_terminal(h.back()));
    CHECK(hs.find(h) < hs.histories().size());
  }
  for (std::uint64_t i = 0; i < std::min<std::uint64_t>(hs.size(), 500); ++i) CHECK(hs.index_of(hs.at(i)) == i);
}
