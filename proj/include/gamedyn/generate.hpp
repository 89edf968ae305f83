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

#pragma once

#include <cstdint>
#include <random>

#include "gamedyn/config.hpp"
#include "gamedyn/game.hpp"
#include "gamedyn/minors.hpp"
#include "gamedyn/spp.hpp"

namespace gamedyn {

using Rng = std::mt19937_64;

struct GameShape {
  int max_players = 3;
  /// Non-terminal vertices; every player owns at least one.
  int max_vertices = 4;
  int max_terminals = 2;
  int max_out = 3;
  bool acyclic = false;
  bool labels = false;
  /// Instances above this many positional profiles are redrawn.
  std::uint64_t max_profiles = 256;
  double tie_probability = 0.2;
  double unmentioned_probability = 0.15;
};

/// Random valid game; vertices v1.. and terminals t1... Players rank plays
/// from their own vertices, or from every vertex when the arena is acyclic.
Game random_game(Rng& rng, const GameShape& shape = {});

struct OtgShape {
  int min_players = 2;
  int max_players = 4;
  double direct_probability = 0.7;
  double edge_probability = 0.5;
  /// Preferences depend on the next hop only.
  bool neighbour = false;
};

/// Random valid one-target game: player i owns vi, the target is d.
OneTargetGame random_otg(Rng& rng, const OtgShape& shape = {});

/// Up to max_steps deletions, each valid in the game reached so far. Edge
/// deletions never remove the last edge of a vertex.
DeletionScript random_script(const Game& g, Rng& rng, int max_steps = 3);

/// Up to max_steps deletions of edges dominated by a sibling edge.
DeletionScript random_dominant_script(const Game& g, Rng& rng, int max_steps = 2,
                                      const Limits& limits = {});

}  // namespace gamedyn
