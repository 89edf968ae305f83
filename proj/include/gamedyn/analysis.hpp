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
#include <optional>
#include <string_view>
#include <vector>

#include "gamedyn/dynamics.hpp"

namespace gamedyn {

using NodeId = std::uint32_t;

/// Lasso-shaped witness of an infinite path: path_to_cycle leads to
/// cycle.front(), and cycle.back() has an edge back to cycle.front().
struct CycleWitness {
  std::vector<NodeId> path_to_cycle;
  std::vector<NodeId> cycle;
};

bool validate_cycle(const Digraph& g, const CycleWitness& w);

bool terminates(const Digraph& g);
std::optional<CycleWitness> find_cycle(const Digraph& g);

/// Nodes with no outgoing edge, ascending.
std::vector<NodeId> equilibria(const Digraph& g);

/// Tarjan components; each sorted ascending, listed in order of their
/// smallest node.
std::vector<std::vector<NodeId>> strongly_connected_components(const Digraph& g);

enum class FairClause {
  /// Some edge of the cycle changes the player's strategy.
  Switches,
  /// Some node of the cycle has no outgoing edge changing the player.
  Disabled,
  /// Neither: the player can always switch but never does.
  Blocked,
};

std::string_view fair_clause_name(FairClause c);

struct BlockedComponent {
  std::vector<NodeId> component;
  std::vector<int> players;
};

struct FairnessReport {
  bool fair = false;
  std::optional<CycleWitness> witness;
  /// One clause per player (index 0 is player 1) on the witness cycle.
  std::vector<FairClause> per_player;
  /// For every cyclic component that fails the fairness test, the players
  /// that are enabled at every node yet never switch inside it.
  std::vector<BlockedComponent> blocked;
};

/// Clause of each player on a closed walk.
std::vector<FairClause> fairness_clauses(const Digraph& g, int players,
                                         const std::vector<NodeId>& cycle);

FairnessReport find_fair_cycle(const Digraph& g, int players);

/// Replays the witness and re-checks every per-player clause.
bool validate_fairness(const Digraph& g, int players, const FairnessReport& r);

/// Nodes whose every label is a self-loop.
std::vector<NodeId> sinks(const LabelledGraph& g);

struct TwoSinks {
  NodeId from = 0;
  NodeId first = 0;
  NodeId second = 0;
};

std::optional<TwoSinks> reachable_two_sinks(const LabelledGraph& g);

struct DiamondResult {
  bool holds = true;
  /// (v, a, b) with Reach(delta(v,a)) and Reach(delta(delta(v,b),a)) disjoint.
  NodeId node = 0;
  int a = 0;
  int b = 0;
};

DiamondResult check_diamond(const LabelledGraph& g);

/// nodes[k] goes to nodes[(k+1) % size] under labels[k].
struct LabelledCycle {
  std::vector<NodeId> nodes;
  std::vector<int> labels;
};

/// A non-constant cycle using every label, if any.
std::optional<LabelledCycle> find_lfair_cycle(const LabelledGraph& g);

bool validate_lfair_cycle(const LabelledGraph& g, const LabelledCycle& c);

}  // namespace gamedyn
