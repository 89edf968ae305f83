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
#include <string>
#include <string_view>
#include <vector>

#include "gamedyn/config.hpp"
#include "gamedyn/game.hpp"
#include "gamedyn/strategy.hpp"

namespace gamedyn {

enum class DynamicsKind { OneStep, P1, BP1, PC, BPC };

/// "1", "p1", "bp1", "pc", "bpc".
std::string_view kind_name(DynamicsKind kind);
std::optional<DynamicsKind> parse_kind(std::string_view text);
bool is_best_reply(DynamicsKind kind);

/// Bit i-1 stands for player i.
using PlayerSet = std::uint64_t;

inline constexpr PlayerSet player_bit(int player) { return PlayerSet{1} << (player - 1); }

struct Arc {
  std::uint32_t to = 0;
  PlayerSet changed = 0;
};

/// Directed graph over dense node ids; arcs carry the players that moved.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t nodes) : adj_(nodes) {}

  std::size_t node_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept;
  const std::vector<Arc>& out(std::uint32_t u) const { return adj_.at(u); }
  bool has_edge(std::uint32_t u, std::uint32_t v) const;
  /// Duplicate arcs are merged by or-ing their player sets.
  void add_edge(std::uint32_t u, std::uint32_t v, PlayerSet changed = 0);

 private:
  std::vector<std::vector<Arc>> adj_;
};

/// A single (vertex, successor) strategy change.
struct Move {
  VertexId vertex = kNoVertex;
  VertexId to = kNoVertex;
};

/// Improving single-vertex moves of every player at sigma (index 0 is
/// player 1). With best_reply only best-reply moves are kept.
std::vector<std::vector<Move>> improving_moves(const Game& g, const Profile& sigma,
                                               bool best_reply);

struct DynamicsGraph {
  DynamicsKind kind = DynamicsKind::P1;
  int players = 0;
  Digraph graph;
  std::vector<std::string> names;
  /// Positional profiles, or history choice vectors for OneStep.
  std::vector<std::vector<VertexId>> states;
  /// Histories indexing the OneStep states; empty otherwise.
  std::vector<std::vector<VertexId>> histories;
};

/// Node ids follow ProfileSpace (or HistorySpace) order. Throws
/// StateSpaceTooLarge, and CyclicArena for OneStep on a cyclic arena.
DynamicsGraph build_dynamics(const Game& g, DynamicsKind kind, const Limits& limits = {});
DynamicsGraph build_one_step(const Game& g, const Limits& limits = {});

/// Complete deterministic graph with labels 0..labels-1.
class LabelledGraph {
 public:
  LabelledGraph() = default;
  LabelledGraph(std::size_t nodes, int labels)
      : nodes_(nodes), labels_(labels), delta_(nodes * static_cast<std::size_t>(labels), 0) {}

  std::size_t node_count() const noexcept { return nodes_; }
  int label_count() const noexcept { return labels_; }
  std::uint32_t next(std::uint32_t node, int label) const {
    return delta_.at(node * static_cast<std::size_t>(labels_) + label);
  }
  void set(std::uint32_t node, int label, std::uint32_t to) {
    delta_.at(node * static_cast<std::size_t>(labels_) + label) = to;
  }

  std::vector<std::string> names;

 private:
  std::size_t nodes_ = 0;
  int labels_ = 0;
  std::vector<std::uint32_t> delta_;
};

/// Belief dynamics. Node k stores an n-by-n matrix: row j is the profile
/// believed by player j, as per-player strategy indices (entry j*n+i is
/// player j's belief about player i). Label 0 shares knowledge, label l
/// applies player l's best-reply update under its own belief.
struct BeliefGraph {
  int players = 0;
  LabelledGraph graph;
  std::vector<std::vector<std::uint32_t>> matrices;
  std::vector<bool> agreeing;
};

/// Per-player positional strategies, each a choice vector over
/// vertices_of(i) enumerated lexicographically.
std::vector<std::vector<VertexId>> player_strategies(const Game& g, int player);

/// Throws StateSpaceTooLarge, NonDeterministicBestReply.
BeliefGraph build_belief_graph(const Game& g, const Limits& limits = {});

}  // namespace gamedyn
