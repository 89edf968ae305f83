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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gamedyn/config.hpp"
#include "gamedyn/dynamics.hpp"
#include "gamedyn/game.hpp"
#include "gamedyn/relations.hpp"

namespace gamedyn {

struct DeletionStep {
  enum class Kind { Edge, Vertex };
  Kind kind = Kind::Edge;
  std::string from;
  /// Target of an edge step; empty for vertex steps.
  std::string to;

  static DeletionStep edge(std::string u, std::string v) {
    return DeletionStep{Kind::Edge, std::move(u), std::move(v)};
  }
  static DeletionStep vertex(std::string v) { return DeletionStep{Kind::Vertex, std::move(v), {}}; }

  bool operator==(const DeletionStep&) const = default;
};

using DeletionScript = std::vector<DeletionStep>;

/// [{"edge":[u,v]}, {"vertex":v}, ...]
DeletionScript parse_script(std::string_view text);
std::string script_to_json(const DeletionScript& s);
std::string step_to_string(const DeletionStep& s);

enum class NotDeletableReason { MultipleSuccessors, NoSuccessor, PredecessorConflict };

std::string_view not_deletable_reason_name(NotDeletableReason r);

/// Why v cannot be deleted, or nullopt when it can.
std::optional<NotDeletableReason> deletion_blocker(const Game& g, VertexId v);

/// Throws UnknownEdge.
Game delete_edge(const Game& g, VertexId u, VertexId v);
/// Throws NotDeletable.
Game delete_vertex(const Game& g, VertexId v);

struct MinorResult {
  Game game;
  /// One line per applied step.
  std::vector<std::string> provenance;
  /// Vertex of the source game for every vertex of the minor.
  std::vector<VertexId> origin;
  /// Path of the source game behind every edge (u,v) of the minor.
  std::map<std::pair<VertexId, VertexId>, std::vector<VertexId>> edge_origin;
};

/// Throws ScriptStepFailed naming the first failing step.
MinorResult apply_script(const Game& g, const DeletionScript& s);

/// Constructive simulation of the minor's positional dynamics graph by the
/// source game's one: sigma' is related to sigma when sigma follows, from
/// every decision vertex of the minor, the source path of the edge chosen
/// by sigma', and every squeezed vertex points to its successor at deletion
/// time. Node ids follow ProfileSpace order in both games.
Relation minor_witness_relation(const Game& source, const MinorResult& minor);

/// Throws SourceMismatch, UnknownEdge, StateSpaceTooLarge.
bool is_dominated(const Game& g, std::pair<VertexId, VertexId> e1,
                  std::pair<VertexId, VertexId> e2, const Limits& limits = {});

/// True when every edge step of the script deletes an edge dominated (in the
/// game reached so far) by a sibling edge.
bool is_dominant_script(const Game& g, const DeletionScript& s, const Limits& limits = {});

/// Three vertices a, b, t with edges a->b, b->a, a->t, b->t, a and b owned by
/// different players, each preferring lasso < direct < indirect.
bool is_dis_game(const Game& g);

struct DisMinorResult {
  bool found = false;
  DeletionScript script;
  /// "identity", "sdw" or "search".
  std::string method;
  std::size_t expansions = 0;
};

/// Throws SearchBudgetExceeded when the search stops before exhausting the
/// candidates.
DisMinorResult find_dis_minor(const Game& g, const Limits& limits = {});

/// Tries one embedding: a->b along ab, b->a along ba, a->t along at, b->t
/// along bt (vertex paths of g). Returns the script when it yields a DIS game.
std::optional<DeletionScript> dis_script_for(const Game& g, const std::vector<VertexId>& ab,
                                             const std::vector<VertexId>& ba,
                                             const std::vector<VertexId>& at,
                                             const std::vector<VertexId>& bt);

}  // namespace gamedyn
