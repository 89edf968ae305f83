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

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gamedyn/config.hpp"
#include "gamedyn/game.hpp"
#include "gamedyn/minors.hpp"
#include "gamedyn/strategy.hpp"

namespace gamedyn {

/// Game in which every player owns one vertex and routes to a single
/// terminal, with explicit permitted paths per player.
struct OneTargetGame {
  Game game;
  /// kNoVertex unless the arena has exactly one terminal.
  VertexId target = kNoVertex;
  /// Vertex owned by player i at index i-1, or kNoVertex.
  std::vector<VertexId> vertex_of;
  /// Finite plays, per player (index i-1).
  std::vector<std::set<Play>> permitted;
};

/// Wraps a game and explicit permitted sets without checking the axioms.
OneTargetGame make_otg(Game g, std::vector<std::set<Play>> permitted);

/// Derives permitted sets from the preferences: a finite positional play
/// from the player's vertex is permitted when it is mentioned and strictly
/// above every infinite positional play from that vertex. Returns nullopt
/// when the arena shape rules out a one-target game.
std::optional<OneTargetGame> otg_from_game(const Game& g);

enum class OtgAxiom {
  SingleTarget,
  OneVertexPerPlayer,
  PermittedShape,
  ForbiddenBelowPermitted,
  ForbiddenPlateau,
  SameNextHop,
  SuffixClosure,
};

std::string_view otg_axiom_name(OtgAxiom a);

struct OtgDiagnostic {
  OtgAxiom axiom;
  std::string witness;
};

std::vector<OtgDiagnostic> validate_otg(const OneTargetGame& otg);
std::vector<OtgDiagnostic> validate_otg(const Game& g, const std::vector<std::set<Play>>& permitted);

/// Positional plays from the player's vertex that are not permitted.
std::vector<Play> forbidden_plays(const OneTargetGame& otg, int player);

bool is_notg(const OneTargetGame& otg);

/// Pivots u_i, direct paths pi_i, and connecting paths h_i. h_i starts at
/// u_i and stops right before u_{i+1}, so h_i pi_{i+1} is a path.
struct DisputeWheel {
  std::vector<VertexId> pivots;
  std::vector<Play> direct;
  std::vector<std::vector<VertexId>> connecting;

  bool operator==(const DisputeWheel&) const = default;
};

/// Conditions (i)-(iv) of a dispute wheel.
bool is_dispute_wheel(const OneTargetGame& otg, const DisputeWheel& w);

/// Empty when the wheel satisfies both strong conditions, otherwise the
/// first violation.
std::string sdw_violation(const OneTargetGame& otg, const DisputeWheel& w);

/// Cycle search in the dispute digraph; exhaustive. The wheel is rotated
/// to start at its lowest pivot.
std::optional<DisputeWheel> find_dispute_wheel(const OneTargetGame& otg);

/// Enumerates wheels with pairwise distinct pivots. Throws
/// SearchBudgetExceeded.
std::optional<DisputeWheel> find_sdw(const OneTargetGame& otg, const Limits& limits = {});

struct SdwMinor {
  Game game;
  DeletionScript script;
  /// sigma1 sends every pivot towards the next one, sigma2 to the target.
  Profile sigma1;
  Profile sigma2;
};

/// Throws InvalidSDW when the wheel fails re-verification or the minor does
/// not exhibit the sigma1 <-> sigma2 cycle.
SdwMinor extract_sdw_minor(const OneTargetGame& otg, const DisputeWheel& w);

/// Route of every player under sigma: the outcome from its vertex when that
/// play is permitted, the empty play otherwise.
std::vector<Play> path_assignment(const OneTargetGame& otg, const Profile& sigma);

/// Number of distinct path assignments among the given profiles.
std::size_t count_assignments(const OneTargetGame& otg, const std::vector<Profile>& profiles);

enum class SafetyStatus {
  SafeNoDW,
  SafeModelChecked,
  UnsafeSDW,
  UnsafeMultiEquilibria,
  UnsafeModelChecked,
  UnknownStructural,
};

enum class SafetyMode { Structural, Exact, Both };

std::string_view safety_status_name(SafetyStatus s);
std::string_view safety_mode_name(SafetyMode m);
std::optional<SafetyMode> parse_safety_mode(std::string_view text);
bool is_safe(SafetyStatus s);
bool is_unsafe(SafetyStatus s);

struct SafetyVerdict {
  SafetyStatus status = SafetyStatus::UnknownStructural;
  std::string method;
  std::optional<SafetyStatus> structural;
  std::optional<SafetyStatus> exact;
  /// Dispute wheel behind UnsafeSDW, or the wheel that blocked SafeNoDW.
  std::optional<DisputeWheel> wheel;
  /// Fair best-reply cycle (profiles) certifying UnsafeSDW or found by the
  /// exact check.
  std::vector<Profile> cycle;
  /// Best-reply equilibria when they were counted.
  std::vector<Profile> equilibria;
};

/// Throws StateSpaceTooLarge (exact part) and Inconsistent.
SafetyVerdict safety_verdict(const OneTargetGame& otg, SafetyMode mode, const Limits& limits = {});

/// {"origin": id, "nodes": {id: {"paths": [[...], ...]}}, "extra_edges": [[u,v], ...]}.
/// Throws Syntax, UnknownVertex, Validation, SuffixClosureRepairNeeded.
OneTargetGame parse_spp(std::string_view text, bool complete_suffixes = false);

}  // namespace gamedyn
