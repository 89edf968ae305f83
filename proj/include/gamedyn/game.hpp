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

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gamedyn {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// A maximal path of an arena. A finite play keeps its vertices in `stem`
/// and has an empty `loop`; a lasso is `stem` followed by `loop` repeated
/// forever, where `loop.front()` is the vertex entered right after the stem.
struct Play {
  std::vector<VertexId> stem;
  std::vector<VertexId> loop;

  static Play finite(std::vector<VertexId> path) { return Play{std::move(path), {}}; }
  static Play lasso(std::vector<VertexId> stem, std::vector<VertexId> loop) {
    return Play{std::move(stem), std::move(loop)};
  }

  bool is_finite() const noexcept { return loop.empty(); }
  VertexId first() const noexcept { return stem.empty() ? loop.front() : stem.front(); }
  bool empty() const noexcept { return stem.empty() && loop.empty(); }
  bool visits(VertexId v) const;

  auto operator<=>(const Play&) const = default;
  bool operator==(const Play&) const = default;
};

/// Normal form of a lasso: the loop is reduced to its primitive cycle and
/// the stem is the shortest prefix realizing the play. Finite plays are
/// returned unchanged. Idempotent.
Play canonical_form(Play play);

enum class Ordering { Less, Equal, Greater };

std::string_view ordering_name(Ordering o);

/// Ordinal preference over plays: rank classes listed best first, with an
/// implicit bottom class holding every unmentioned play.
class PreferenceOrder {
 public:
  PreferenceOrder() = default;
  explicit PreferenceOrder(std::vector<std::vector<Play>> classes);

  const std::vector<std::vector<Play>>& classes() const noexcept { return classes_; }
  /// 0 is the best class; bottom_rank() for unmentioned plays.
  std::size_t rank(const Play& play) const;
  std::size_t bottom_rank() const noexcept { return classes_.size(); }
  bool mentions(const Play& play) const { return rank_.count(play) != 0; }

 private:
  std::vector<std::vector<Play>> classes_;
  std::map<Play, std::size_t> rank_;
};

struct EdgeDecl {
  VertexId from = kNoVertex;
  VertexId to = kNoVertex;
  std::string label;
};

/// Finite n-player game on a graph. Immutable after construction; the
/// constructor accepts malformed input so that validate_game can report it.
class Game {
 public:
  Game() = default;
  Game(int players, std::vector<std::string> names, std::vector<EdgeDecl> edges,
       std::vector<int> owner, std::vector<PreferenceOrder> preferences);

  int player_count() const noexcept { return players_; }
  std::size_t vertex_count() const noexcept { return names_.size(); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  /// Throws UnknownVertex.
  VertexId require(std::string_view name) const;

  const std::vector<EdgeDecl>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Sorted by vertex id.
  const std::vector<VertexId>& successors(VertexId v) const { return succ_.at(v); }
  const std::vector<VertexId>& predecessors(VertexId v) const { return pred_.at(v); }
  bool has_edge(VertexId u, VertexId v) const;
  std::string_view edge_label(VertexId u, VertexId v) const;
  bool has_edge_labels() const noexcept { return has_labels_; }

  bool is_terminal(VertexId v) const { return succ_.at(v).empty(); }
  /// 1-based player owning v, or 0 when v has no owner.
  int owner(VertexId v) const { return owner_.at(v); }
  const std::vector<int>& owners() const noexcept { return owner_; }
  std::vector<VertexId> vertices_of(int player) const;

  const PreferenceOrder& preference(int player) const { return prefs_.at(player - 1); }
  const std::vector<PreferenceOrder>& preferences() const noexcept { return prefs_; }
  Ordering compare(int player, const Play& a, const Play& b) const;

  /// Consecutive vertices are joined by edges (including the lasso joints).
  bool is_path(const Play& play) const;
  /// is_path and, for finite plays, ends in a terminal vertex.
  bool is_play(const Play& play) const;
  /// Validates and normalizes; throws InvalidPlay or NotMaximal.
  Play canonicalize(Play play) const;

  bool is_acyclic() const;

  std::string play_to_string(const Play& play) const;

 private:
  int players_ = 0;
  std::vector<std::string> names_;
  std::vector<EdgeDecl> edges_;
  std::vector<std::vector<VertexId>> succ_;
  std::vector<std::vector<VertexId>> pred_;
  std::map<std::pair<VertexId, VertexId>, std::string> labels_;
  std::vector<int> owner_;
  std::vector<PreferenceOrder> prefs_;
  std::map<std::string, VertexId, std::less<>> index_;
  bool has_labels_ = false;
};

enum class DiagnosticKind {
  DuplicateVertex,
  UnknownVertex,
  DuplicateEdge,
  MissingOwner,
  OwnerOnTerminal,
  OwnerOutOfRange,
  PreferenceCount,
  InvalidPlay,
  DuplicatePlay,
  NonCanonicalPlay,
};

std::string_view diagnostic_kind_name(DiagnosticKind kind);

struct Diagnostic {
  DiagnosticKind kind;
  std::string witness;

  bool operator==(const Diagnostic&) const = default;
};

std::vector<Diagnostic> validate_game(const Game& g);

/// Parses the JSON game document and validates it. Throws Syntax,
/// UnknownVertex or Validation errors.
Game parse_game(std::string_view text);
std::string game_to_json(const Game& g);

/// Every play reachable from v under some positional profile, canonical and
/// sorted.
std::vector<Play> positional_plays(const Game& g, VertexId v);

inline Ordering compare_plays(const Game& g, int player, const Play& a, const Play& b) {
  return g.compare(player, a, b);
}

}  // namespace gamedyn
