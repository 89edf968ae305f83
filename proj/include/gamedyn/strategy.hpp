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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gamedyn/config.hpp"
#include "gamedyn/game.hpp"

namespace gamedyn {

/// Positional profile: choice[v] is the successor picked at v, or
/// kNoVertex when v is terminal.
using Profile = std::vector<VertexId>;

/// Mixed-radix indexing of all positional profiles. The first decision
/// vertex is the most significant digit and successors are ordered by id.
class ProfileSpace {
 public:
  ProfileSpace() = default;
  explicit ProfileSpace(const Game& g);

  /// Saturates at UINT64_MAX.
  std::uint64_t size() const noexcept { return size_; }
  Profile at(std::uint64_t index) const;
  std::uint64_t index_of(const Profile& p) const;
  const std::vector<VertexId>& decision_vertices() const noexcept { return decision_; }

 private:
  std::vector<VertexId> decision_;
  std::vector<std::vector<VertexId>> options_;
  std::vector<std::uint64_t> weight_;
  std::size_t vertex_count_ = 0;
  std::uint64_t size_ = 1;
};

std::uint64_t profile_count(const Game& g);

/// All positional profiles in ProfileSpace order. Throws StateSpaceTooLarge.
std::vector<Profile> enumerate_profiles(const Game& g, const Limits& limits = {});

bool is_profile(const Game& g, const Profile& p);

Play outcome(const Game& g, const Profile& sigma, VertexId v);

/// Single-vertex changes available to player i (improvement not checked).
std::vector<std::pair<VertexId, Profile>> deviations_p1(const Game& g, const Profile& sigma,
                                                        int player);

/// Successors of v whose one-vertex deviation yields an outcome from v that
/// is maximal for the owner of v. Sorted by id.
std::vector<VertexId> best_replies(const Game& g, const Profile& sigma, VertexId v);

/// True when switching v to w strictly improves the outcome from v for the
/// owner of v.
bool improves(const Game& g, const Profile& sigma, VertexId v, VertexId w);

/// Compact name: concatenated edge labels when every choice edge is
/// labelled, otherwise "v>w" pairs joined by ",".
std::string profile_name(const Game& g, const Profile& sigma);

/// Player i's part of a profile, as the choices at vertices_of(i).
std::vector<VertexId> restrict_to(const Game& g, const Profile& sigma, int player);

/// Histories of an acyclic arena (every non-maximal path, from any start)
/// and the mixed-radix space of history profiles over them.
class HistorySpace {
 public:
  HistorySpace() = default;
  /// Throws CyclicArena.
  explicit HistorySpace(const Game& g);

  const std::vector<std::vector<VertexId>>& histories() const noexcept { return hist_; }
  std::size_t find(const std::vector<VertexId>& h) const;
  std::uint64_t size() const noexcept { return size_; }
  /// choice[k] is the successor picked after histories()[k].
  std::vector<VertexId> at(std::uint64_t index) const;
  std::uint64_t index_of(const std::vector<VertexId>& choice) const;
  const std::vector<VertexId>& options(std::size_t k) const { return options_.at(k); }

  /// Play obtained by extending histories()[k] with the choices.
  Play outcome(const std::vector<VertexId>& choice, std::size_t k) const;

 private:
  std::vector<std::vector<VertexId>> hist_;
  std::map<std::vector<VertexId>, std::size_t> index_;
  std::vector<std::vector<VertexId>> options_;
  std::vector<std::uint64_t> weight_;
  std::uint64_t size_ = 1;
};

}  // namespace gamedyn
