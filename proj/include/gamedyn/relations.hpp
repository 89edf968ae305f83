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
#include <utility>
#include <vector>

#include "gamedyn/analysis.hpp"

namespace gamedyn {

/// Binary relation between the nodes of a simulated graph G' (left) and a
/// simulating graph G (right), stored as a bit matrix.
class Relation {
 public:
  Relation() = default;
  Relation(std::size_t left, std::size_t right);

  std::size_t left_size() const noexcept { return left_; }
  std::size_t right_size() const noexcept { return right_; }

  bool contains(NodeId a, NodeId b) const;
  void insert(NodeId a, NodeId b);
  void erase(NodeId a, NodeId b);
  std::size_t size() const;
  bool in_domain(NodeId a) const;
  std::vector<NodeId> domain() const;
  std::vector<NodeId> image(NodeId a) const;
  std::vector<std::pair<NodeId, NodeId>> pairs() const;

  Relation inverse() const;
  /// (a,c) such that (a,b) in this and (b,c) in next.
  Relation compose(const Relation& next) const;

  static Relation identity(std::size_t n);

  bool operator==(const Relation&) const = default;

 private:
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Outcome of a (partial) simulation check. When it fails, the edge
/// (from', to') of G' is in the checked domain, from' is related to from,
/// and no successor of from is related to to'.
struct SimulationCheck {
  bool holds = true;
  NodeId from_left = 0;
  NodeId to_left = 0;
  NodeId from_right = 0;
};

SimulationCheck is_partial_simulation(const Digraph& left, const Digraph& right, const Relation& r);
/// A partial simulation whose domain is every node of the left graph. A
/// failure with from_left == to_left and holds false on an empty image
/// reports the first node outside the domain.
SimulationCheck is_simulation(const Digraph& left, const Digraph& right, const Relation& r);
bool is_bisimulation(const Digraph& left, const Digraph& right, const Relation& r);

struct LargestSimulation {
  Relation relation;
  /// True iff the relation covers every node of the left graph, that is,
  /// the right graph simulates the left one.
  bool full_domain = false;
};

/// Greatest fixpoint of pair removal from the full product: a pair
/// (u', u) survives while every successor of u' is matched by some
/// successor of u.
LargestSimulation largest_simulation(const Digraph& left, const Digraph& right);

/// Edge (a,b) iff a non-empty path leads from a to b.
Digraph transitive_closure(const Digraph& g);

}  // namespace gamedyn
