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

#include "gamedyn/relations.hpp"

#include <deque>

namespace gamedyn {

Relation::Relation(std::size_t left, std::size_t right)
    : left_(left), right_(right), words_((right + 63) / 64), bits_(left * words_, 0) {}

bool Relation::contains(NodeId a, NodeId b) const {
  if (a >= left_ || b >= right_) return false;
  return bits_[a * words_ + b / 64] >> (b % 64) & 1;
}

void Relation::insert(NodeId a, NodeId b) {
  bits_.at(a * words_ + b / 64) |= std::uint64_t{1} << (b % 64);
}

void Relation::erase(NodeId a, NodeId b) {
  bits_.at(a * words_ + b / 64) &= ~(std::uint64_t{1} << (b % 64));
}

std::size_t Relation::size() const {
  std::size_t n = 0;
  for (auto w : bits_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

bool Relation::in_domain(NodeId a) const {
  for (std::size_t w = 0; w < words_; ++w)
    if (bits_[a * words_ + w]) return true;
  return false;
}

std::vector<NodeId> Relation::domain() const {
  std::vector<NodeId> out;
  for (NodeId a = 0; a < left_; ++a)
    if (in_domain(a)) out.push_back(a);
  return out;
}

std::vector<NodeId> Relation::image(NodeId a) const {
  std::vector<NodeId> out;
  for (NodeId b = 0; b < right_; ++b)
    if (contains(a, b)) out.push_back(b);
  return out;
}

std::vector<std::pair<NodeId, NodeId>> Relation::pairs() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (NodeId a = 0; a < left_; ++a)
    for (NodeId b : image(a)) out.emplace_back(a, b);
  return out;
}

Relation Relation::inverse() const {
  Relation r(right_, left_);
  for (const auto& [a, b] : pairs()) r.insert(b, a);
  return r;
}

Relation Relation::compose(const Relation& next) const {
  Relation r(left_, next.right_);
  for (const auto& [a, b] : pairs()) {
    if (b >= next.left_) continue;
    for (std::size_t w = 0; w < r.words_; ++w) r.bits_[a * r.words_ + w] |= next.bits_[b * next.words_ + w];
  }
  return r;
}

Relation Relation::identity(std::size_t n) {
  Relation r(n, n);
  for (NodeId a = 0; a < n; ++a) r.insert(a, a);
  return r;
}

namespace {

bool matched(const Digraph& right, const Relation& r, NodeId u, NodeId v_left) {
  for (const Arc& a : right.out(u))
    if (r.contains(v_left, a.to)) return true;
  return false;
}

}  // namespace

SimulationCheck is_partial_simulation(const Digraph& left, const Digraph& right, const Relation& r) {
  if (r.left_size() != left.node_count() || r.right_size() != right.node_count())
    return SimulationCheck{false, 0, 0, 0};
  for (NodeId up = 0; up < left.node_count(); ++up) {
    if (!r.in_domain(up)) continue;
    for (const Arc& e : left.out(up)) {
      if (!r.in_domain(e.to)) continue;
      for (NodeId u : r.image(up))
        if (!matched(right, r, u, e.to)) return SimulationCheck{false, up, e.to, u};
    }
  }
  return SimulationCheck{};
}

SimulationCheck is_simulation(const Digraph& left, const Digraph& right, const Relation& r) {
  if (r.left_size() != left.node_count() || r.right_size() != right.node_count())
    return SimulationCheck{false, 0, 0, 0};
  for (NodeId up = 0; up < left.node_count(); ++up)
    if (!r.in_domain(up)) return SimulationCheck{false, up, up, 0};
  return is_partial_simulation(left, right, r);
}

bool is_bisimulation(const Digraph& left, const Digraph& right, const Relation& r) {
  return is_simulation(left, right, r).holds && is_simulation(right, left, r.inverse()).holds;
}

LargestSimulation largest_simulation(const Digraph& left, const Digraph& right) {
  Relation r(left.node_count(), right.node_count());
  for (NodeId a = 0; a < left.node_count(); ++a)
    for (NodeId b = 0; b < right.node_count(); ++b) r.insert(a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId up = 0; up < left.node_count(); ++up) {
      for (NodeId u = 0; u < right.node_count(); ++u) {
        if (!r.contains(up, u)) continue;
        for (const Arc& e : left.out(up)) {
          if (!matched(right, r, u, e.to)) {
            r.erase(up, u);
            changed = true;
            break;
          }
        }
      }
    }
  }
  LargestSimulation out;
  out.full_domain = true;
  for (NodeId a = 0; a < left.node_count(); ++a)
    if (!r.in_domain(a)) out.full_domain = false;
  out.relation = std::move(r);
  return out;
}

Digraph transitive_closure(const Digraph& g) {
  Digraph out(g.node_count());
  for (NodeId s = 0; s < g.node_count(); ++s) {
    std::vector<bool> seen(g.node_count(), false);
    std::deque<NodeId> queue;
    for (const Arc& a : g.out(s))
      if (!seen[a.to]) {
        seen[a.to] = true;
        queue.push_back(a.to);
      }
    while (!queue.empty()) {
      const NodeId v = queue.front();
      queue.pop_front();
      out.add_edge(s, v);
      for (const Arc& a : g.out(v))
        if (!seen[a.to]) {
          seen[a.to] = true;
          queue.push_back(a.to);
        }
    }
  }
  return out;
}

}  // namespace gamedyn
