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

#include "gamedyn/analysis.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace gamedyn {

namespace {

constexpr NodeId kNone = std::numeric_limits<NodeId>::max();

struct Components {
  std::vector<NodeId> comp_of;
  /// In completion order, which is a reverse topological order.
  std::vector<std::vector<NodeId>> comps;
};

Components tarjan(const Digraph& g) {
  const std::size_t n = g.node_count();
  Components out;
  out.comp_of.assign(n, kNone);
  std::vector<NodeId> index(n, kNone), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeId> stack;
  std::vector<std::pair<NodeId, std::size_t>> call;
  NodeId counter = 0;
  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != kNone) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next == 0 && index[v] == kNone) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      const auto& arcs = g.out(v);
      if (next < arcs.size()) {
        const NodeId w = arcs[next++].to;
        if (index[w] == kNone) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<NodeId> comp;
        NodeId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.comp_of[w] = static_cast<NodeId>(out.comps.size());
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.comps.push_back(std::move(comp));
      }
      const NodeId done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return out;
}

bool cyclic_component(const Digraph& g, const std::vector<NodeId>& comp) {
  return comp.size() > 1 || g.has_edge(comp.front(), comp.front());
}

/// Shortest path from s to t inside the component (both included).
std::vector<NodeId> path_within(const Digraph& g, const std::vector<NodeId>& comp_of,
                                NodeId comp, NodeId s, NodeId t) {
  std::vector<NodeId> parent(g.node_count(), kNone);
  std::deque<NodeId> queue{s};
  parent[s] = s;
  while (!queue.empty() && parent[t] == kNone) {
    const NodeId v = queue.front();
    queue.pop_front();
    for (const Arc& a : g.out(v)) {
      if (comp_of[a.to] != comp || parent[a.to] != kNone) continue;
      parent[a.to] = v;
      queue.push_back(a.to);
    }
  }
  std::vector<NodeId> path{t};
  while (path.back() != s) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Closed walk through every waypoint (an edge as a pair, or a node with
/// second == kNone). The walk starts at start and has at least one edge.
std::vector<NodeId> closed_walk(const Digraph& g, const Components& c, NodeId start,
                                const std::vector<std::pair<NodeId, NodeId>>& waypoints) {
  const NodeId comp = c.comp_of[start];
  std::vector<NodeId> walk{start};
  auto go = [&](NodeId t) {
    auto p = path_within(g, c.comp_of, comp, walk.back(), t);
    walk.insert(walk.end(), p.begin() + 1, p.end());
  };
  for (const auto& [a, b] : waypoints) {
    bool seen = false;
    for (std::size_t k = 0; k < walk.size() && !seen; ++k)
      seen = walk[k] == a && (b == kNone || (k + 1 < walk.size() && walk[k + 1] == b));
    if (seen) continue;
    go(a);
    if (b != kNone) walk.push_back(b);
  }
  if (walk.size() == 1) {
    for (const Arc& arc : g.out(start)) {
      if (c.comp_of[arc.to] == comp) {
        walk.push_back(arc.to);
        break;
      }
    }
  }
  if (walk.back() == start) {
    walk.pop_back();
  } else {
    go(start);
    walk.pop_back();
  }
  // Drop repetitions of a shorter period.
  for (std::size_t p = 1; p < walk.size(); ++p) {
    if (walk.size() % p != 0) continue;
    bool periodic = true;
    for (std::size_t k = p; k < walk.size() && periodic; ++k) periodic = walk[k] == walk[k - p];
    if (periodic) {
      walk.resize(p);
      break;
    }
  }
  return walk;
}

}  // namespace

bool validate_cycle(const Digraph& g, const CycleWitness& w) {
  if (w.cycle.empty()) return false;
  std::vector<NodeId> seq = w.path_to_cycle;
  seq.insert(seq.end(), w.cycle.begin(), w.cycle.end());
  seq.push_back(w.cycle.front());
  for (NodeId v : seq)
    if (v >= g.node_count()) return false;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!g.has_edge(seq[i], seq[i + 1])) return false;
  return true;
}

std::optional<CycleWitness> find_cycle(const Digraph& g) {
  const std::size_t n = g.node_count();
  std::vector<char> color(n, 0);
  std::vector<std::pair<NodeId, std::size_t>> stack;
  for (NodeId root = 0; root < n; ++root) {
    if (color[root]) continue;
    stack.emplace_back(root, 0);
    color[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& arcs = g.out(v);
      if (next == arcs.size()) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      const NodeId w = arcs[next++].to;
      if (color[w] == 1) {
        CycleWitness cw;
        auto it = std::find_if(stack.begin(), stack.end(), [w](const auto& f) { return f.first == w; });
        for (; it != stack.end(); ++it) cw.cycle.push_back(it->first);
        return cw;
      }
      if (color[w] == 0) {
        color[w] = 1;
        stack.emplace_back(w, 0);
      }
    }
  }
  return std::nullopt;
}

bool terminates(const Digraph& g) { return !find_cycle(g).has_value(); }

std::vector<NodeId> equilibria(const Digraph& g) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (g.out(v).empty()) out.push_back(v);
  return out;
}

std::vector<std::vector<NodeId>> strongly_connected_components(const Digraph& g) {
  auto comps = tarjan(g).comps;
  std::sort(comps.begin(), comps.end());
  return comps;
}

std::string_view fair_clause_name(FairClause c) {
  switch (c) {
    case FairClause::Switches: return "switches";
    case FairClause::Disabled: return "disabled";
    case FairClause::Blocked: return "blocked";
  }
  return "?";
}

namespace {

PlayerSet enabled_at(const Digraph& g, NodeId v) {
  PlayerSet s = 0;
  for (const Arc& a : g.out(v)) s |= a.changed;
  return s;
}

}  // namespace

std::vector<FairClause> fairness_clauses(const Digraph& g, int players,
                                         const std::vector<NodeId>& cycle) {
  std::vector<FairClause> out(static_cast<std::size_t>(players), FairClause::Blocked);
  PlayerSet switched = 0;
  PlayerSet disabled = 0;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const NodeId v = cycle[k];
    const NodeId w = cycle[(k + 1) % cycle.size()];
    for (const Arc& a : g.out(v))
      if (a.to == w) switched |= a.changed;
    disabled |= ~enabled_at(g, v);
  }
  for (int i = 1; i <= players; ++i) {
    if (switched & player_bit(i)) out[i - 1] = FairClause::Switches;
    else if (disabled & player_bit(i)) out[i - 1] = FairClause::Disabled;
  }
  return out;
}

FairnessReport find_fair_cycle(const Digraph& g, int players) {
  FairnessReport report;
  const Components c = tarjan(g);
  const PlayerSet all = players >= 64 ? ~PlayerSet{0} : (PlayerSet{1} << players) - 1;
  // Visit components by smallest node for deterministic output.
  std::vector<std::size_t> order(c.comps.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return c.comps[a].front() < c.comps[b].front(); });
  for (std::size_t k : order) {
    const auto& comp = c.comps[k];
    if (!cyclic_component(g, comp)) continue;
    const auto id = static_cast<NodeId>(k);
    // First internal edge and first disabled node per player.
    std::vector<std::pair<NodeId, NodeId>> edge_for(static_cast<std::size_t>(players), {kNone, kNone});
    std::vector<NodeId> node_for(static_cast<std::size_t>(players), kNone);
    PlayerSet covered = 0;
    for (NodeId v : comp) {
      const PlayerSet en = enabled_at(g, v);
      for (int i = 1; i <= players; ++i) {
        if (!(en & player_bit(i)) && node_for[i - 1] == kNone) node_for[i - 1] = v;
      }
      for (const Arc& a : g.out(v)) {
        if (c.comp_of[a.to] != id) continue;
        for (int i = 1; i <= players; ++i)
          if ((a.changed & player_bit(i)) && edge_for[i - 1].first == kNone) edge_for[i - 1] = {v, a.to};
      }
    }
    std::vector<std::pair<NodeId, NodeId>> waypoints;
    std::vector<int> blocked;
    for (int i = 1; i <= players; ++i) {
      if (edge_for[i - 1].first != kNone) {
        waypoints.push_back(edge_for[i - 1]);
        covered |= player_bit(i);
      } else if (node_for[i - 1] != kNone) {
        waypoints.emplace_back(node_for[i - 1], kNone);
        covered |= player_bit(i);
      } else {
        blocked.push_back(i);
      }
    }
    if ((covered & all) != all) {
      report.blocked.push_back({comp, blocked});
      continue;
    }
    if (!report.fair) {
      report.fair = true;
      CycleWitness w;
      w.cycle = closed_walk(g, c, comp.front(), waypoints);
      report.per_player = fairness_clauses(g, players, w.cycle);
      report.witness = std::move(w);
    }
  }
  return report;
}

bool validate_fairness(const Digraph& g, int players, const FairnessReport& r) {
  if (!r.fair) return !r.witness.has_value();
  if (!r.witness || !validate_cycle(g, *r.witness)) return false;
  const auto clauses = fairness_clauses(g, players, r.witness->cycle);
  if (clauses != r.per_player) return false;
  return std::none_of(clauses.begin(), clauses.end(),
                      [](FairClause f) { return f == FairClause::Blocked; });
}

namespace {

Digraph unlabelled(const LabelledGraph& g) {
  Digraph d(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v)
    for (int a = 0; a < g.label_count(); ++a) d.add_edge(v, g.next(v, a));
  return d;
}

bool is_sink(const LabelledGraph& g, NodeId v) {
  for (int a = 0; a < g.label_count(); ++a)
    if (g.next(v, a) != v) return false;
  return true;
}

using Bits = std::vector<std::uint64_t>;

bool intersects(const Bits& x, const Bits& y) {
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] & y[k]) return true;
  return false;
}

/// For every node, the set of bottom components it can reach, as bits over
/// the bottom-component list.
std::vector<Bits> reachable_bottoms(const Digraph& d, const Components& c,
                                    std::vector<std::size_t>& bottoms) {
  bottoms.clear();
  std::vector<std::size_t> slot(c.comps.size(), kNone);
  for (std::size_t k = 0; k < c.comps.size(); ++k) {
    bool bottom = true;
    for (NodeId v : c.comps[k])
      for (const Arc& a : d.out(v))
        if (c.comp_of[a.to] != k) bottom = false;
    if (bottom) {
      slot[k] = bottoms.size();
      bottoms.push_back(k);
    }
  }
  const std::size_t words = (bottoms.size() + 63) / 64;
  std::vector<Bits> per_comp(c.comps.size(), Bits(words, 0));
  // Completion order lists successors' components first.
  for (std::size_t k = 0; k < c.comps.size(); ++k) {
    if (slot[k] != kNone) per_comp[k][slot[k] / 64] |= std::uint64_t{1} << (slot[k] % 64);
    for (NodeId v : c.comps[k]) {
      for (const Arc& a : d.out(v)) {
        const auto t = c.comp_of[a.to];
        if (t == k) continue;
        for (std::size_t w = 0; w < words; ++w) per_comp[k][w] |= per_comp[t][w];
      }
    }
  }
  std::vector<Bits> out(d.node_count());
  for (NodeId v = 0; v < d.node_count(); ++v) out[v] = per_comp[c.comp_of[v]];
  return out;
}

}  // namespace

std::vector<NodeId> sinks(const LabelledGraph& g) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (is_sink(g, v)) out.push_back(v);
  return out;
}

std::optional<TwoSinks> reachable_two_sinks(const LabelledGraph& g) {
  const Digraph d = unlabelled(g);
  const Components c = tarjan(d);
  std::vector<std::size_t> bottoms;
  const auto reach = reachable_bottoms(d, c, bottoms);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    std::vector<NodeId> found;
    for (std::size_t s = 0; s < bottoms.size() && found.size() < 2; ++s) {
      if (!(reach[v][s / 64] >> (s % 64) & 1)) continue;
      const auto& comp = c.comps[bottoms[s]];
      if (comp.size() == 1 && is_sink(g, comp.front())) found.push_back(comp.front());
    }
    if (found.size() == 2) {
      std::sort(found.begin(), found.end());
      return TwoSinks{v, found[0], found[1]};
    }
  }
  return std::nullopt;
}

DiamondResult check_diamond(const LabelledGraph& g) {
  const Digraph d = unlabelled(g);
  const Components c = tarjan(d);
  std::vector<std::size_t> bottoms;
  // Two reachability sets meet iff they share a reachable bottom component.
  const auto reach = reachable_bottoms(d, c, bottoms);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (int a = 0; a < g.label_count(); ++a) {
      const NodeId x = g.next(v, a);
      for (int b = 0; b < g.label_count(); ++b) {
        const NodeId y = g.next(g.next(v, b), a);
        if (!intersects(reach[x], reach[y])) return DiamondResult{false, v, a, b};
      }
    }
  }
  return DiamondResult{};
}

std::optional<LabelledCycle> find_lfair_cycle(const LabelledGraph& g) {
  const Digraph d = unlabelled(g);
  const Components c = tarjan(d);
  const int labels = g.label_count();
  std::vector<std::size_t> order(c.comps.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return c.comps[a].front() < c.comps[b].front(); });
  for (std::size_t k : order) {
    const auto& comp = c.comps[k];
    if (comp.size() < 2) continue;
    std::vector<std::pair<NodeId, NodeId>> waypoints(static_cast<std::size_t>(labels), {kNone, kNone});
    int found = 0;
    for (NodeId v : comp) {
      for (int a = 0; a < labels; ++a) {
        if (waypoints[a].first != kNone || c.comp_of[g.next(v, a)] != k) continue;
        waypoints[a] = {v, g.next(v, a)};
        ++found;
      }
    }
    if (found < labels) continue;
    // Route through the witness edges, then fix labels along the walk.
    std::vector<NodeId> walk = closed_walk(d, c, comp.front(), waypoints);
    LabelledCycle cycle;
    std::vector<bool> used(static_cast<std::size_t>(labels), false);
    // Expand each step into the labels it needs: a step u->w may carry one
    // label, so witness labels absent from the walk get self-loops or
    // detours inserted below.
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const NodeId u = walk[i];
      const NodeId w = walk[(i + 1) % walk.size()];
      cycle.nodes.push_back(u);
      int pick = -1;
      for (int a = 0; a < labels; ++a) {
        if (g.next(u, a) != w) continue;
        if (pick < 0 || (!used[a] && used[pick])) pick = a;
      }
      used[pick] = true;
      cycle.labels.push_back(pick);
    }
    // Labels still unused are witnessed by an edge (x, y) of the component;
    // splice a detour x -a-> y -...-> x at an occurrence of x.
    for (int a = 0; a < labels; ++a) {
      if (used[a]) continue;
      const auto [x, y] = waypoints[a];
      auto it = std::find(cycle.nodes.begin(), cycle.nodes.end(), x);
      const auto at = static_cast<std::size_t>(it - cycle.nodes.begin());
      std::vector<NodeId> back = path_within(d, c.comp_of, static_cast<NodeId>(k), y, x);
      std::vector<NodeId> ins_nodes{x};
      std::vector<int> ins_labels{a};
      for (std::size_t j = 0; j + 1 < back.size(); ++j) {
        ins_nodes.push_back(back[j]);
        for (int b = 0; b < labels; ++b)
          if (g.next(back[j], b) == back[j + 1]) {
            ins_labels.push_back(b);
            break;
          }
      }
      cycle.nodes.insert(cycle.nodes.begin() + static_cast<long>(at), ins_nodes.begin(), ins_nodes.end());
      cycle.labels.insert(cycle.labels.begin() + static_cast<long>(at), ins_labels.begin(), ins_labels.end());
      for (int b : ins_labels) used[b] = true;
    }
    return cycle;
  }
  return std::nullopt;
}

bool validate_lfair_cycle(const LabelledGraph& g, const LabelledCycle& c) {
  if (c.nodes.empty() || c.nodes.size() != c.labels.size()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(g.label_count()), false);
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const int a = c.labels[i];
    if (c.nodes[i] >= g.node_count() || a < 0 || a >= g.label_count()) return false;
    if (g.next(c.nodes[i], a) != c.nodes[(i + 1) % c.nodes.size()]) return false;
    seen[a] = true;
  }
  const bool constant = std::all_of(c.nodes.begin(), c.nodes.end(),
                                    [&](NodeId v) { return v == c.nodes.front(); });
  return !constant && std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace gamedyn
