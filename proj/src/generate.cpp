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

#include "gamedyn/generate.hpp"

#include <algorithm>

#include "gamedyn/strategy.hpp"

namespace gamedyn {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(items.size()) - 1))];
}

Game draw_game(Rng& rng, const GameShape& shape) {
  const int players = uniform(rng, 1, shape.max_players);
  const int inner = uniform(rng, players, std::max(players, shape.max_vertices));
  const int terminals = uniform(rng, 1, shape.max_terminals);
  std::vector<std::string> names;
  for (int i = 1; i <= inner; ++i) names.push_back("v" + std::to_string(i));
  for (int i = 1; i <= terminals; ++i) names.push_back("t" + std::to_string(i));

  std::vector<int> owner(names.size(), 0);
  std::vector<int> order(static_cast<std::size_t>(inner));
  for (int i = 0; i < inner; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 0; i < inner; ++i) owner[order[i]] = i < players ? i + 1 : uniform(rng, 1, players);

  std::vector<EdgeDecl> edges;
  const int total = static_cast<int>(names.size());
  for (int v = 0; v < inner; ++v) {
    std::vector<VertexId> cand;
    for (int w = shape.acyclic ? v + 1 : 0; w < total; ++w)
      if (w != v) cand.push_back(static_cast<VertexId>(w));
    std::shuffle(cand.begin(), cand.end(), rng);
    const int out = uniform(rng, 1, std::min<int>(shape.max_out, static_cast<int>(cand.size())));
    cand.resize(static_cast<std::size_t>(out));
    std::sort(cand.begin(), cand.end());
    for (VertexId w : cand) {
      std::string label = shape.labels ? names[v] + names[w] : std::string{};
      edges.push_back({static_cast<VertexId>(v), w, label});
    }
  }
  Game arena(players, names, edges, owner, {});
  std::vector<PreferenceOrder> prefs;
  for (int p = 1; p <= players; ++p) {
    std::vector<Play> plays;
    for (VertexId v = 0; v < arena.vertex_count(); ++v) {
      if (arena.is_terminal(v) || (!shape.acyclic && arena.owner(v) != p)) continue;
      for (auto& play : positional_plays(arena, v)) plays.push_back(std::move(play));
    }
    std::shuffle(plays.begin(), plays.end(), rng);
    std::vector<std::vector<Play>> classes;
    for (auto& play : plays) {
      if (chance(rng, shape.unmentioned_probability)) continue;
      if (classes.empty() || !chance(rng, shape.tie_probability)) classes.emplace_back();
      classes.back().push_back(std::move(play));
    }
    prefs.emplace_back(std::move(classes));
  }
  return Game(players, std::move(names), std::move(edges), std::move(owner), std::move(prefs));
}

}  // namespace

Game random_game(Rng& rng, const GameShape& shape) {
  for (;;) {
    Game g = draw_game(rng, shape);
    if (profile_count(g) <= shape.max_profiles) return g;
  }
}

OneTargetGame random_otg(Rng& rng, const OtgShape& shape) {
  const int n = uniform(rng, shape.min_players, shape.max_players);
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  names.push_back("d");
  const auto target = static_cast<VertexId>(n);

  std::vector<std::vector<VertexId>> succ(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (j != i && chance(rng, shape.edge_probability)) succ[i].push_back(static_cast<VertexId>(j));
    if (succ[i].empty() || chance(rng, shape.direct_probability)) succ[i].push_back(target);
  }

  std::vector<std::vector<std::vector<VertexId>>> paths(static_cast<std::size_t>(n));
  auto add_path = [&](int i, std::vector<VertexId> path) {
    if (std::find(paths[i].begin(), paths[i].end(), path) == paths[i].end())
      paths[i].push_back(std::move(path));
  };
  for (int i = 0; i < n; ++i)
    if (std::find(succ[i].begin(), succ[i].end(), target) != succ[i].end())
      add_path(i, {static_cast<VertexId>(i), target});
  const int rounds = uniform(rng, n, 4 * n);
  for (int r = 0; r < rounds; ++r) {
    const int i = uniform(rng, 0, n - 1);
    const VertexId j = pick(rng, succ[i]);
    if (j == target || paths[j].empty()) continue;
    const auto& tail = pick(rng, paths[j]);
    if (std::find(tail.begin(), tail.end(), static_cast<VertexId>(i)) != tail.end()) continue;
    std::vector<VertexId> path{static_cast<VertexId>(i)};
    path.insert(path.end(), tail.begin(), tail.end());
    add_path(i, std::move(path));
  }

  std::vector<EdgeDecl> edges;
  for (int i = 0; i < n; ++i)
    for (VertexId j : succ[i]) edges.push_back({static_cast<VertexId>(i), j, {}});
  std::vector<int> owner(names.size(), 0);
  std::vector<PreferenceOrder> prefs;
  std::vector<std::set<Play>> permitted(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    owner[i] = i + 1;
    std::vector<std::vector<Play>> classes;
    if (shape.neighbour) {
      std::vector<VertexId> hops;
      for (const auto& p : paths[i])
        if (std::find(hops.begin(), hops.end(), p[1]) == hops.end()) hops.push_back(p[1]);
      std::shuffle(hops.begin(), hops.end(), rng);
      for (VertexId h : hops) {
        classes.emplace_back();
        for (const auto& p : paths[i])
          if (p[1] == h) classes.back().push_back(Play::finite(p));
      }
    } else {
      std::shuffle(paths[i].begin(), paths[i].end(), rng);
      for (const auto& p : paths[i]) classes.push_back({Play::finite(p)});
    }
    for (const auto& p : paths[i]) permitted[i].insert(Play::finite(p));
    prefs.emplace_back(std::move(classes));
  }
  Game g(n, std::move(names), std::move(edges), std::move(owner), std::move(prefs));
  return make_otg(std::move(g), std::move(permitted));
}

DeletionScript random_script(const Game& g, Rng& rng, int max_steps) {
  DeletionScript script;
  Game cur = g;
  const int steps = uniform(rng, 1, max_steps);
  for (int s = 0; s < steps; ++s) {
    std::vector<DeletionStep> cand;
    for (const auto& e : cur.edges())
      if (cur.successors(e.from).size() >= 2) cand.push_back(DeletionStep::edge(cur.name(e.from), cur.name(e.to)));
    for (VertexId v = 0; v < cur.vertex_count(); ++v)
      if (!deletion_blocker(cur, v)) cand.push_back(DeletionStep::vertex(cur.name(v)));
    if (cand.empty()) break;
    const DeletionStep step = pick(rng, cand);
    cur = apply_script(cur, {step}).game;
    script.push_back(step);
  }
  return script;
}

DeletionScript random_dominant_script(const Game& g, Rng& rng, int max_steps, const Limits& limits) {
  DeletionScript script;
  Game cur = g;
  for (int s = 0; s < max_steps; ++s) {
    std::vector<std::pair<VertexId, VertexId>> cand;
    for (VertexId u = 0; u < cur.vertex_count(); ++u) {
      const auto& succ = cur.successors(u);
      for (VertexId a : succ) {
        for (VertexId b : succ) {
          if (a != b && is_dominated(cur, {u, a}, {u, b}, limits)) {
            cand.emplace_back(u, a);
            break;
          }
        }
      }
    }
    if (cand.empty()) break;
    const auto [u, v] = pick(rng, cand);
    script.push_back(DeletionStep::edge(cur.name(u), cur.name(v)));
    cur = delete_edge(cur, u, v);
  }
  return script;
}

}  // namespace gamedyn
