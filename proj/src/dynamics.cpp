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

#include "gamedyn/dynamics.hpp"

#include <algorithm>
#include <limits>

#include "gamedyn/error.hpp"

namespace gamedyn {

std::string_view kind_name(DynamicsKind kind) {
  switch (kind) {
    case DynamicsKind::OneStep: return "1";
    case DynamicsKind::P1: return "p1";
    case DynamicsKind::BP1: return "bp1";
    case DynamicsKind::PC: return "pc";
    case DynamicsKind::BPC: return "bpc";
  }
  return "?";
}

std::optional<DynamicsKind> parse_kind(std::string_view text) {
  for (auto k : {DynamicsKind::OneStep, DynamicsKind::P1, DynamicsKind::BP1, DynamicsKind::PC,
                 DynamicsKind::BPC})
    if (kind_name(k) == text) return k;
  return std::nullopt;
}

bool is_best_reply(DynamicsKind kind) {
  return kind == DynamicsKind::BP1 || kind == DynamicsKind::BPC;
}

std::size_t Digraph::edge_count() const noexcept {
  std::size_t n = 0;
  for (const auto& a : adj_) n += a.size();
  return n;
}

bool Digraph::has_edge(std::uint32_t u, std::uint32_t v) const {
  const auto& a = adj_.at(u);
  auto it = std::lower_bound(a.begin(), a.end(), v,
                             [](const Arc& arc, std::uint32_t t) { return arc.to < t; });
  return it != a.end() && it->to == v;
}

void Digraph::add_edge(std::uint32_t u, std::uint32_t v, PlayerSet changed) {
  auto& a = adj_.at(u);
  auto it = std::lower_bound(a.begin(), a.end(), v,
                             [](const Arc& arc, std::uint32_t t) { return arc.to < t; });
  if (it != a.end() && it->to == v) {
    it->changed |= changed;
    return;
  }
  a.insert(it, Arc{v, changed});
}

std::vector<std::vector<Move>> improving_moves(const Game& g, const Profile& sigma,
                                               bool best_reply) {
  std::vector<std::vector<Move>> moves(static_cast<std::size_t>(g.player_count()));
  Profile work = sigma;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.is_terminal(v)) continue;
    const int owner = g.owner(v);
    const auto& pref = g.preference(owner);
    const std::size_t current = pref.rank(outcome(g, sigma, v));
    std::vector<std::pair<VertexId, std::size_t>> better;
    std::size_t best = current;
    for (VertexId w : g.successors(v)) {
      if (w == sigma[v]) continue;
      work[v] = w;
      const std::size_t r = pref.rank(outcome(g, work, v));
      if (r < current) {
        better.emplace_back(w, r);
        best = std::min(best, r);
      }
    }
    work[v] = sigma[v];
    for (const auto& [w, r] : better)
      if (!best_reply || r == best) moves[owner - 1].push_back(Move{v, w});
  }
  return moves;
}

namespace {

void check_players(const Game& g) {
  if (g.player_count() > 63)
    throw Error(ErrorCode::InvalidArgument, "at most 63 players are supported");
}

DynamicsGraph build_positional(const Game& g, DynamicsKind kind, const Limits& limits) {
  check_players(g);
  ProfileSpace space(g);
  check_guard(space.size(), limits, "positional profiles");
  if (space.size() > std::numeric_limits<std::uint32_t>::max())
    throw Error(ErrorCode::StateSpaceTooLarge, "profile count exceeds node id range");
  DynamicsGraph dg;
  dg.kind = kind;
  dg.players = g.player_count();
  dg.graph = Digraph(space.size());
  const bool best = is_best_reply(kind);
  const bool concurrent = kind == DynamicsKind::PC || kind == DynamicsKind::BPC;
  for (std::uint64_t id = 0; id < space.size(); ++id) {
    Profile sigma = space.at(id);
    dg.names.push_back(profile_name(g, sigma));
    auto moves = improving_moves(g, sigma, best);
    const auto from = static_cast<std::uint32_t>(id);
    if (!concurrent) {
      for (std::size_t p = 0; p < moves.size(); ++p) {
        for (const Move& m : moves[p]) {
          Profile next = sigma;
          next[m.vertex] = m.to;
          dg.graph.add_edge(from, static_cast<std::uint32_t>(space.index_of(next)),
                            player_bit(static_cast<int>(p) + 1));
        }
      }
    } else {
      // Odometer over (no move | one move) per player.
      std::vector<std::size_t> pick(moves.size(), 0);
      while (true) {
        std::size_t k = 0;
        while (k < pick.size() && pick[k] == moves[k].size()) pick[k++] = 0;
        if (k == pick.size()) break;
        ++pick[k];
        Profile next = sigma;
        PlayerSet changed = 0;
        for (std::size_t p = 0; p < pick.size(); ++p) {
          if (pick[p] == 0) continue;
          const Move& m = moves[p][pick[p] - 1];
          next[m.vertex] = m.to;
          changed |= player_bit(static_cast<int>(p) + 1);
        }
        dg.graph.add_edge(from, static_cast<std::uint32_t>(space.index_of(next)), changed);
      }
    }
    dg.states.push_back(std::move(sigma));
  }
  return dg;
}

std::string history_profile_name(const Game& g, const HistorySpace& hs,
                                 const std::vector<VertexId>& choice) {
  std::string out;
  for (std::size_t k = 0; k < choice.size(); ++k) {
    const auto& h = hs.histories()[k];
    if (hs.options(k).size() < 2) continue;
    if (!out.empty()) out += ',';
    for (std::size_t i = 0; i < h.size(); ++i) out += (i ? "." : "") + g.name(h[i]);
    out += ">" + g.name(choice[k]);
  }
  return out.empty() ? "*" : out;
}

}  // namespace

DynamicsGraph build_one_step(const Game& g, const Limits& limits) {
  check_players(g);
  HistorySpace hs(g);
  check_guard(hs.size(), limits, "history profiles");
  if (hs.size() > std::numeric_limits<std::uint32_t>::max())
    throw Error(ErrorCode::StateSpaceTooLarge, "profile count exceeds node id range");
  DynamicsGraph dg;
  dg.kind = DynamicsKind::OneStep;
  dg.players = g.player_count();
  dg.graph = Digraph(hs.size());
  dg.histories = hs.histories();
  for (std::uint64_t id = 0; id < hs.size(); ++id) {
    auto choice = hs.at(id);
    dg.names.push_back(history_profile_name(g, hs, choice));
    for (std::size_t k = 0; k < choice.size(); ++k) {
      const int owner = g.owner(hs.histories()[k].back());
      const auto& pref = g.preference(owner);
      const std::size_t current = pref.rank(hs.outcome(choice, k));
      auto next = choice;
      for (VertexId w : hs.options(k)) {
        if (w == choice[k]) continue;
        next[k] = w;
        if (pref.rank(hs.outcome(next, k)) < current)
          dg.graph.add_edge(static_cast<std::uint32_t>(id),
                            static_cast<std::uint32_t>(hs.index_of(next)), player_bit(owner));
      }
    }
    dg.states.push_back(std::move(choice));
  }
  return dg;
}

DynamicsGraph build_dynamics(const Game& g, DynamicsKind kind, const Limits& limits) {
  if (kind == DynamicsKind::OneStep) return build_one_step(g, limits);
  return build_positional(g, kind, limits);
}

std::vector<std::vector<VertexId>> player_strategies(const Game& g, int player) {
  const auto verts = g.vertices_of(player);
  std::vector<std::vector<VertexId>> out{{}};
  for (VertexId v : verts) {
    std::vector<std::vector<VertexId>> next;
    for (const auto& prefix : out) {
      for (VertexId w : g.successors(v)) {
        auto s = prefix;
        s.push_back(w);
        next.push_back(std::move(s));
      }
    }
    out = std::move(next);
  }
  return out;
}

BeliefGraph build_belief_graph(const Game& g, const Limits& limits) {
  check_players(g);
  const int n = g.player_count();
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<std::vector<VertexId>>> strategies(un);
  std::vector<std::vector<VertexId>> verts(un);
  std::uint64_t count = 1;
  for (int i = 1; i <= n; ++i) {
    strategies[i - 1] = player_strategies(g, i);
    verts[i - 1] = g.vertices_of(i);
  }
  for (std::size_t cell = 0; cell < un * un; ++cell)
    count = mul_saturate(count, strategies[cell % un].size());
  check_guard(count, limits, "belief states");
  if (count > std::numeric_limits<std::uint32_t>::max())
    throw Error(ErrorCode::StateSpaceTooLarge, "belief state count exceeds node id range");

  // Mixed radix over the n*n cells, first cell most significant.
  std::vector<std::uint64_t> weight(un * un, 1);
  for (std::size_t cell = un * un; cell-- > 0;)
    weight[cell] = cell + 1 < un * un ? weight[cell + 1] * strategies[(cell + 1) % un].size() : 1;
  auto encode = [&](const std::vector<std::uint32_t>& m) {
    std::uint64_t idx = 0;
    for (std::size_t cell = 0; cell < m.size(); ++cell) idx += weight[cell] * m[cell];
    return static_cast<std::uint32_t>(idx);
  };
  auto decode = [&](std::uint64_t idx) {
    std::vector<std::uint32_t> m(un * un);
    for (std::size_t cell = 0; cell < m.size(); ++cell)
      m[cell] = static_cast<std::uint32_t>((idx / weight[cell]) % strategies[cell % un].size());
    return m;
  };
  auto row_profile = [&](const std::vector<std::uint32_t>& m, std::size_t row) {
    Profile p(g.vertex_count(), kNoVertex);
    for (std::size_t i = 0; i < un; ++i) {
      const auto& s = strategies[i][m[row * un + i]];
      for (std::size_t k = 0; k < verts[i].size(); ++k) p[verts[i][k]] = s[k];
    }
    return p;
  };
  auto strategy_index = [&](std::size_t player, const Profile& p) {
    std::vector<VertexId> s;
    for (VertexId v : verts[player]) s.push_back(p[v]);
    const auto& all = strategies[player];
    return static_cast<std::uint32_t>(std::lower_bound(all.begin(), all.end(), s) - all.begin());
  };

  BeliefGraph bg;
  bg.players = n;
  bg.graph = LabelledGraph(count, n + 1);
  for (std::uint64_t id = 0; id < count; ++id) {
    auto m = decode(id);
    const auto node = static_cast<std::uint32_t>(id);
    bool agree = true;
    for (std::size_t j = 1; j < un && agree; ++j)
      agree = std::equal(m.begin(), m.begin() + static_cast<long>(un), m.begin() + static_cast<long>(j * un));
    std::string name;
    for (std::size_t j = 0; j < un; ++j) {
      if (j) name += '|';
      name += profile_name(g, row_profile(m, j));
    }
    bg.graph.names.push_back(std::move(name));
    bg.agreeing.push_back(agree);

    auto shared = m;
    for (std::size_t j = 0; j < un; ++j)
      for (std::size_t i = 0; i < un; ++i) shared[j * un + i] = m[i * un + i];
    bg.graph.set(node, 0, encode(shared));

    for (std::size_t l = 0; l < un; ++l) {
      const Profile belief = row_profile(m, l);
      auto moves = improving_moves(g, belief, true)[l];
      std::vector<std::uint32_t> targets;
      for (const Move& mv : moves) {
        Profile next = belief;
        next[mv.vertex] = mv.to;
        targets.push_back(strategy_index(l, next));
      }
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      if (targets.size() > 1)
        throw Error(ErrorCode::NonDeterministicBestReply,
                    "player " + std::to_string(l + 1) + " has " + std::to_string(targets.size()) +
                        " best-reply updates at belief " + profile_name(g, belief));
      auto after = m;
      if (!targets.empty()) after[l * un + l] = targets.front();
      bg.graph.set(node, static_cast<int>(l) + 1, encode(after));
    }
    bg.matrices.push_back(std::move(m));
  }
  return bg;
}

}  // namespace gamedyn
