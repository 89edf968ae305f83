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

#include "gamedyn/spp.hpp"

#include <algorithm>
#include <map>

#include "gamedyn/analysis.hpp"
#include "gamedyn/dynamics.hpp"
#include "gamedyn/error.hpp"
#include "json_io.hpp"

namespace gamedyn {

OneTargetGame make_otg(Game g, std::vector<std::set<Play>> permitted) {
  OneTargetGame otg;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_terminal(v)) continue;
    otg.target = otg.target == kNoVertex ? v : kNoVertex - 1;
  }
  if (otg.target == kNoVertex - 1) otg.target = kNoVertex;
  for (int i = 1; i <= g.player_count(); ++i) {
    auto vs = g.vertices_of(i);
    otg.vertex_of.push_back(vs.size() == 1 ? vs.front() : kNoVertex);
  }
  permitted.resize(static_cast<std::size_t>(g.player_count()));
  otg.permitted = std::move(permitted);
  otg.game = std::move(g);
  return otg;
}

std::optional<OneTargetGame> otg_from_game(const Game& g) {
  OneTargetGame shape = make_otg(g, {});
  if (shape.target == kNoVertex) return std::nullopt;
  std::vector<std::set<Play>> permitted(static_cast<std::size_t>(g.player_count()));
  for (int i = 1; i <= g.player_count(); ++i) {
    const VertexId v = shape.vertex_of[i - 1];
    if (v == kNoVertex) return std::nullopt;
    const auto& pref = g.preference(i);
    const auto plays = positional_plays(g, v);
    std::size_t best_infinite = pref.bottom_rank() + 1;
    for (const auto& p : plays)
      if (!p.is_finite()) best_infinite = std::min(best_infinite, pref.rank(p));
    for (const auto& p : plays)
      if (p.is_finite() && pref.mentions(p) && pref.rank(p) < best_infinite) permitted[i - 1].insert(p);
  }
  shape.permitted = std::move(permitted);
  return shape;
}

std::string_view otg_axiom_name(OtgAxiom a) {
  switch (a) {
    case OtgAxiom::SingleTarget: return "SingleTarget";
    case OtgAxiom::OneVertexPerPlayer: return "OneVertexPerPlayer";
    case OtgAxiom::PermittedShape: return "PermittedShape";
    case OtgAxiom::ForbiddenBelowPermitted: return "ForbiddenBelowPermitted";
    case OtgAxiom::ForbiddenPlateau: return "ForbiddenPlateau";
    case OtgAxiom::SameNextHop: return "SameNextHop";
    case OtgAxiom::SuffixClosure: return "SuffixClosure";
  }
  return "?";
}

std::vector<Play> forbidden_plays(const OneTargetGame& otg, int player) {
  const VertexId v = otg.vertex_of.at(player - 1);
  std::vector<Play> out;
  if (v == kNoVertex) return out;
  for (auto& p : positional_plays(otg.game, v))
    if (!otg.permitted[player - 1].count(p)) out.push_back(std::move(p));
  return out;
}

namespace {

bool is_simple(const std::vector<VertexId>& seq) {
  std::vector<VertexId> s = seq;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace

std::vector<OtgDiagnostic> validate_otg(const OneTargetGame& otg) {
  std::vector<OtgDiagnostic> out;
  const Game& g = otg.game;
  if (otg.target == kNoVertex) {
    std::string names;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (g.is_terminal(v)) names += (names.empty() ? "" : ",") + g.name(v);
    out.push_back({OtgAxiom::SingleTarget, "terminal vertices {" + names + "}"});
  }
  bool shaped = otg.target != kNoVertex;
  for (int i = 1; i <= g.player_count(); ++i) {
    if (otg.vertex_of[i - 1] == kNoVertex) {
      out.push_back({OtgAxiom::OneVertexPerPlayer,
                     "player " + std::to_string(i) + " owns " +
                         std::to_string(g.vertices_of(i).size()) + " vertices"});
      shaped = false;
    }
  }
  if (!shaped) return out;
  // Owner of every non-target vertex.
  std::vector<int> player_at(g.vertex_count(), 0);
  for (int i = 1; i <= g.player_count(); ++i) player_at[otg.vertex_of[i - 1]] = i;

  for (int i = 1; i <= g.player_count(); ++i) {
    const VertexId v = otg.vertex_of[i - 1];
    const auto& pref = g.preference(i);
    const auto& permitted = otg.permitted[i - 1];
    const std::string who = "player " + std::to_string(i) + ": ";
    bool shape_ok = true;
    for (const auto& p : permitted) {
      if (!p.is_finite() || p.first() != v || p.stem.back() != otg.target || !g.is_play(p) ||
          !is_simple(p.stem)) {
        out.push_back({OtgAxiom::PermittedShape, who + g.play_to_string(p)});
        shape_ok = false;
      }
    }
    if (!shape_ok) continue;
    const auto forbidden = forbidden_plays(otg, i);
    for (const auto& f : forbidden) {
      for (const auto& p : permitted) {
        if (pref.rank(f) <= pref.rank(p)) {
          out.push_back({OtgAxiom::ForbiddenBelowPermitted,
                         who + g.play_to_string(f) + " is not below " + g.play_to_string(p)});
          goto next_axiom;
        }
      }
    }
  next_axiom:
    for (std::size_t k = 1; k < forbidden.size(); ++k) {
      if (pref.rank(forbidden[k]) != pref.rank(forbidden[0])) {
        out.push_back({OtgAxiom::ForbiddenPlateau, who + g.play_to_string(forbidden[0]) + " vs " +
                                                       g.play_to_string(forbidden[k])});
        break;
      }
    }
    for (auto a = permitted.begin(); a != permitted.end(); ++a) {
      for (auto b = std::next(a); b != permitted.end(); ++b) {
        if (pref.rank(*a) == pref.rank(*b) && a->stem[1] != b->stem[1])
          out.push_back({OtgAxiom::SameNextHop, who + g.play_to_string(*a) + " ~ " + g.play_to_string(*b)});
      }
    }
    for (const auto& p : permitted) {
      for (std::size_t k = 1; k + 1 < p.stem.size(); ++k) {
        const int j = player_at[p.stem[k]];
        Play suffix = Play::finite({p.stem.begin() + static_cast<long>(k), p.stem.end()});
        if (j == 0 || !otg.permitted[j - 1].count(suffix))
          out.push_back({OtgAxiom::SuffixClosure,
                         who + g.play_to_string(p) + " has suffix " + g.play_to_string(suffix)});
      }
    }
  }
  return out;
}

std::vector<OtgDiagnostic> validate_otg(const Game& g, const std::vector<std::set<Play>>& permitted) {
  return validate_otg(make_otg(g, permitted));
}

bool is_notg(const OneTargetGame& otg) {
  for (int i = 1; i <= otg.game.player_count(); ++i) {
    const auto& pref = otg.game.preference(i);
    const auto& permitted = otg.permitted[i - 1];
    for (auto a = permitted.begin(); a != permitted.end(); ++a)
      for (auto b = std::next(a); b != permitted.end(); ++b)
        if (a->stem.size() > 1 && b->stem.size() > 1 && a->stem[1] == b->stem[1] &&
            pref.rank(*a) != pref.rank(*b))
          return false;
  }
  return true;
}

namespace {

int player_of(const OneTargetGame& otg, VertexId v) {
  for (std::size_t i = 0; i < otg.vertex_of.size(); ++i)
    if (otg.vertex_of[i] == v) return static_cast<int>(i) + 1;
  return 0;
}

/// Nodes are (pivot, direct path); an edge carries the connecting path h of
/// a strictly preferred permitted path h pi'.
struct DisputeDigraph {
  struct Node {
    VertexId pivot;
    Play direct;
  };
  struct Link {
    std::uint32_t to;
    std::vector<VertexId> connecting;
  };
  std::vector<Node> nodes;
  std::vector<std::vector<Link>> links;
};

DisputeDigraph build_dispute_digraph(const OneTargetGame& otg) {
  DisputeDigraph d;
  std::map<std::pair<VertexId, Play>, std::uint32_t> id;
  for (std::size_t i = 0; i < otg.permitted.size(); ++i) {
    for (const auto& p : otg.permitted[i]) {
      id.emplace(std::make_pair(otg.vertex_of[i], p), static_cast<std::uint32_t>(d.nodes.size()));
      d.nodes.push_back({otg.vertex_of[i], p});
    }
  }
  d.links.resize(d.nodes.size());
  for (std::uint32_t n = 0; n < d.nodes.size(); ++n) {
    const VertexId u = d.nodes[n].pivot;
    const int i = player_of(otg, u);
    const auto& pref = otg.game.preference(i);
    const std::size_t base = pref.rank(d.nodes[n].direct);
    for (const auto& rho : otg.permitted[i - 1]) {
      if (pref.rank(rho) >= base) continue;
      for (std::size_t k = 1; k + 1 < rho.stem.size(); ++k) {
        Play suffix = Play::finite({rho.stem.begin() + static_cast<long>(k), rho.stem.end()});
        auto it = id.find({rho.stem[k], suffix});
        if (it == id.end()) continue;
        d.links[n].push_back({it->second, {rho.stem.begin(), rho.stem.begin() + static_cast<long>(k)}});
      }
    }
  }
  return d;
}

DisputeWheel rotate_to_lowest(DisputeWheel w) {
  const auto at = static_cast<long>(std::min_element(w.pivots.begin(), w.pivots.end()) - w.pivots.begin());
  std::rotate(w.pivots.begin(), w.pivots.begin() + at, w.pivots.end());
  std::rotate(w.direct.begin(), w.direct.begin() + at, w.direct.end());
  std::rotate(w.connecting.begin(), w.connecting.begin() + at, w.connecting.end());
  return w;
}

bool contains(const std::vector<VertexId>& seq, VertexId v) {
  return std::find(seq.begin(), seq.end(), v) != seq.end();
}

}  // namespace

bool is_dispute_wheel(const OneTargetGame& otg, const DisputeWheel& w) {
  const std::size_t k = w.pivots.size();
  if (k == 0 || w.direct.size() != k || w.connecting.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const int p = player_of(otg, w.pivots[i]);
    if (p == 0) return false;
    const auto& permitted = otg.permitted[p - 1];
    if (!permitted.count(w.direct[i])) return false;
    const auto& h = w.connecting[i];
    if (h.empty() || h.front() != w.pivots[i]) return false;
    const Play& next = w.direct[(i + 1) % k];
    std::vector<VertexId> joined = h;
    joined.insert(joined.end(), next.stem.begin(), next.stem.end());
    const Play rho = Play::finite(std::move(joined));
    if (!permitted.count(rho)) return false;
    const auto& pref = otg.game.preference(p);
    if (!(pref.rank(rho) < pref.rank(w.direct[i]))) return false;
  }
  return true;
}

std::string sdw_violation(const OneTargetGame& otg, const DisputeWheel& w) {
  const Game& g = otg.game;
  const std::size_t k = w.pivots.size();
  if (!is_dispute_wheel(otg, w)) return "not a dispute wheel";
  auto in_u = [&](VertexId v) { return contains(w.pivots, v); };
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId u = w.pivots[i];
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i && w.direct[j].visits(u))
        return "pivot " + g.name(u) + " occurs in direct path " + g.play_to_string(w.direct[j]);
      if (j != i && j != (i + k - 1) % k && contains(w.connecting[j], u))
        return "pivot " + g.name(u) + " occurs in connecting path " + std::to_string(j + 1);
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < k; ++c)
      for (VertexId v : w.connecting[c])
        if (!in_u(v) && w.direct[i].visits(v))
          return "direct path " + std::to_string(i + 1) + " and connecting path " +
                 std::to_string(c + 1) + " share " + g.name(v);
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      for (VertexId v : w.connecting[a])
        if (!in_u(v) && contains(w.connecting[b], v))
          return "connecting paths " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                 " share " + g.name(v);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const auto& pa = w.direct[a].stem;
      const auto& pb = w.direct[b].stem;
      for (std::size_t x = 0; x < pa.size(); ++x) {
        if (in_u(pa[x])) continue;
        auto it = std::find(pb.begin(), pb.end(), pa[x]);
        if (it == pb.end()) continue;
        if (!std::equal(pa.begin() + static_cast<long>(x), pa.end(), it, pb.end()))
          return "direct paths " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                 " diverge after " + g.name(pa[x]);
      }
    }
  }
  return {};
}

std::optional<DisputeWheel> find_dispute_wheel(const OneTargetGame& otg) {
  const DisputeDigraph d = build_dispute_digraph(otg);
  Digraph plain(d.nodes.size());
  for (std::uint32_t n = 0; n < d.nodes.size(); ++n)
    for (const auto& l : d.links[n]) plain.add_edge(n, l.to);
  auto cycle = find_cycle(plain);
  if (!cycle) return std::nullopt;
  DisputeWheel w;
  const auto& c = cycle->cycle;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto from = c[i];
    const auto to = c[(i + 1) % c.size()];
    w.pivots.push_back(d.nodes[from].pivot);
    w.direct.push_back(d.nodes[from].direct);
    for (const auto& l : d.links[from]) {
      if (l.to == to) {
        w.connecting.push_back(l.connecting);
        break;
      }
    }
  }
  return rotate_to_lowest(std::move(w));
}

namespace {

struct SdwSearch {
  const OneTargetGame& otg;
  const DisputeDigraph& d;
  std::uint64_t budget;
  std::uint64_t expansions = 0;
  std::uint32_t start = 0;
  std::vector<std::uint32_t> path;
  std::vector<std::vector<VertexId>> hs;
  std::set<VertexId> used;

  std::optional<DisputeWheel> run(std::uint32_t at) {
    for (const auto& l : d.links[at]) {
      if (++expansions > budget)
        throw Error(ErrorCode::SearchBudgetExceeded,
                    "strong dispute wheel search stopped after " + std::to_string(budget) + " expansions");
      if (l.to == start) {
        DisputeWheel w;
        for (std::size_t i = 0; i < path.size(); ++i) {
          w.pivots.push_back(d.nodes[path[i]].pivot);
          w.direct.push_back(d.nodes[path[i]].direct);
          w.connecting.push_back(i + 1 < path.size() ? hs[i] : l.connecting);
        }
        if (sdw_violation(otg, w).empty()) return rotate_to_lowest(std::move(w));
        continue;
      }
      if (l.to < start || used.count(d.nodes[l.to].pivot)) continue;
      used.insert(d.nodes[l.to].pivot);
      path.push_back(l.to);
      hs.push_back(l.connecting);
      auto found = run(l.to);
      hs.pop_back();
      path.pop_back();
      used.erase(d.nodes[l.to].pivot);
      if (found) return found;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<DisputeWheel> find_sdw(const OneTargetGame& otg, const Limits& limits) {
  const DisputeDigraph d = build_dispute_digraph(otg);
  SdwSearch s{otg, d, limits.search_budget, 0, 0, {}, {}, {}};
  for (std::uint32_t n = 0; n < d.nodes.size(); ++n) {
    s.start = n;
    s.path = {n};
    s.hs.clear();
    s.used = {d.nodes[n].pivot};
    if (auto w = s.run(n)) return w;
  }
  return std::nullopt;
}

SdwMinor extract_sdw_minor(const OneTargetGame& otg, const DisputeWheel& w) {
  const std::string why = sdw_violation(otg, w);
  if (!why.empty()) throw Error(ErrorCode::InvalidSDW, "not a strong dispute wheel: " + why);
  const Game& g = otg.game;
  const std::size_t k = w.pivots.size();
  std::set<std::pair<VertexId, VertexId>> keep;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& p = w.direct[i].stem;
    for (std::size_t x = 0; x + 1 < p.size(); ++x) keep.insert({p[x], p[x + 1]});
    const auto& h = w.connecting[i];
    for (std::size_t x = 0; x + 1 < h.size(); ++x) keep.insert({h[x], h[x + 1]});
    keep.insert({h.back(), w.pivots[(i + 1) % k]});
  }
  SdwMinor out;
  for (const auto& e : g.edges())
    if (!keep.count({e.from, e.to})) out.script.push_back(DeletionStep::edge(g.name(e.from), g.name(e.to)));
  Game cur = out.script.empty() ? g : apply_script(g, out.script).game;
  std::set<std::string> stay{g.name(otg.target)};
  for (VertexId u : w.pivots) stay.insert(g.name(u));
  bool progress = true;
  while (progress && cur.vertex_count() > stay.size()) {
    progress = false;
    for (VertexId v = 0; v < cur.vertex_count(); ++v) {
      if (stay.count(cur.name(v)) || deletion_blocker(cur, v)) continue;
      out.script.push_back(DeletionStep::vertex(cur.name(v)));
      cur = delete_vertex(cur, v);
      progress = true;
      break;
    }
  }
  if (cur.vertex_count() != stay.size())
    throw Error(ErrorCode::InvalidSDW, "off-wheel vertices cannot all be deleted");
  out.sigma1.assign(cur.vertex_count(), kNoVertex);
  out.sigma2.assign(cur.vertex_count(), kNoVertex);
  const VertexId target = cur.require(g.name(otg.target));
  for (std::size_t i = 0; i < k; ++i) {
    const VertexId u = cur.require(g.name(w.pivots[i]));
    const VertexId next = cur.require(g.name(w.pivots[(i + 1) % k]));
    if (!cur.has_edge(u, next) || !cur.has_edge(u, target))
      throw Error(ErrorCode::InvalidSDW, "minor lacks the wheel edges at " + cur.name(u));
    out.sigma1[u] = next;
    out.sigma2[u] = target;
  }
  for (VertexId v = 0; v < cur.vertex_count(); ++v) {
    if (cur.is_terminal(v)) continue;
    if (!improves(cur, out.sigma1, v, out.sigma2[v]) || !improves(cur, out.sigma2, v, out.sigma1[v]))
      throw Error(ErrorCode::InvalidSDW, "minor profiles do not alternate at " + cur.name(v));
  }
  out.game = std::move(cur);
  return out;
}

std::vector<Play> path_assignment(const OneTargetGame& otg, const Profile& sigma) {
  std::vector<Play> out;
  for (std::size_t i = 0; i < otg.vertex_of.size(); ++i) {
    Play p = outcome(otg.game, sigma, otg.vertex_of[i]);
    out.push_back(otg.permitted[i].count(p) ? std::move(p) : Play{});
  }
  return out;
}

std::size_t count_assignments(const OneTargetGame& otg, const std::vector<Profile>& profiles) {
  std::set<std::vector<Play>> seen;
  for (const auto& p : profiles) seen.insert(path_assignment(otg, p));
  return seen.size();
}

std::string_view safety_status_name(SafetyStatus s) {
  switch (s) {
    case SafetyStatus::SafeNoDW: return "SafeNoDW";
    case SafetyStatus::SafeModelChecked: return "SafeModelChecked";
    case SafetyStatus::UnsafeSDW: return "UnsafeSDW";
    case SafetyStatus::UnsafeMultiEquilibria: return "UnsafeMultiEquilibria";
    case SafetyStatus::UnsafeModelChecked: return "UnsafeModelChecked";
    case SafetyStatus::UnknownStructural: return "UnknownStructural";
  }
  return "?";
}

std::string_view safety_mode_name(SafetyMode m) {
  switch (m) {
    case SafetyMode::Structural: return "structural";
    case SafetyMode::Exact: return "exact";
    case SafetyMode::Both: return "both";
  }
  return "?";
}

std::optional<SafetyMode> parse_safety_mode(std::string_view text) {
  for (auto m : {SafetyMode::Structural, SafetyMode::Exact, SafetyMode::Both})
    if (safety_mode_name(m) == text) return m;
  return std::nullopt;
}

bool is_safe(SafetyStatus s) { return s == SafetyStatus::SafeNoDW || s == SafetyStatus::SafeModelChecked; }

bool is_unsafe(SafetyStatus s) {
  return s == SafetyStatus::UnsafeSDW || s == SafetyStatus::UnsafeMultiEquilibria ||
         s == SafetyStatus::UnsafeModelChecked;
}

namespace {

/// Lifts the wheel's two alternating profiles into the full game and checks
/// that they form a fair best-reply concurrent cycle there.
std::optional<std::pair<Profile, Profile>> certify_wheel(const OneTargetGame& otg,
                                                         const DisputeWheel& w) {
  const Game& g = otg.game;
  const std::size_t k = w.pivots.size();
  Profile t1(g.vertex_count(), kNoVertex);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!g.is_terminal(v)) t1[v] = g.successors(v).front();
  std::vector<bool> fixed(g.vertex_count(), false);
  auto follow = [&](const std::vector<VertexId>& seq) {
    for (std::size_t x = 0; x + 1 < seq.size(); ++x) {
      if (contains(w.pivots, seq[x])) continue;
      t1[seq[x]] = seq[x + 1];
      fixed[seq[x]] = true;
    }
  };
  for (std::size_t i = 0; i < k; ++i) {
    follow(w.direct[i].stem);
    auto h = w.connecting[i];
    h.push_back(w.pivots[(i + 1) % k]);
    follow(h);
    fixed[w.pivots[i]] = true;
  }
  Profile t2 = t1;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& h = w.connecting[i];
    t1[w.pivots[i]] = h.size() > 1 ? h[1] : w.pivots[(i + 1) % k];
    t2[w.pivots[i]] = w.direct[i].stem[1];
  }
  for (const Profile* base : {&t1, &t2}) {
    for (int round = 0; round < 2; ++round) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.is_terminal(v) || fixed[v]) continue;
        const VertexId pick = best_replies(g, *base, v).front();
        t1[v] = t2[v] = pick;
      }
    }
    const auto m1 = improving_moves(g, t1, true);
    const auto m2 = improving_moves(g, t2, true);
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      const VertexId u = w.pivots[i];
      const int p = player_of(otg, u);
      auto has = [&](const std::vector<Move>& ms, VertexId to) {
        return std::any_of(ms.begin(), ms.end(), [&](const Move& m) { return m.vertex == u && m.to == to; });
      };
      ok = has(m1[p - 1], t2[u]) && has(m2[p - 1], t1[u]);
    }
    for (int p = 1; p <= g.player_count() && ok; ++p) {
      if (contains(w.pivots, otg.vertex_of[p - 1])) continue;
      if (!m1[p - 1].empty() && !m2[p - 1].empty()) ok = false;
    }
    if (ok) return std::make_pair(t1, t2);
  }
  return std::nullopt;
}

SafetyVerdict structural_verdict(const OneTargetGame& otg, const Limits& limits) {
  SafetyVerdict v;
  auto dw = find_dispute_wheel(otg);
  if (!dw) {
    v.status = SafetyStatus::SafeNoDW;
    v.method = "no dispute wheel";
    return v;
  }
  v.wheel = dw;
  if (auto sdw = find_sdw(otg, limits)) {
    if (auto cyc = certify_wheel(otg, *sdw)) {
      v.status = SafetyStatus::UnsafeSDW;
      v.method = "strong dispute wheel with a certified fair best-reply cycle";
      v.wheel = sdw;
      v.cycle = {cyc->first, cyc->second};
      return v;
    }
  }
  ProfileSpace space(otg.game);
  if (space.size() <= limits.profile_guard || limits.force) {
    for (std::uint64_t i = 0; i < space.size(); ++i) {
      Profile s = space.at(i);
      const auto moves = improving_moves(otg.game, s, true);
      if (std::all_of(moves.begin(), moves.end(), [](const auto& m) { return m.empty(); }))
        v.equilibria.push_back(std::move(s));
    }
    const std::size_t stable = count_assignments(otg, v.equilibria);
    if (stable != 1) {
      v.status = SafetyStatus::UnsafeMultiEquilibria;
      v.method = std::to_string(stable) + " stable path assignments";
      return v;
    }
  }
  v.status = SafetyStatus::UnknownStructural;
  v.method = "dispute wheel without structural certificate";
  return v;
}

SafetyVerdict exact_verdict(const OneTargetGame& otg, const Limits& limits) {
  SafetyVerdict v;
  const DynamicsGraph dg = build_dynamics(otg.game, DynamicsKind::BPC, limits);
  const FairnessReport fr = find_fair_cycle(dg.graph, dg.players);
  for (NodeId e : equilibria(dg.graph)) v.equilibria.push_back(dg.states[e]);
  if (fr.fair) {
    v.status = SafetyStatus::UnsafeModelChecked;
    v.method = "fair cycle of the best-reply concurrent dynamics";
    for (NodeId n : fr.witness->cycle) v.cycle.push_back(dg.states[n]);
  } else {
    v.status = SafetyStatus::SafeModelChecked;
    v.method = "no fair cycle of the best-reply concurrent dynamics";
  }
  return v;
}

}  // namespace

SafetyVerdict safety_verdict(const OneTargetGame& otg, SafetyMode mode, const Limits& limits) {
  if (mode == SafetyMode::Structural) {
    auto v = structural_verdict(otg, limits);
    v.structural = v.status;
    return v;
  }
  if (mode == SafetyMode::Exact) {
    auto v = exact_verdict(otg, limits);
    v.exact = v.status;
    return v;
  }
  auto s = structural_verdict(otg, limits);
  auto e = exact_verdict(otg, limits);
  if ((is_safe(s.status) && is_unsafe(e.status)) || (is_unsafe(s.status) && is_safe(e.status)))
    throw Error(ErrorCode::Inconsistent, "structural verdict " + std::string(safety_status_name(s.status)) +
                                             " contradicts exact verdict " +
                                             std::string(safety_status_name(e.status)));
  SafetyVerdict v = s.status == SafetyStatus::UnknownStructural ? e : s;
  if (v.cycle.empty()) v.cycle = e.cycle;
  if (!v.wheel) v.wheel = s.wheel;
  v.equilibria = e.equilibria;
  v.structural = s.status;
  v.exact = e.status;
  v.method = std::string(safety_status_name(s.status)) + " (" + s.method + "); " +
             std::string(safety_status_name(e.status)) + " (" + e.method + ")";
  return v;
}

OneTargetGame parse_spp(std::string_view text, bool complete_suffixes) {
  using detail::json;
  const json doc = detail::parse_json(text, "spp");
  detail::require_object(doc, "spp");
  detail::reject_unknown_fields(doc, {"origin", "nodes", "extra_edges"}, "spp");
  if (!doc.contains("origin") || !doc.contains("nodes"))
    detail::syntax_error("spp", "missing 'origin' or 'nodes'");
  const std::string origin = detail::require_string(doc["origin"], "origin");
  detail::require_object(doc["nodes"], "nodes");

  std::vector<std::string> names;
  for (const auto& [key, value] : doc["nodes"].items()) {
    if (key == origin) throw Error(ErrorCode::Validation, "nodes." + key + ": the origin has no paths");
    names.push_back(key);
  }
  const int players = static_cast<int>(names.size());
  names.push_back(origin);
  Game lookup(players, names, {}, {}, {});

  std::vector<std::vector<std::vector<VertexId>>> ranked(static_cast<std::size_t>(players));
  std::set<std::pair<VertexId, VertexId>> edge_set;
  std::vector<std::pair<VertexId, VertexId>> edge_order;
  auto add_edge = [&](VertexId u, VertexId v) {
    if (edge_set.insert({u, v}).second) edge_order.emplace_back(u, v);
  };
  const auto target = static_cast<VertexId>(players);
  int idx = 0;
  for (const auto& [key, value] : doc["nodes"].items()) {
    const std::string locus = "nodes." + key;
    detail::require_object(value, locus);
    detail::reject_unknown_fields(value, {"paths"}, locus);
    if (!value.contains("paths")) detail::syntax_error(locus, "missing 'paths'");
    detail::require_array(value["paths"], locus + ".paths");
    for (std::size_t p = 0; p < value["paths"].size(); ++p) {
      const std::string plocus = locus + ".paths[" + std::to_string(p) + "]";
      const json& arr = value["paths"][p];
      detail::require_array(arr, plocus);
      std::vector<VertexId> path;
      for (std::size_t x = 0; x < arr.size(); ++x)
        path.push_back(detail::lookup_vertex(lookup, arr[x], plocus + "[" + std::to_string(x) + "]"));
      if (path.size() < 2 || path.front() != static_cast<VertexId>(idx) || path.back() != target ||
          !is_simple(path))
        throw Error(ErrorCode::Validation,
                    plocus + ": a path must be simple, start at " + key + " and end at " + origin);
      for (std::size_t x = 0; x + 1 < path.size(); ++x) add_edge(path[x], path[x + 1]);
      ranked[idx].push_back(std::move(path));
    }
    ++idx;
  }
  if (doc.contains("extra_edges")) {
    detail::require_array(doc["extra_edges"], "extra_edges");
    for (std::size_t e = 0; e < doc["extra_edges"].size(); ++e) {
      const std::string locus = "extra_edges[" + std::to_string(e) + "]";
      const json& pair = doc["extra_edges"][e];
      detail::require_array(pair, locus);
      if (pair.size() != 2) detail::syntax_error(locus, "expected [from, to]");
      add_edge(detail::lookup_vertex(lookup, pair[0], locus + "[0]"),
               detail::lookup_vertex(lookup, pair[1], locus + "[1]"));
    }
  }

  // Suffix closure over the ranked lists.
  for (int i = 0; i < players; ++i) {
    for (std::size_t p = 0; p < ranked[i].size(); ++p) {
      const auto path = ranked[i][p];
      for (std::size_t x = 1; x + 1 < path.size(); ++x) {
        std::vector<VertexId> suffix(path.begin() + static_cast<long>(x), path.end());
        auto& list = ranked[path[x]];
        if (std::find(list.begin(), list.end(), suffix) != list.end()) continue;
        if (!complete_suffixes)
          throw Error(ErrorCode::SuffixClosureRepairNeeded,
                      "nodes." + names[i] + ": suffix " + names[path[x]] + "..." + origin +
                          " is not ranked by " + names[path[x]]);
        list.push_back(std::move(suffix));
      }
    }
  }

  std::vector<EdgeDecl> edges;
  for (const auto& [u, v] : edge_order) edges.push_back({u, v, {}});
  std::vector<int> owner(names.size(), 0);
  std::vector<PreferenceOrder> prefs;
  std::vector<std::set<Play>> permitted(static_cast<std::size_t>(players));
  for (int i = 0; i < players; ++i) {
    owner[i] = i + 1;
    std::vector<std::vector<Play>> classes;
    for (const auto& path : ranked[i]) {
      classes.push_back({Play::finite(path)});
      permitted[i].insert(Play::finite(path));
    }
    prefs.emplace_back(std::move(classes));
  }
  Game g(players, names, std::move(edges), owner, std::move(prefs));
  auto diags = validate_game(g);
  if (!diags.empty()) {
    std::string msg = "invalid SPP instance:";
    for (const auto& d : diags) msg += " " + std::string(diagnostic_kind_name(d.kind)) + "(" + d.witness + ")";
    throw Error(ErrorCode::Validation, msg);
  }
  return make_otg(std::move(g), std::move(permitted));
}

}  // namespace gamedyn
