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

#include "gamedyn/minors.hpp"

#include <algorithm>
#include <set>

#include "gamedyn/error.hpp"
#include "gamedyn/spp.hpp"
#include "gamedyn/strategy.hpp"
#include "json_io.hpp"

namespace gamedyn {

DeletionScript parse_script(std::string_view text) {
  using detail::json;
  const json doc = detail::parse_json(text, "script");
  detail::require_array(doc, "script");
  DeletionScript out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string locus = "script[" + std::to_string(i) + "]";
    const json& step = doc[i];
    detail::require_object(step, locus);
    detail::reject_unknown_fields(step, {"edge", "vertex"}, locus);
    if (step.contains("edge") == step.contains("vertex"))
      detail::syntax_error(locus, "a step needs exactly one of 'edge' or 'vertex'");
    if (step.contains("edge")) {
      const json& e = step["edge"];
      detail::require_array(e, locus + ".edge");
      if (e.size() != 2) detail::syntax_error(locus + ".edge", "expected [from, to]");
      out.push_back(DeletionStep::edge(detail::require_string(e[0], locus + ".edge[0]"),
                                       detail::require_string(e[1], locus + ".edge[1]")));
    } else {
      out.push_back(DeletionStep::vertex(detail::require_string(step["vertex"], locus + ".vertex")));
    }
  }
  return out;
}

std::string script_to_json(const DeletionScript& s) {
  using detail::json;
  json doc = json::array();
  for (const auto& step : s) {
    if (step.kind == DeletionStep::Kind::Edge)
      doc.push_back(json{{"edge", json::array({step.from, step.to})}});
    else
      doc.push_back(json{{"vertex", step.from}});
  }
  return doc.dump();
}

std::string step_to_string(const DeletionStep& s) {
  if (s.kind == DeletionStep::Kind::Edge) return "delete edge (" + s.from + "," + s.to + ")";
  return "delete vertex " + s.from;
}

std::string_view not_deletable_reason_name(NotDeletableReason r) {
  switch (r) {
    case NotDeletableReason::MultipleSuccessors: return "MultipleSuccessors";
    case NotDeletableReason::NoSuccessor: return "NoSuccessor";
    case NotDeletableReason::PredecessorConflict: return "PredecessorConflict";
  }
  return "?";
}

std::optional<NotDeletableReason> deletion_blocker(const Game& g, VertexId v) {
  const auto& succ = g.successors(v);
  const auto& pred = g.predecessors(v);
  if (succ.empty() && pred.empty()) return std::nullopt;
  if (succ.empty()) return NotDeletableReason::NoSuccessor;
  if (succ.size() > 1) return NotDeletableReason::MultipleSuccessors;
  for (VertexId u : pred)
    if (g.has_edge(u, succ.front())) return NotDeletableReason::PredecessorConflict;
  return std::nullopt;
}

namespace {

/// Rebuilds a game from old-numbered parts, dropping vertices not kept.
Game rebuild(const Game& g, const std::vector<bool>& keep, const std::vector<EdgeDecl>& edges,
             std::vector<int> owner, const std::vector<std::vector<std::vector<Play>>>& classes,
             std::vector<VertexId>* old_of_new) {
  std::vector<VertexId> remap(g.vertex_count(), kNoVertex);
  std::vector<std::string> names;
  std::vector<int> new_owner;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!keep[v]) continue;
    remap[v] = static_cast<VertexId>(names.size());
    names.push_back(g.name(v));
    new_owner.push_back(owner[v]);
    if (old_of_new) old_of_new->push_back(v);
  }
  std::vector<EdgeDecl> new_edges;
  for (const auto& e : edges) new_edges.push_back({remap[e.from], remap[e.to], e.label});
  auto map_seq = [&](const std::vector<VertexId>& seq) {
    std::vector<VertexId> out;
    for (VertexId v : seq) out.push_back(remap[v]);
    return out;
  };
  std::vector<PreferenceOrder> prefs;
  for (const auto& player : classes) {
    std::vector<std::vector<Play>> cls;
    std::set<Play> seen;
    for (const auto& c : player) {
      std::vector<Play> mapped;
      for (const auto& p : c) {
        Play q = canonical_form(Play{map_seq(p.stem), map_seq(p.loop)});
        if (seen.insert(q).second) mapped.push_back(std::move(q));
      }
      if (!mapped.empty()) cls.push_back(std::move(mapped));
    }
    prefs.emplace_back(std::move(cls));
  }
  return Game(g.player_count(), std::move(names), std::move(new_edges), std::move(new_owner),
              std::move(prefs));
}

std::vector<std::vector<std::vector<Play>>> classes_of(const Game& g) {
  std::vector<std::vector<std::vector<Play>>> out;
  for (const auto& p : g.preferences()) out.push_back(p.classes());
  return out;
}

Game delete_edge_impl(const Game& g, VertexId u, VertexId v, std::vector<VertexId>* old_of_new) {
  if (u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v))
    throw Error(ErrorCode::UnknownEdge,
                "no edge (" + (u < g.vertex_count() ? g.name(u) : "?") + "," +
                    (v < g.vertex_count() ? g.name(v) : "?") + ")");
  std::vector<EdgeDecl> edges;
  for (const auto& e : g.edges())
    if (!(e.from == u && e.to == v)) edges.push_back(e);
  Game arena(g.player_count(), g.names(), edges, g.owners(), {});
  std::vector<int> owner = g.owners();
  if (arena.is_terminal(u)) owner[u] = 0;
  auto classes = classes_of(g);
  for (auto& player : classes) {
    for (auto& c : player)
      c.erase(std::remove_if(c.begin(), c.end(), [&](const Play& p) { return !arena.is_play(p); }),
              c.end());
  }
  return rebuild(g, std::vector<bool>(g.vertex_count(), true), edges, owner, classes, old_of_new);
}

Game delete_vertex_impl(const Game& g, VertexId v, std::vector<VertexId>* old_of_new) {
  if (v >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex id out of range");
  if (auto why = deletion_blocker(g, v))
    throw Error(ErrorCode::NotDeletable,
                "cannot delete " + g.name(v) + ": " + std::string(not_deletable_reason_name(*why)));
  std::vector<bool> keep(g.vertex_count(), true);
  keep[v] = false;
  auto classes = classes_of(g);
  std::vector<EdgeDecl> edges;
  if (g.successors(v).empty()) {
    edges = g.edges();
  } else {
    const VertexId next = g.successors(v).front();
    for (const auto& e : g.edges()) {
      if (e.from == v) continue;
      edges.push_back(e.to == v ? EdgeDecl{e.from, next, e.label} : e);
    }
  }
  // Plays starting at v vanish; elsewhere v only occurs as u v v'.
  auto strip = [v](std::vector<VertexId>& seq) {
    seq.erase(std::remove(seq.begin(), seq.end(), v), seq.end());
  };
  for (auto& player : classes) {
    for (auto& c : player) {
      std::vector<Play> kept;
      for (Play p : c) {
        if (p.first() == v) continue;
        strip(p.stem);
        strip(p.loop);
        kept.push_back(std::move(p));
      }
      c = std::move(kept);
    }
  }
  return rebuild(g, keep, edges, g.owners(), classes, old_of_new);
}

}  // namespace

Game delete_edge(const Game& g, VertexId u, VertexId v) { return delete_edge_impl(g, u, v, nullptr); }

Game delete_vertex(const Game& g, VertexId v) { return delete_vertex_impl(g, v, nullptr); }

MinorResult apply_script(const Game& g, const DeletionScript& s) {
  MinorResult r;
  r.game = g;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    r.origin.push_back(v);
    for (VertexId w : g.successors(v)) r.edge_origin[{v, w}] = {v, w};
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& step = s[i];
    try {
      const Game& cur = r.game;
      std::vector<VertexId> old_of_new;
      Game next;
      std::map<std::pair<VertexId, VertexId>, std::vector<VertexId>> paths;
      if (step.kind == DeletionStep::Kind::Edge) {
        const VertexId u = cur.require(step.from);
        const VertexId v = cur.require(step.to);
        next = delete_edge_impl(cur, u, v, &old_of_new);
        paths = r.edge_origin;
        paths.erase({u, v});
      } else {
        const VertexId v = cur.require(step.from);
        next = delete_vertex_impl(cur, v, &old_of_new);
        for (const auto& [e, path] : r.edge_origin) {
          if (e.first == v) continue;
          if (e.second == v) {
            const VertexId w = cur.successors(v).front();
            auto joined = path;
            const auto& tail = r.edge_origin.at({v, w});
            joined.insert(joined.end(), tail.begin() + 1, tail.end());
            paths[{e.first, w}] = std::move(joined);
          } else {
            paths[e] = path;
          }
        }
      }
      std::vector<VertexId> new_of_old(cur.vertex_count(), kNoVertex);
      for (VertexId k = 0; k < old_of_new.size(); ++k) new_of_old[old_of_new[k]] = k;
      r.edge_origin.clear();
      for (const auto& [e, path] : paths)
        r.edge_origin[{new_of_old[e.first], new_of_old[e.second]}] = path;
      std::vector<VertexId> origin;
      for (VertexId old : old_of_new) origin.push_back(r.origin[old]);
      r.origin = std::move(origin);
      r.game = std::move(next);
      r.provenance.push_back("step " + std::to_string(i + 1) + ": " + step_to_string(step));
    } catch (const Error& e) {
      throw Error(ErrorCode::ScriptStepFailed, "step " + std::to_string(i + 1) + " (" +
                                                   step_to_string(step) + "): " +
                                                   std::string(error_code_name(e.code())) + ": " +
                                                   e.what());
    }
  }
  return r;
}

Relation minor_witness_relation(const Game& source, const MinorResult& minor) {
  const Game& m = minor.game;
  ProfileSpace left(m), right(source);
  Relation rel(left.size(), right.size());
  // Squeezed vertices keep the unique successor they had when deleted.
  std::vector<VertexId> squeezed(source.vertex_count(), kNoVertex);
  for (const auto& [edge, path] : minor.edge_origin)
    for (std::size_t k = 1; k + 1 < path.size(); ++k) squeezed[path[k]] = path[k + 1];
  for (std::uint64_t a = 0; a < left.size(); ++a) {
    const Profile sp = left.at(a);
    std::vector<VertexId> need = squeezed;
    bool consistent = true;
    for (VertexId x = 0; x < m.vertex_count() && consistent; ++x) {
      if (m.is_terminal(x)) continue;
      const auto& path = minor.edge_origin.at({x, sp[x]});
      for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        if (need[path[k]] != kNoVertex && need[path[k]] != path[k + 1]) consistent = false;
        need[path[k]] = path[k + 1];
      }
    }
    if (!consistent) continue;
    for (std::uint64_t b = 0; b < right.size(); ++b) {
      const Profile s = right.at(b);
      bool ok = true;
      for (VertexId y = 0; y < source.vertex_count() && ok; ++y)
        if (need[y] != kNoVertex && s[y] != need[y]) ok = false;
      if (ok) rel.insert(static_cast<NodeId>(a), static_cast<NodeId>(b));
    }
  }
  return rel;
}

bool is_dominated(const Game& g, std::pair<VertexId, VertexId> e1, std::pair<VertexId, VertexId> e2,
                  const Limits& limits) {
  if (e1.first != e2.first)
    throw Error(ErrorCode::SourceMismatch, "dominance compares edges leaving the same vertex");
  for (auto e : {e1, e2})
    if (!g.has_edge(e.first, e.second))
      throw Error(ErrorCode::UnknownEdge, "no edge (" +
                                              (e.first < g.vertex_count() ? g.name(e.first) : "?") +
                                              "," +
                                              (e.second < g.vertex_count() ? g.name(e.second) : "?") +
                                              ")");
  if (e1 == e2) return false;
  const VertexId v = e1.first;
  ProfileSpace space(g);
  check_guard(space.size(), limits, "positional profiles");
  const auto& pref = g.preference(g.owner(v));
  const VertexId first = g.successors(v).front();
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    Profile s = space.at(i);
    if (s[v] != first) continue;
    s[v] = e1.second;
    const std::size_t r1 = pref.rank(outcome(g, s, v));
    s[v] = e2.second;
    const std::size_t r2 = pref.rank(outcome(g, s, v));
    if (!(r2 < r1)) return false;
  }
  return true;
}

bool is_dominant_script(const Game& g, const DeletionScript& s, const Limits& limits) {
  Game cur = g;
  for (const auto& step : s) {
    if (step.kind == DeletionStep::Kind::Edge) {
      const VertexId u = cur.require(step.from);
      const VertexId v = cur.require(step.to);
      bool dominated = false;
      for (VertexId w : cur.successors(u))
        if (w != v && is_dominated(cur, {u, v}, {u, w}, limits)) dominated = true;
      if (!dominated) return false;
      cur = delete_edge(cur, u, v);
    } else {
      cur = delete_vertex(cur, cur.require(step.from));
    }
  }
  return true;
}

bool is_dis_game(const Game& g) {
  if (g.vertex_count() != 3 || g.edge_count() != 4) return false;
  VertexId t = kNoVertex;
  std::vector<VertexId> inner;
  for (VertexId v = 0; v < 3; ++v) {
    if (g.is_terminal(v)) {
      if (t != kNoVertex) return false;
      t = v;
    } else {
      inner.push_back(v);
    }
  }
  if (t == kNoVertex || inner.size() != 2) return false;
  const VertexId a = inner[0], b = inner[1];
  if (!g.has_edge(a, b) || !g.has_edge(b, a) || !g.has_edge(a, t) || !g.has_edge(b, t)) return false;
  if (g.owner(a) == g.owner(b)) return false;
  auto pattern = [&](VertexId x, VertexId y) {
    const auto& pref = g.preference(g.owner(x));
    const std::size_t lasso = pref.rank(Play::lasso({}, {x, y}));
    const std::size_t direct = pref.rank(Play::finite({x, t}));
    const std::size_t indirect = pref.rank(Play::finite({x, y, t}));
    return indirect < direct && direct < lasso;
  };
  return pattern(a, b) && pattern(b, a);
}

std::optional<DeletionScript> dis_script_for(const Game& g, const std::vector<VertexId>& ab,
                                             const std::vector<VertexId>& ba,
                                             const std::vector<VertexId>& at,
                                             const std::vector<VertexId>& bt) {
  std::set<std::pair<VertexId, VertexId>> keep;
  std::set<VertexId> on;
  for (const auto* path : {&ab, &ba, &at, &bt}) {
    for (std::size_t k = 0; k + 1 < path->size(); ++k) keep.insert({(*path)[k], (*path)[k + 1]});
    on.insert(path->begin(), path->end());
  }
  const VertexId a = ab.front(), b = ab.back(), t = at.back();
  // Interior vertices must end up with one successor and a, b with two.
  std::map<VertexId, std::set<VertexId>> out;
  for (const auto& [u, v] : keep) out[u].insert(v);
  for (const auto& [u, succ] : out)
    if (succ.size() != (u == a || u == b ? 2u : 1u)) return std::nullopt;
  DeletionScript script;
  for (const auto& e : g.edges())
    if (!keep.count({e.from, e.to})) script.push_back(DeletionStep::edge(g.name(e.from), g.name(e.to)));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!on.count(v)) script.push_back(DeletionStep::vertex(g.name(v)));
  Game cur;
  try {
    cur = apply_script(g, script).game;
  } catch (const Error&) {
    return std::nullopt;
  }
  // Squeeze interior vertices greedily.
  bool progress = true;
  while (cur.vertex_count() > 3 && progress) {
    progress = false;
    for (VertexId v = 0; v < cur.vertex_count(); ++v) {
      const std::string name = cur.name(v);
      if (name == g.name(a) || name == g.name(b) || name == g.name(t)) continue;
      if (deletion_blocker(cur, v)) continue;
      cur = delete_vertex(cur, v);
      script.push_back(DeletionStep::vertex(name));
      progress = true;
      break;
    }
  }
  if (!is_dis_game(cur)) return std::nullopt;
  return script;
}

namespace {

void simple_paths(const Game& g, VertexId from, VertexId to, const std::set<VertexId>& avoid,
                  std::vector<VertexId>& path, std::vector<bool>& on,
                  std::vector<std::vector<VertexId>>& out) {
  const VertexId v = path.back();
  if (v == to) {
    out.push_back(path);
    return;
  }
  for (VertexId w : g.successors(v)) {
    if (on[w] || (w != to && avoid.count(w))) continue;
    path.push_back(w);
    on[w] = true;
    simple_paths(g, from, to, avoid, path, on, out);
    on[w] = false;
    path.pop_back();
  }
}

std::vector<std::vector<VertexId>> paths_between(const Game& g, VertexId from, VertexId to,
                                                 const std::set<VertexId>& avoid) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> path{from};
  std::vector<bool> on(g.vertex_count(), false);
  on[from] = true;
  simple_paths(g, from, to, avoid, path, on, out);
  return out;
}

// Interior vertices of an embedding keep a single successor, so the a-b and b-a
// paths cannot touch anything else and the two paths to t may only share a tail.
bool interiors_disjoint(const std::vector<VertexId>& p, const std::vector<VertexId>& q) {
  for (std::size_t i = 1; i + 1 < p.size(); ++i)
    for (std::size_t j = 1; j + 1 < q.size(); ++j)
      if (p[i] == q[j]) return false;
  return true;
}

bool merge_as_suffix(const std::vector<VertexId>& p, const std::vector<VertexId>& q) {
  for (std::size_t i = 1; i + 1 < p.size(); ++i)
    for (std::size_t j = 1; j + 1 < q.size(); ++j)
      if (p[i] == q[j]) return std::equal(p.begin() + static_cast<std::ptrdiff_t>(i), p.end(),
                                          q.begin() + static_cast<std::ptrdiff_t>(j), q.end());
  return true;
}

// The dispute pattern at the head of `xy`, read on the plays of g that the
// minor would keep.
bool embedded_pattern(const Game& g, const std::vector<VertexId>& xy, const std::vector<VertexId>& yx,
                      const std::vector<VertexId>& xt, const std::vector<VertexId>& yt) {
  std::vector<VertexId> cycle(xy.begin(), xy.end() - 1);
  cycle.insert(cycle.end(), yx.begin(), yx.end() - 1);
  std::vector<VertexId> indirect = xy;
  indirect.insert(indirect.end(), yt.begin() + 1, yt.end());
  const auto& pref = g.preference(g.owner(xy.front()));
  const std::size_t lasso = pref.rank(canonical_form(Play::lasso({}, cycle)));
  const std::size_t direct = pref.rank(Play::finite(xt));
  return pref.rank(Play::finite(indirect)) < direct && direct < lasso;
}

}  // namespace

DisMinorResult find_dis_minor(const Game& g, const Limits& limits) {
  DisMinorResult result;
  if (is_dis_game(g)) {
    result.found = true;
    result.method = "identity";
    return result;
  }
  // Constructive route for neighbour one-target games.
  if (auto otg = otg_from_game(g); otg && validate_otg(*otg).empty() && is_notg(*otg)) {
    if (auto sdw = find_sdw(*otg, limits)) {
      const auto& w = *sdw;
      const std::size_t k = w.pivots.size();
      std::vector<VertexId> ab = w.connecting[0];
      ab.push_back(w.pivots[1 % k]);
      std::vector<VertexId> ba;
      for (std::size_t i = 1; i < k; ++i) ba.insert(ba.end(), w.connecting[i].begin(), w.connecting[i].end());
      ba.push_back(w.pivots[0]);
      if (auto s = dis_script_for(g, ab, ba, w.direct[0].stem, w.direct[1 % k].stem)) {
        result.found = true;
        result.script = std::move(*s);
        result.method = "sdw";
        return result;
      }
    }
  }
  for (VertexId a = 0; a < g.vertex_count(); ++a) {
    for (VertexId b = a + 1; b < g.vertex_count(); ++b) {
      if ( g.is_terminal(a) || g.is_terminal(b) || g.owner(a) == g.owner(b)) continue;
      for (VertexId t = 0; t < g.vertex_count(); ++t) {
        if (!g.is_terminal(t)) continue;
        const std::set<VertexId> ends{a, b, t};
        const auto ab = paths_between(g, a, b, ends);
        const auto ba = paths_between(g, b, a, ends);
        const auto at = paths_between(g, a, t, ends);
        const auto bt = paths_between(g, b, t, ends);
        for (const auto& p1 : ab)
          for (const auto& p2 : ba) {
            if (!interiors_disjoint(p1, p2)) continue;
            for (const auto& p3 : at) {
              if (!interiors_disjoint(p3, p1) || !interiors_disjoint(p3, p2)) continue;
              for (const auto& p4 : bt) {
                if (!interiors_disjoint(p4, p1) || !interiors_disjoint(p4, p2) || !merge_as_suffix(p3, p4) ||
                    !embedded_pattern(g, p1, p2, p3, p4) || !embedded_pattern(g, p2, p1, p4, p3))
                  continue;
                if (++result.expansions > limits.search_budget)
                  throw Error(ErrorCode::SearchBudgetExceeded,
                              "DIS-minor search stopped after " +
                                  std::to_string(limits.search_budget) + " candidate embeddings");
                if (auto s = dis_script_for(g, p1, p2, p3, p4)) {
                  result.found = true;
                  result.script = std::move(*s);
                  result.method = "search";
                  return result;
                }
              }
            }
          }
      }
    }
  }
  return result;
}

}  // namespace gamedyn
