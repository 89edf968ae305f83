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

#include "gamedyn/game.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "gamedyn/error.hpp"
#include "json_io.hpp"

namespace gamedyn {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::Validation: return "Validation";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::InvalidPlay: return "InvalidPlay";
    case ErrorCode::StateSpaceTooLarge: return "StateSpaceTooLarge";
    case ErrorCode::CyclicArena: return "CyclicArena";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NotDeletable: return "NotDeletable";
    case ErrorCode::ScriptStepFailed: return "ScriptStepFailed";
    case ErrorCode::SourceMismatch: return "SourceMismatch";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::NonDeterministicBestReply: return "NonDeterministicBestReply";
    case ErrorCode::InvalidSDW: return "InvalidSDW";
    case ErrorCode::InvalidOTG: return "InvalidOTG";
    case ErrorCode::SuffixClosureRepairNeeded: return "SuffixClosureRepairNeeded";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string_view ordering_name(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

bool Play::visits(VertexId v) const {
  return std::find(stem.begin(), stem.end(), v) != stem.end() ||
         std::find(loop.begin(), loop.end(), v) != loop.end();
}

Play canonical_form(Play play) {
  if (play.is_finite()) return play;
  auto& loop = play.loop;
  const std::size_t n = loop.size();
  for (std::size_t period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) periodic = loop[i] == loop[i % period];
    if (periodic) {
      loop.resize(period);
      break;
    }
  }
  while (!play.stem.empty() && play.stem.back() == loop.back()) {
    std::rotate(loop.rbegin(), loop.rbegin() + 1, loop.rend());
    play.stem.pop_back();
  }
  return play;
}

PreferenceOrder::PreferenceOrder(std::vector<std::vector<Play>> classes)
    : classes_(std::move(classes)) {
  for (std::size_t r = 0; r < classes_.size(); ++r)
    for (const auto& p : classes_[r]) rank_.emplace(p, r);
}

std::size_t PreferenceOrder::rank(const Play& play) const {
  auto it = rank_.find(play);
  return it == rank_.end() ? bottom_rank() : it->second;
}

Game::Game(int players, std::vector<std::string> names, std::vector<EdgeDecl> edges,
           std::vector<int> owner, std::vector<PreferenceOrder> preferences)
    : players_(players),
      names_(std::move(names)),
      edges_(std::move(edges)),
      owner_(std::move(owner)),
      prefs_(std::move(preferences)) {
  const std::size_t n = names_.size();
  succ_.assign(n, {});
  pred_.assign(n, {});
  owner_.resize(n, 0);
  for (std::size_t v = 0; v < n; ++v) index_.emplace(names_[v], static_cast<VertexId>(v));
  for (const auto& e : edges_) {
    if (e.from >= n || e.to >= n) continue;
    succ_[e.from].push_back(e.to);
    pred_[e.to].push_back(e.from);
    if (!e.label.empty()) {
      labels_.emplace(std::make_pair(e.from, e.to), e.label);
      has_labels_ = true;
    }
  }
  for (auto* adj : {&succ_, &pred_}) {
    for (auto& list : *adj) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  }
}

std::optional<VertexId> Game::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Game::require(std::string_view name) const {
  auto v = find(name);
  if (!v) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
  return *v;
}

bool Game::has_edge(VertexId u, VertexId v) const {
  if (u >= succ_.size()) return false;
  return std::binary_search(succ_[u].begin(), succ_[u].end(), v);
}

std::string_view Game::edge_label(VertexId u, VertexId v) const {
  auto it = labels_.find({u, v});
  return it == labels_.end() ? std::string_view{} : std::string_view{it->second};
}

std::vector<VertexId> Game::vertices_of(int player) const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < owner_.size(); ++v)
    if (owner_[v] == player && !succ_[v].empty()) out.push_back(static_cast<VertexId>(v));
  return out;
}

Ordering Game::compare(int player, const Play& a, const Play& b) const {
  const auto& pref = preference(player);
  const std::size_t ra = pref.rank(a);
  const std::size_t rb = pref.rank(b);
  if (ra == rb) return Ordering::Equal;
  // Lower rank index is better.
  return ra > rb ? Ordering::Less : Ordering::Greater;
}

bool Game::is_path(const Play& play) const {
  if (play.empty()) return false;
  std::vector<VertexId> seq = play.stem;
  seq.insert(seq.end(), play.loop.begin(), play.loop.end());
  if (!play.is_finite()) seq.push_back(play.loop.front());
  for (VertexId v : seq)
    if (v >= vertex_count()) return false;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!has_edge(seq[i], seq[i + 1])) return false;
  return true;
}

bool Game::is_play(const Play& play) const {
  if (!is_path(play)) return false;
  return !play.is_finite() || is_terminal(play.stem.back());
}

Play Game::canonicalize(Play play) const {
  if (!is_path(play)) throw Error(ErrorCode::InvalidPlay, "not a path: " + play_to_string(play));
  if (play.is_finite() && !is_terminal(play.stem.back()))
    throw Error(ErrorCode::NotMaximal,
                "finite play ends in a non-terminal vertex: " + play_to_string(play));
  return canonical_form(std::move(play));
}

bool Game::is_acyclic() const {
  std::vector<std::size_t> indeg(vertex_count());
  for (std::size_t v = 0; v < vertex_count(); ++v) indeg[v] = pred_[v].size();
  std::queue<VertexId> ready;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (indeg[v] == 0) ready.push(static_cast<VertexId>(v));
  std::size_t seen = 0;
  while (!ready.empty()) {
    VertexId v = ready.front();
    ready.pop();
    ++seen;
    for (VertexId w : succ_[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  return seen == vertex_count();
}

std::string Game::play_to_string(const Play& play) const {
  auto label = [this](VertexId v) {
    return v < vertex_count() ? names_[v] : "#" + std::to_string(v);
  };
  std::string out;
  for (VertexId v : play.stem) {
    if (!out.empty()) out += ' ';
    out += label(v);
  }
  if (!play.is_finite()) {
    if (!out.empty()) out += ' ';
    out += '(';
    for (std::size_t i = 0; i < play.loop.size(); ++i) {
      if (i) out += ' ';
      out += label(play.loop[i]);
    }
    out += ")^w";
  }
  return out;
}

std::string_view diagnostic_kind_name(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::DuplicateVertex: return "DuplicateVertex";
    case DiagnosticKind::UnknownVertex: return "UnknownVertex";
    case DiagnosticKind::DuplicateEdge: return "DuplicateEdge";
    case DiagnosticKind::MissingOwner: return "MissingOwner";
    case DiagnosticKind::OwnerOnTerminal: return "OwnerOnTerminal";
    case DiagnosticKind::OwnerOutOfRange: return "OwnerOutOfRange";
    case DiagnosticKind::PreferenceCount: return "PreferenceCount";
    case DiagnosticKind::InvalidPlay: return "InvalidPlay";
    case DiagnosticKind::DuplicatePlay: return "DuplicatePlay";
    case DiagnosticKind::NonCanonicalPlay: return "NonCanonicalPlay";
  }
  return "Unknown";
}

std::vector<Diagnostic> validate_game(const Game& g) {
  std::vector<Diagnostic> out;
  const std::size_t n = g.vertex_count();
  {
    std::set<std::string> seen;
    for (const auto& name : g.names())
      if (!seen.insert(name).second) out.push_back({DiagnosticKind::DuplicateVertex, name});
  }
  {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& e : g.edges()) {
      if (e.from >= n || e.to >= n) {
        out.push_back({DiagnosticKind::UnknownVertex,
                       "edge (" + std::to_string(e.from) + "," + std::to_string(e.to) + ")"});
        continue;
      }
      if (!seen.insert({e.from, e.to}).second)
        out.push_back({DiagnosticKind::DuplicateEdge, g.name(e.from) + "->" + g.name(e.to)});
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    const int o = g.owner(v);
    if (o < 0 || o > g.player_count()) {
      out.push_back({DiagnosticKind::OwnerOutOfRange, g.name(v) + " owned by " + std::to_string(o)});
    } else if (g.is_terminal(v) && o != 0) {
      out.push_back({DiagnosticKind::OwnerOnTerminal, g.name(v)});
    } else if (!g.is_terminal(v) && o == 0) {
      out.push_back({DiagnosticKind::MissingOwner, g.name(v)});
    }
  }
  if (g.preferences().size() != static_cast<std::size_t>(std::max(g.player_count(), 0))) {
    out.push_back({DiagnosticKind::PreferenceCount,
                   std::to_string(g.preferences().size()) + " preference orders for " +
                       std::to_string(g.player_count()) + " players"});
  }
  for (std::size_t p = 0; p < g.preferences().size(); ++p) {
    std::set<Play> seen;
    const std::string who = "player " + std::to_string(p + 1) + ": ";
    for (const auto& cls : g.preferences()[p].classes()) {
      for (const auto& play : cls) {
        if (!g.is_play(play)) {
          out.push_back({DiagnosticKind::InvalidPlay, who + g.play_to_string(play)});
          continue;
        }
        if (canonical_form(play) != play)
          out.push_back({DiagnosticKind::NonCanonicalPlay, who + g.play_to_string(play)});
        if (!seen.insert(play).second)
          out.push_back({DiagnosticKind::DuplicatePlay, who + g.play_to_string(play)});
      }
    }
  }
  return out;
}

Game parse_game(std::string_view text) {
  using detail::json;
  const json doc = detail::parse_json(text, "game");
  detail::require_object(doc, "game");
  detail::reject_unknown_fields(doc, {"players", "vertices", "edges", "owner", "preferences"},
                                "game");
  for (const char* key : {"players", "vertices", "edges"})
    if (!doc.contains(key)) detail::syntax_error("game", std::string("missing field '") + key + "'");
  if (!doc["players"].is_number_integer() || doc["players"].get<int>() < 1)
    detail::syntax_error("players", "expected a positive integer");
  const int players = doc["players"].get<int>();

  detail::require_array(doc["vertices"], "vertices");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i)
    names.push_back(detail::require_string(doc["vertices"][i], "vertices[" + std::to_string(i) + "]"));

  // A skeleton game gives name lookup to the edge and play parsers.
  Game names_only(players, names, {}, {}, {});

  detail::require_array(doc["edges"], "edges");
  std::vector<EdgeDecl> edges;
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const std::string locus = "edges[" + std::to_string(i) + "]";
    const json& e = doc["edges"][i];
    detail::require_array(e, locus);
    if (e.size() != 2 && e.size() != 3)
      detail::syntax_error(locus, "expected [from, to] or [from, to, label]");
    EdgeDecl decl;
    decl.from = detail::lookup_vertex(names_only, e[0], locus + "[0]");
    decl.to = detail::lookup_vertex(names_only, e[1], locus + "[1]");
    if (e.size() == 3) decl.label = detail::require_string(e[2], locus + "[2]");
    edges.push_back(std::move(decl));
  }

  std::vector<int> owner(names.size(), 0);
  if (doc.contains("owner")) {
    detail::require_object(doc["owner"], "owner");
    for (const auto& [key, value] : doc["owner"].items()) {
      const std::string locus = "owner." + key;
      auto v = names_only.find(key);
      if (!v) throw Error(ErrorCode::UnknownVertex, locus + ": unknown vertex '" + key + "'");
      if (!value.is_number_integer()) detail::syntax_error(locus, "expected a player index");
      owner[*v] = value.get<int>();
    }
  }

  Game arena(players, names, edges, owner, {});
  std::vector<std::vector<std::vector<Play>>> classes(players);
  if (doc.contains("preferences")) {
    detail::require_object(doc["preferences"], "preferences");
    for (const auto& [key, value] : doc["preferences"].items()) {
      const std::string locus = "preferences." + key;
      int p = 0;
      try {
        std::size_t used = 0;
        p = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        detail::syntax_error(locus, "player keys must be integers");
      }
      if (p < 1 || p > players)
        throw Error(ErrorCode::Validation, locus + ": player " + key + " out of range");
      detail::require_array(value, locus);
      for (std::size_t r = 0; r < value.size(); ++r) {
        const std::string cls_locus = locus + "[" + std::to_string(r) + "]";
        detail::require_array(value[r], cls_locus);
        std::vector<Play> cls;
        for (std::size_t k = 0; k < value[r].size(); ++k) {
          Play play = detail::parse_play(arena, value[r][k], cls_locus + "[" + std::to_string(k) + "]");
          if (arena.is_play(play)) play = canonical_form(std::move(play));
          cls.push_back(std::move(play));
        }
        classes[p - 1].push_back(std::move(cls));
      }
    }
  }
  std::vector<PreferenceOrder> prefs;
  for (auto& c : classes) prefs.emplace_back(std::move(c));

  Game g(players, std::move(names), std::move(edges), std::move(owner), std::move(prefs));
  auto diags = validate_game(g);
  if (!diags.empty()) {
    std::string msg = "invalid game:";
    for (const auto& d : diags)
      msg += " " + std::string(diagnostic_kind_name(d.kind)) + "(" + d.witness + ")";
    throw Error(ErrorCode::Validation, msg);
  }
  return g;
}

std::string game_to_json(const Game& g) {
  using detail::json;
  json doc;
  doc["players"] = g.player_count();
  doc["vertices"] = g.names();
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json pair = json::array({g.name(e.from), g.name(e.to)});
    if (!e.label.empty()) pair.push_back(e.label);
    edges.push_back(std::move(pair));
  }
  doc["edges"] = std::move(edges);
  json owner = json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.owner(v) != 0) owner[g.name(v)] = g.owner(v);
  doc["owner"] = std::move(owner);
  json prefs = json::object();
  for (int p = 1; p <= g.player_count(); ++p) {
    json classes = json::array();
    for (const auto& cls : g.preference(p).classes()) {
      json plays = json::array();
      for (const auto& play : cls) plays.push_back(detail::play_to_json(g, play));
      classes.push_back(std::move(plays));
    }
    prefs[std::to_string(p)] = std::move(classes);
  }
  doc["preferences"] = std::move(prefs);
  return doc.dump(2);
}

namespace {

void collect_plays(const Game& g, std::vector<VertexId>& path, std::vector<bool>& on_path,
                   std::set<Play>& out) {
  const VertexId w = path.back();
  if (g.is_terminal(w)) {
    out.insert(Play::finite(path));
    return;
  }
  for (VertexId s : g.successors(w)) {
    if (on_path[s]) {
      auto at = std::find(path.begin(), path.end(), s);
      out.insert(canonical_form(Play::lasso({path.begin(), at}, {at, path.end()})));
      continue;
    }
    path.push_back(s);
    on_path[s] = true;
    collect_plays(g, path, on_path, out);
    on_path[s] = false;
    path.pop_back();
  }
}

}  // namespace

std::vector<Play> positional_plays(const Game& g, VertexId v) {
  if (v >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex id out of range");
  std::set<Play> plays;
  std::vector<VertexId> path{v};
  std::vector<bool> on_path(g.vertex_count(), false);
  on_path[v] = true;
  collect_plays(g, path, on_path, plays);
  return {plays.begin(), plays.end()};
}

}  // namespace gamedyn
