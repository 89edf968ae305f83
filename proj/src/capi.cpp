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

#include "gamedyn/gamedyn.h"

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <string>

#include "gamedyn/dot.hpp"
#include "gamedyn/dynamics.hpp"
#include "gamedyn/error.hpp"
#include "gamedyn/generate.hpp"
#include "gamedyn/minors.hpp"
#include "gamedyn/spp.hpp"
#include "report.hpp"

struct gd_game {
  gamedyn::Game game;
};

struct gd_otg {
  gamedyn::OneTargetGame otg;
};

namespace {

using gamedyn::Error;
using gamedyn::ErrorCode;

thread_local std::string last_error;

std::shared_ptr<spdlog::logger> logger() {
  static std::once_flag once;
  static std::shared_ptr<spdlog::logger> log;
  std::call_once(once, [] {
    log = spdlog::stderr_color_mt("gamedyn");
    log->set_pattern("[%l] %v");
    log->set_level(spdlog::level::warn);
    if (const char* env = std::getenv("GAMEDYN_LOG")) log->set_level(spdlog::level::from_str(env));
  });
  return log;
}

gd_status status_of(ErrorCode code) { return static_cast<gd_status>(GD_ERR_SYNTAX + static_cast<int>(code)); }

template <typename F>
gd_status guarded(const char* what, F&& body) {
  last_error.clear();
  const auto start = std::chrono::steady_clock::now();
  try {
    body();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    logger()->debug("{} finished in {} ms", what, ms.count());
    return GD_OK;
  } catch (const Error& e) {
    last_error = std::string(gamedyn::error_code_name(e.code())) + ": " + e.what();
    logger()->info("{} failed: {}", what, last_error);
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  logger()->error("{} failed: {}", what, last_error);
  return GD_ERR_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

gamedyn::Limits limits_of(const gd_config* cfg) {
  gamedyn::Limits l;
  if (cfg) {
    require(cfg->profile_guard > 0 && cfg->search_budget > 0, "guards must be positive");
    l.profile_guard = cfg->profile_guard;
    l.search_budget = cfg->search_budget;
    l.force = cfg->force != 0;
  }
  return l;
}

gamedyn::DynamicsKind kind_of(const char* kind) {
  require(kind, "kind is null");
  auto k = gamedyn::parse_kind(kind);
  if (!k) throw Error(ErrorCode::InvalidArgument, std::string("unknown dynamics kind '") + kind + "'");
  return *k;
}

/// Text and JSON come from the report; DOT from dot_text when given.
void emit(const gamedyn::report::Report& r, gd_format format, const std::string& dot_text, char** out,
          int* verdict) {
  std::string text;
  switch (format) {
    case GD_FORMAT_TEXT: text = gamedyn::report::render_text(r.doc); break;
    case GD_FORMAT_JSON: text = r.doc.dump(2) + "\n"; break;
    case GD_FORMAT_DOT:
      require(!dot_text.empty(), "no DOT rendering for this command");
      text = dot_text;
      break;
    default: throw Error(ErrorCode::InvalidArgument, "unknown output format");
  }
  *out = copy_out(text);
  if (verdict) *verdict = static_cast<int>(r.verdict);
}

}  // namespace

extern "C" {

void gd_config_default(gd_config* cfg) {
  if (!cfg) return;
  const gamedyn::Limits l;
  cfg->profile_guard = l.profile_guard;
  cfg->search_budget = l.search_budget;
  cfg->force = l.force ? 1 : 0;
}

const char* gd_last_error(void) { return last_error.c_str(); }

const char* gd_status_name(gd_status status) {
  static const std::string ok = "OK", internal = "Internal", unknown = "Unknown";
  static std::string names[GD_ERR_INTERNAL];
  if (status == GD_OK) return ok.c_str();
  if (status == GD_ERR_INTERNAL) return internal.c_str();
  if (status < GD_ERR_SYNTAX || status > GD_ERR_INVALID_ARGUMENT) return unknown.c_str();
  static std::once_flag once;
  std::call_once(once, [] {
    for (int c = GD_ERR_SYNTAX; c <= GD_ERR_INVALID_ARGUMENT; ++c)
      names[c] = gamedyn::error_code_name(static_cast<ErrorCode>(c - GD_ERR_SYNTAX));
  });
  return names[status].c_str();
}

gd_status gd_set_log_level(const char* level) {
  return guarded("set_log_level", [&] {
    require(level, "level is null");
    const auto l = spdlog::level::from_str(level);
    if (l == spdlog::level::off && std::strcmp(level, "off") != 0)
      throw Error(ErrorCode::InvalidArgument, std::string("unknown log level '") + level + "'");
    logger()->set_level(l);
  });
}

void gd_string_free(char* s) { std::free(s); }

gd_status gd_game_parse(const char* text, gd_game** out) {
  return guarded("game_parse", [&] {
    require(text && out, "null argument");
    *out = nullptr;
    auto g = gamedyn::parse_game(text);
    logger()->debug("parsed game: {} players, {} vertices", g.player_count(), g.vertex_count());
    *out = new gd_game{std::move(g)};
  });
}

void gd_game_free(gd_game* game) { delete game; }

gd_status gd_game_to_json(const gd_game* game, char** out) {
  return guarded("game_to_json", [&] {
    require(game && out, "null argument");
    *out = copy_out(gamedyn::game_to_json(game->game));
  });
}

gd_status gd_game_to_dot(const gd_game* game, char** out) {
  return guarded("game_to_dot", [&] {
    require(game && out, "null argument");
    *out = copy_out(gamedyn::game_to_dot(game->game));
  });
}

gd_status gd_game_stats(const gd_game* game, int* players, int* vertices, int* edges) {
  return guarded("game_stats", [&] {
    require(game && players && vertices && edges, "null argument");
    *players = game->game.player_count();
    *vertices = static_cast<int>(game->game.vertex_count());
    *edges = static_cast<int>(game->game.edge_count());
  });
}

gd_status gd_dynamics(const gd_game* game, const char* kind, const gd_config* cfg, gd_format format,
                      char** out) {
  return guarded("dynamics", [&] {
    require(game && out, "null argument");
    const auto dg = gamedyn::build_dynamics(game->game, kind_of(kind), limits_of(cfg));
    logger()->debug("dynamics {}: {} nodes, {} edges", kind, dg.graph.node_count(), dg.graph.edge_count());
    const std::string dot = format == GD_FORMAT_DOT ? gamedyn::dynamics_to_dot(dg) : std::string{};
    emit(gamedyn::report::dynamics(dg), format, dot, out, nullptr);
  });
}

gd_status gd_analyze(const gd_game* game, const char* kind, const char* check, const gd_config* cfg,
                     gd_format format, char** out, int* verdict) {
  return guarded("analyze", [&] {
    require(game && check && out, "null argument");
    const std::string c = check;
    const auto dg = gamedyn::build_dynamics(game->game, kind_of(kind), limits_of(cfg));
    const std::string dot = format == GD_FORMAT_DOT ? gamedyn::dynamics_to_dot(dg) : std::string{};
    emit(gamedyn::report::analyze(dg, c), format, dot, out, verdict);
  });
}

gd_status gd_minor(const gd_game* game, const char* script, const gd_config* cfg, gd_format format,
                   char** out, int* verdict) {
  return guarded("minor", [&] {
    require(game && script && out, "null argument");
    const auto s = gamedyn::parse_script(script);
    const auto m = gamedyn::apply_script(game->game, s);
    const std::string dot = format == GD_FORMAT_DOT ? gamedyn::game_to_dot(m.game) : std::string{};
    emit(gamedyn::report::minor(game->game, m, limits_of(cfg)), format, dot, out, verdict);
  });
}

gd_status gd_dominated(const gd_game* game, const char* from1, const char* to1, const char* from2,
                       const char* to2, const gd_config* cfg, gd_format format, char** out, int* verdict) {
  return guarded("dominated", [&] {
    require(game && from1 && to1 && from2 && to2 && out, "null argument");
    const auto& g = game->game;
    const std::pair e1{g.require(from1), g.require(to1)};
    const std::pair e2{g.require(from2), g.require(to2)};
    emit(gamedyn::report::dominated(g, e1, e2, limits_of(cfg)), format, {}, out, verdict);
  });
}

gd_status gd_belief(const gd_game* game, const gd_config* cfg, gd_format format, char** out, int* verdict) {
  return guarded("belief", [&] {
    require(game && out, "null argument");
    const auto bg = gamedyn::build_belief_graph(game->game, limits_of(cfg));
    logger()->debug("belief graph: {} nodes", bg.graph.node_count());
    const std::string dot = format == GD_FORMAT_DOT ? gamedyn::belief_to_dot(bg) : std::string{};
    emit(gamedyn::report::belief(bg), format, dot, out, verdict);
  });
}

gd_status gd_dis_minor(const gd_game* game, const gd_config* cfg, gd_format format, char** out,
                       int* verdict) {
  return guarded("dis_minor", [&] {
    require(game && out, "null argument");
    const auto r = gamedyn::find_dis_minor(game->game, limits_of(cfg));
    std::string dot;
    if (format == GD_FORMAT_DOT && r.found)
      dot = gamedyn::game_to_dot(gamedyn::apply_script(game->game, r.script).game);
    emit(gamedyn::report::dis_minor(game->game, r), format, dot, out, verdict);
  });
}

gd_status gd_spp_parse(const char* text, int complete_suffixes, gd_otg** out) {
  return guarded("spp_parse", [&] {
    require(text && out, "null argument");
    *out = nullptr;
    *out = new gd_otg{gamedyn::parse_spp(text, complete_suffixes != 0)};
  });
}

gd_status gd_otg_from_game(const gd_game* game, gd_otg** out) {
  return guarded("otg_from_game", [&] {
    require(game && out, "null argument");
    *out = nullptr;
    auto otg = gamedyn::otg_from_game(game->game);
    if (!otg) throw Error(ErrorCode::InvalidOTG, "the game is not a one-target game with one vertex per player");
    *out = new gd_otg{std::move(*otg)};
  });
}

void gd_otg_free(gd_otg* otg) { delete otg; }

gd_status gd_spp(const gd_otg* otg, const char* command, const char* mode, const gd_config* cfg,
                 gd_format format, char** out, int* verdict) {
  return guarded("spp", [&] {
    require(otg && command && out, "null argument");
    const std::string c = command;
    const auto& o = otg->otg;
    const std::string dot = format == GD_FORMAT_DOT ? gamedyn::game_to_dot(o.game) : std::string{};
    if (c == "validate") {
      emit(gamedyn::report::spp_validate(o), format, dot, out, verdict);
      return;
    }
    const auto diags = gamedyn::validate_otg(o);
    if (!diags.empty())
      throw Error(ErrorCode::InvalidOTG, std::string(gamedyn::otg_axiom_name(diags.front().axiom)) + ": " +
                                             diags.front().witness);
    const auto limits = limits_of(cfg);
    if (c == "dw") {
      emit(gamedyn::report::spp_dw(o), format, dot, out, verdict);
    } else if (c == "sdw") {
      emit(gamedyn::report::spp_sdw(o, limits), format, dot, out, verdict);
    } else if (c == "safety") {
      auto m = gamedyn::parse_safety_mode(mode ? mode : "both");
      if (!m) throw Error(ErrorCode::InvalidArgument, std::string("unknown safety mode '") + mode + "'");
      emit(gamedyn::report::spp_safety(o, *m, limits), format, dot, out, verdict);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown spp command '" + c + "'");
    }
  });
}

gd_status gd_generate(const char* family, uint64_t seed, int max_players, char** out) {
  return guarded("generate", [&] {
    require(family && out, "null argument");
    require(max_players >= 1 && max_players <= 6, "max_players must lie in 1..6");
    const std::string f = family;
    gamedyn::Rng rng(seed);
    if (f == "game" || f == "acyclic") {
      gamedyn::GameShape shape;
      shape.max_players = max_players;
      shape.acyclic = f == "acyclic";
      *out = copy_out(gamedyn::game_to_json(gamedyn::random_game(rng, shape)));
    } else if (f == "otg" || f == "notg") {
      gamedyn::OtgShape shape;
      shape.min_players = std::min(2, max_players);
      shape.max_players = max_players;
      shape.neighbour = f == "notg";
      *out = copy_out(gamedyn::game_to_json(gamedyn::random_otg(rng, shape).game));
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown family '" + f + "'");
    }
  });
}

}  // extern "C"
