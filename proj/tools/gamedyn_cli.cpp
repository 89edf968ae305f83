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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gamedyn/gamedyn.h"

namespace {

constexpr int kUsage = 2;

struct Options {
  std::uint64_t profile_guard = 0;
  std::uint64_t search_budget = 0;
  bool force = false;
  std::uint64_t seed = 1;
  std::string output = "text";
  std::string log_level;

  std::string input;
  std::string kind = "p1";
  std::string check = "termination";
  std::string script;
  std::vector<std::string> edges;
  std::string spp_command;
  std::string mode = "both";
  bool complete_suffixes = false;
  bool from_game = false;
  std::string family = "game";
  int max_players = 3;
};

struct UsageError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Prints the output or the error and returns the process exit code.
int finish(gd_status st, char* out, int verdict) {
  if (st != GD_OK) {
    std::cerr << "error: " << gd_last_error() << "\n";
    return static_cast<int>(st);
  }
  std::cout << out;
  gd_string_free(out);
  return verdict;
}

class Game {
 public:
  explicit Game(const std::string& path) {
    const std::string text = read_file(path);
    status_ = gd_game_parse(text.c_str(), &game_);
  }
  ~Game() { gd_game_free(game_); }
  Game(const Game&) = delete;
  Game& operator=(const Game&) = delete;
  gd_status status() const { return status_; }
  const gd_game* get() const { return game_; }

 private:
  gd_game* game_ = nullptr;
  gd_status status_ = GD_OK;
};

std::pair<std::string, std::string> split_edge(const std::string& e) {
  const auto comma = e.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == e.size())
    throw UsageError{"edge '" + e + "' is not of the form u,v"};
  return {e.substr(0, comma), e.substr(comma + 1)};
}

int run(const std::string& command, const Options& o) {
  gd_config cfg;
  gd_config_default(&cfg);
  if (o.profile_guard) cfg.profile_guard = o.profile_guard;
  if (o.search_budget) cfg.search_budget = o.search_budget;
  cfg.force = o.force ? 1 : 0;
  const gd_format fmt = o.output == "json" ? GD_FORMAT_JSON : o.output == "dot" ? GD_FORMAT_DOT : GD_FORMAT_TEXT;
  char* out = nullptr;
  int verdict = 0;

  if (command == "generate")
    return finish(gd_generate(o.family.c_str(), o.seed, o.max_players, &out), out, 0);

  if (command == "spp") {
    gd_otg* otg = nullptr;
    gd_status st;
    if (o.from_game) {
      Game g(o.input);
      if (g.status() != GD_OK) return finish(g.status(), nullptr, 0);
      st = gd_otg_from_game(g.get(), &otg);
    } else {
      const std::string text = read_file(o.input);
      st = gd_spp_parse(text.c_str(), o.complete_suffixes ? 1 : 0, &otg);
    }
    if (st != GD_OK) return finish(st, nullptr, 0);
    st = gd_spp(otg, o.spp_command.c_str(), o.mode.c_str(), &cfg, fmt, &out, &verdict);
    gd_otg_free(otg);
    return finish(st, out, verdict);
  }

  Game g(o.input);
  if (g.status() != GD_OK) return finish(g.status(), nullptr, 0);
  const gd_game* game = g.get();
  gd_status st = GD_OK;
  if (command == "dynamics") {
    st = gd_dynamics(game, o.kind.c_str(), &cfg, fmt, &out);
  } else if (command == "analyze") {
    st = gd_analyze(game, o.kind.c_str(), o.check.c_str(), &cfg, fmt, &out, &verdict);
  } else if (command == "minor") {
    const std::string script = read_file(o.script);
    st = gd_minor(game, script.c_str(), &cfg, fmt, &out, &verdict);
  } else if (command == "dominated") {
    const auto [u1, v1] = split_edge(o.edges.at(0));
    const auto [u2, v2] = split_edge(o.edges.at(1));
    st = gd_dominated(game, u1.c_str(), v1.c_str(), u2.c_str(), v2.c_str(), &cfg, fmt, &out, &verdict);
  } else if (command == "belief") {
    st = gd_belief(game, &cfg, fmt, &out, &verdict);
  } else if (command == "dis-minor") {
    st = gd_dis_minor(game, &cfg, fmt, &out, &verdict);
  } else if (command == "show") {
    st = fmt == GD_FORMAT_DOT ? gd_game_to_dot(game, &out) : gd_game_to_json(game, &out);
  }
  return finish(st, out, verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strategy-update dynamics of games on graphs, and routing safety."};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--profile-guard", o.profile_guard, "Largest state space to build")->check(CLI::PositiveNumber);
  app.add_option("--search-budget", o.search_budget, "Expansions allowed to pattern searches")
      ->check(CLI::PositiveNumber);
  app.add_flag("--force", o.force, "Ignore the profile guard");
  app.add_option("--seed", o.seed, "Seed for generated instances");
  app.add_option("--output", o.output, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--log-level", o.log_level, "error, warn, info or debug")
      ->check(CLI::IsMember({"error", "warn", "info", "debug"}));

  const std::vector<std::string> kinds{"1", "p1", "bp1", "pc", "bpc"};
  auto game_arg = [&](CLI::App* sub) { sub->add_option("game", o.input, "Game document")->required(); };

  auto* dynamics = app.add_subcommand("dynamics", "Build a dynamics graph");
  game_arg(dynamics);
  dynamics->add_option("--kind", o.kind, "Dynamics")->check(CLI::IsMember(kinds));

  auto* analyze = app.add_subcommand("analyze", "Decide termination, fair termination or equilibria");
  game_arg(analyze);
  analyze->add_option("--kind", o.kind, "Dynamics")->check(CLI::IsMember(kinds));
  analyze->add_option("--check", o.check, "Property")
      ->check(CLI::IsMember({"termination", "fair-termination", "equilibria"}));

  auto* minor = app.add_subcommand("minor", "Apply a deletion script and check simulation");
  game_arg(minor);
  minor->add_option("--script", o.script, "Deletion script document")->required();

  auto* dominated = app.add_subcommand("dominated", "Is the first edge dominated by the second");
  game_arg(dominated);
  dominated->add_option("--edges", o.edges, "Two edges u,v")->required()->expected(2);

  auto* spp = app.add_subcommand("spp", "Routing instance analyses");
  spp->add_option("command", o.spp_command, "validate, dw, sdw or safety")
      ->required()
      ->check(CLI::IsMember({"validate", "dw", "sdw", "safety"}));
  spp->add_option("instance", o.input, "SPP instance document")->required();
  spp->add_option("--mode", o.mode, "Safety mode")->check(CLI::IsMember({"structural", "exact", "both"}));
  spp->add_flag("--complete-suffixes", o.complete_suffixes, "Rank missing suffixes last");
  spp->add_flag("--from-game", o.from_game, "Read a game document instead of an SPP instance");

  auto* belief = app.add_subcommand("belief", "Build the belief graph");
  game_arg(belief);

  auto* dis = app.add_subcommand("dis-minor", "Search a DISAGREE minor");
  game_arg(dis);

  auto* show = app.add_subcommand("show", "Print the normalized game (json or dot)");
  game_arg(show);

  auto* generate = app.add_subcommand("generate", "Print a random game");
  generate->add_option("--family", o.family, "Instance family")
      ->check(CLI::IsMember({"game", "acyclic", "otg", "notg"}));
  generate->add_option("--max-players", o.max_players, "Player bound")->check(CLI::Range(1, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  if (!o.log_level.empty()) gd_set_log_level(o.log_level.c_str());
  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kUsage;
  }
}
