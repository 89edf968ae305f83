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

#include "theorems.hpp"

#include <sstream>

#include "json.hpp"

#include "gamedyn/analysis.hpp"
#include "gamedyn/dynamics.hpp"
#include "gamedyn/generate.hpp"
#include "gamedyn/minors.hpp"
#include "gamedyn/relations.hpp"
#include "gamedyn/spp.hpp"
#include "gamedyn/strategy.hpp"
#include "oracles.hpp"

namespace suites {

using namespace gamedyn;

namespace {

Rng rng_for(std::uint64_t seed, int instance) {
  return Rng(seed * 1000003ULL + static_cast<std::uint64_t>(instance));
}

void violation(Result& r, int instance, const std::string& what) {
  if (r.violations++ == 0) r.first_violation = "instance " + std::to_string(instance) + ": " + what;
  r.violating.push_back(instance);
  r.details.push_back(what);
}

std::string compact(const Game& g) { return nlohmann::json::parse(game_to_json(g)).dump(); }

bool fair(const Game& g, DynamicsKind k) {
  const auto dg = build_dynamics(g, k);
  return find_fair_cycle(dg.graph, dg.players).fair;
}

OtgShape otg_shape(int instance, int max_players, bool neighbour) {
  OtgShape s;
  s.max_players = max_players;
  s.neighbour = neighbour;
  s.edge_probability = instance % 3 == 0 ? 0.7 : 0.5;
  return s;
}

}  // namespace

Result simulation_of_minors(std::uint64_t seed, int count) {
  Result r;
  r.name = "minor simulation (1, p1, pc)";
  for (int i = 0; i < count; ++i) {
    Rng rng = rng_for(seed, i);
    GameShape shape;
    shape.acyclic = i % 2 == 1;
    if (shape.acyclic) {
      shape.max_vertices = 3;
      shape.max_out = 2;
    }
    const Game g = random_game(rng, shape);
    const DeletionScript s = random_script(g, rng);
    const MinorResult m = apply_script(g, s);
    ++r.instances;
    ++r.exercised;
    std::vector<DynamicsKind> kinds{DynamicsKind::P1, DynamicsKind::PC};
    if (shape.acyclic) kinds.push_back(DynamicsKind::OneStep);
    for (DynamicsKind k : kinds) {
      const auto big = build_dynamics(g, k);
      const auto small = build_dynamics(m.game, k);
      if (!largest_simulation(small.graph, big.graph).full_domain)
        violation(r, i, std::string("kind ") + std::string(kind_name(k)) + " script " + script_to_json(s));
    }
  }
  return r;
}

Result dominant_minor_fairness(std::uint64_t seed, int count) {
  Result r;
  r.name = "dominant minor fair termination (bp1, bpc)";
  for (int i = 0; i < count; ++i) {
    Rng rng = rng_for(seed, i);
    const Game g = random_game(rng);
    const DeletionScript s = random_dominant_script(g, rng);
    ++r.instances;
    if (s.empty()) continue;
    ++r.exercised;
    const Game m = apply_script(g, s).game;
    for (DynamicsKind k : {DynamicsKind::BP1, DynamicsKind::BPC})
      if (fair(g, k) != fair(m, k))
        violation(r, i, std::string("kind ") + std::string(kind_name(k)) + " script " + script_to_json(s) +
                            " game " + compact(g));
  }
  return r;
}

Result unique_equilibrium(std::uint64_t seed, int count) {
  Result r;
  r.name = "unique equilibrium without fair bpc cycle";
  for (int i = 0; i < count; ++i) {
    Rng rng = rng_for(seed, i);
    const auto otg = random_otg(rng, otg_shape(i, 4, i % 2 == 0));
    ++r.instances;
    const auto dg = build_dynamics(otg.game, DynamicsKind::BPC);
    if (find_fair_cycle(dg.graph, dg.players).fair) continue;
    ++r.exercised;
    std::vector<Profile> eq;
    for (NodeId n : equilibria(dg.graph)) eq.push_back(dg.states[n]);
    const std::size_t stable = count_assignments(otg, eq);
    if (stable != 1) violation(r, i, std::to_string(stable) + " stable assignments in " + compact(otg.game));
  }
  return r;
}

Result no_wheel_fair_termination(std::uint64_t seed, int count) {
  Result r;
  r.name = "no dispute wheel implies bpc fair termination";
  for (int i = 0; i < count; ++i) {
    Rng rng = rng_for(seed, i);
    const auto otg = random_otg(rng, otg_shape(i, 5, i % 2 == 0));
    ++r.instances;
    if (find_dispute_wheel(otg)) continue;
    ++r.exercised;
    if (fair(otg.game, DynamicsKind::BPC)) violation(r, i, compact(otg.game));
  }
  return r;
}

Result strong_wheel_cycle(std::uint64_t seed, int count) {
  Result r;
  r.name = "strong dispute wheel implies a pc cycle";
  for (int i = 0; i < count; ++i) {
    Rng rng = rng_for(seed, i);
    const auto otg = random_otg(rng, otg_shape(i, 5, i % 2 == 0));
    ++r.instances;
    const auto w = find_sdw(otg);
    if (!w) continue;
    ++r.exercised;
    const auto big = build_dynamics(otg.game, DynamicsKind::PC);
    if (!find_cycle(big.graph)) {
      violation(r, i, "no pc cycle in " + compact(otg.game));
      continue;
    }
    const SdwMinor m = extract_sdw_minor(otg, *w);
    const auto small = build_dynamics(m.game, DynamicsKind::PC);
    ProfileSpace space(m.game);
    const auto a = static_cast<NodeId>(space.index_of(m.sigma1));
    const auto b = static_cast<NodeId>(space.index_of(m.sigma2));
    if (!small.graph.has_edge(a, b) || !small.graph.has_edge(b, a))
      violation(r, i, "minor profiles do not alternate in " + compact(otg.game));
    else if (!largest_simulation(small.graph, big.graph).full_domain)
      violation(r, i, "minor not simulated in " + compact(otg.game));
  }
  return r;
}

Result strong_wheel_equivalence(std::uint64_t seed, int count) {
  Result r;
  r.name = "strong dispute wheel iff fair pc cycle (neighbour games)";
  for (int i = 0; i < count; ++i) {
    Rng rng = rng_for(seed, i);
    const auto otg = random_otg(rng, otg_shape(i, 5, true));
    ++r.instances;
    ++r.exercised;
    const bool sdw = find_sdw(otg).has_value();
    const bool f = fair(otg.game, DynamicsKind::PC);
    if (sdw != f)
      violation(r, i, std::string("sdw=") + (sdw ? "yes" : "no") + " fair=" + (f ? "yes" : "no") + " " +
                          compact(otg.game));
  }
  return r;
}

Result dis_minor_equivalence(std::uint64_t seed, int count) {
  Result r;
  r.name = "dis minor iff fair pc cycle (neighbour games)";
  for (int i = 0; i < count; ++i) {
    Rng rng = rng_for(seed, i);
    const auto otg = random_otg(rng, otg_shape(i, 5, true));
    ++r.instances;
    ++r.exercised;
    const bool dis = find_dis_minor(otg.game).found;
    const bool f = fair(otg.game, DynamicsKind::PC);
    if (dis != f)
      violation(r, i, std::string("dis=") + (dis ? "yes" : "no") + " fair=" + (f ? "yes" : "no") + " " +
                          compact(otg.game));
  }
  return r;
}

Result fair_cycle_oracle(std::uint64_t seed, int count) {
  Result r;
  r.name = "fair cycle search against brute force";
  for (int i = 0; i < count; ++i) {
    Rng rng = rng_for(seed, i);
    GameShape shape;
    shape.max_profiles = 64;
    const Game g = random_game(rng, shape);
    ++r.instances;
    ++r.exercised;
    for (DynamicsKind k : {DynamicsKind::P1, DynamicsKind::BP1, DynamicsKind::PC, DynamicsKind::BPC}) {
      const auto dg = build_dynamics(g, k);
      const auto ref = oracle::positional(g, k);
      if (oracle::edges_of(dg) != ref) {
        violation(r, i, std::string("kind ") + std::string(kind_name(k)) + ": graphs differ");
        continue;
      }
      const auto lib = find_fair_cycle(dg.graph, dg.players);
      if (lib.fair != oracle::has_fair_cycle(dg.graph, dg.players) ||
          (lib.fair && !validate_fairness(dg.graph, dg.players, lib)))
        violation(r, i, std::string("kind ") + std::string(kind_name(k)) + " " + compact(g));
    }
  }
  return r;
}

Result dominant_minor_fairness_one_vertex(std::uint64_t seed, int count) {
  Result r;
  r.name = "dominant minor fair termination, one vertex per player";
  for (int i = 0; i < count; ++i) {
    Rng rng = rng_for(seed, i);
    const Game g = random_game(rng);
    const DeletionScript s = random_dominant_script(g, rng);
    ++r.instances;
    bool single = true;
    for (int p = 1; p <= g.player_count(); ++p) single = single && g.vertices_of(p).size() <= 1;
    if (s.empty() || !single) continue;
    ++r.exercised;
    const Game m = apply_script(g, s).game;
    for (DynamicsKind k : {DynamicsKind::BP1, DynamicsKind::BPC})
      if (fair(g, k) != fair(m, k))
        violation(r, i, std::string("kind ") + std::string(kind_name(k)) + " script " + script_to_json(s));
  }
  return r;
}

Result fair_cycle_needs_strong_wheel(std::uint64_t seed, int count) {
  Result r;
  r.name = "fair pc cycle implies a strong dispute wheel (neighbour games)";
  for (int i = 0; i < count; ++i) {
    Rng rng = rng_for(seed, i);
    const auto otg = random_otg(rng, otg_shape(i, 5, true));
    ++r.instances;
    if (!fair(otg.game, DynamicsKind::PC)) continue;
    ++r.exercised;
    if (!find_sdw(otg)) violation(r, i, compact(otg.game));
  }
  return r;
}

Result dis_minor_soundness(std::uint64_t seed, int count) {
  Result r;
  r.name = "dis minor scripts replay, need a strong wheel, exist for two pivots";
  for (int i = 0; i < count; ++i) {
    Rng rng = rng_for(seed, i);
    const auto otg = random_otg(rng, otg_shape(i, 5, true));
    ++r.instances;
    const auto dis = find_dis_minor(otg.game);
    const auto w = find_sdw(otg);
    if (!dis.found && !(w && w->pivots.size() == 2)) continue;
    ++r.exercised;
    if (dis.found && !is_dis_game(apply_script(otg.game, dis.script).game))
      violation(r, i, "script does not yield the two-player pattern: " + script_to_json(dis.script));
    else if (dis.found && !w)
      violation(r, i, "dis minor without strong wheel " + compact(otg.game));
    else if (!dis.found)
      violation(r, i, "two-pivot strong wheel without dis minor " + compact(otg.game));
  }
  return r;
}

std::vector<Result> all_theorems(std::uint64_t seed, int count) {
  return {simulation_of_minors(seed, count),     dominant_minor_fairness(seed, count),
          unique_equilibrium(seed, count),       no_wheel_fair_termination(seed, count),
          strong_wheel_cycle(seed, count),       strong_wheel_equivalence(seed, count),
          dis_minor_equivalence(seed, count)};
}

}  // namespace suites
