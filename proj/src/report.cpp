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

#include "report.hpp"

#include <algorithm>
#include <sstream>

#include "gamedyn/error.hpp"
#include "gamedyn/relations.hpp"
#include "gamedyn/strategy.hpp"

namespace gamedyn::report {

using detail::json;

namespace {

bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

void render(std::ostringstream& os, const json& j, int indent);

void render_entry(std::ostringstream& os, const std::string& key, const json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_scalar(value)) {
    os << pad << key << ": " << scalar_text(value) << "\n";
  } else if (value.is_array() && std::all_of(value.begin(), value.end(), is_scalar)) {
    os << pad << key << ": [";
    for (std::size_t i = 0; i < value.size(); ++i) os << (i ? ", " : "") << scalar_text(value[i]);
    os << "]\n";
  } else {
    os << pad << key << ":\n";
    render(os, value, indent + 2);
  }
}

void render(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) render_entry(os, key, value, indent);
    return;
  }
  for (const auto& item : j) {
    if (item.is_object() && !item.empty()) {
      std::ostringstream inner;
      render(inner, item, indent + 2);
      std::string text = inner.str();
      text.replace(static_cast<std::size_t>(indent), 2, "- ");
      os << text;
    } else if (is_scalar(item)) {
      os << pad << "- " << scalar_text(item) << "\n";
    } else if (item.is_array() && std::all_of(item.begin(), item.end(), is_scalar)) {
      os << pad << "- [";
      for (std::size_t i = 0; i < item.size(); ++i) os << (i ? ", " : "") << scalar_text(item[i]);
      os << "]\n";
    } else {
      os << pad << "-\n";
      render(os, item, indent + 2);
    }
  }
}

json node_names(const DynamicsGraph& dg, const std::vector<NodeId>& nodes) {
  json out = json::array();
  for (NodeId n : nodes) out.push_back(dg.names[n]);
  return out;
}

json players_of(PlayerSet s, int players) {
  json out = json::array();
  for (int i = 1; i <= players; ++i)
    if (s & player_bit(i)) out.push_back(i);
  return out;
}

json witness_json(const DynamicsGraph& dg, const CycleWitness& w) {
  return json{{"prefix", node_names(dg, w.path_to_cycle)}, {"cycle", node_names(dg, w.cycle)}};
}

json game_json(const Game& g) { return json::parse(game_to_json(g)); }

json script_json(const DeletionScript& s) { return json::parse(script_to_json(s)); }

json wheel_json(const Game& g, const DisputeWheel& w) {
  json spokes = json::array();
  for (std::size_t i = 0; i < w.pivots.size(); ++i) {
    spokes.push_back(json{{"pivot", g.name(w.pivots[i])},
                          {"direct", detail::names_to_json(g, w.direct[i].stem)},
                          {"connecting", detail::names_to_json(g, w.connecting[i])}});
  }
  return json{{"pivots", detail::names_to_json(g, w.pivots)}, {"spokes", spokes}};
}

json profiles_json(const Game& g, const std::vector<Profile>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(profile_name(g, p));
  return out;
}

json header(const Game& g) {
  return json{{"players", g.player_count()}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
}

}  // namespace

std::string render_text(const json& doc) {
  std::ostringstream os;
  render(os, doc, 0);
  return os.str();
}

Report dynamics(const DynamicsGraph& dg) {
  json transitions = json::array();
  for (NodeId n = 0; n < dg.graph.node_count(); ++n)
    for (const Arc& a : dg.graph.out(n))
      transitions.push_back(json{{"from", dg.names[n]}, {"to", dg.names[a.to]},
                                 {"players", players_of(a.changed, dg.players)}});
  json doc{{"kind", kind_name(dg.kind)},
           {"nodes", dg.graph.node_count()},
           {"edges", dg.graph.edge_count()},
           {"profiles", dg.names},
           {"transitions", transitions},
           {"equilibria", node_names(dg, equilibria(dg.graph))}};
  return {doc, Verdict::Ok};
}

Report analyze(const DynamicsGraph& dg, const std::string& check) {
  json doc{{"kind", kind_name(dg.kind)},
           {"check", check},
           {"nodes", dg.graph.node_count()},
           {"edges", dg.graph.edge_count()}};
  Report r;
  if (check == "termination") {
    const auto cycle = find_cycle(dg.graph);
    doc["terminates"] = !cycle;
    doc["cycle"] = cycle ? witness_json(dg, *cycle) : json(nullptr);
    r.verdict = cycle ? Verdict::Violated : Verdict::Ok;
  } else if (check == "fair-termination") {
    const FairnessReport fr = find_fair_cycle(dg.graph, dg.players);
    doc["fairly_terminates"] = !fr.fair;
    doc["fair_cycle"] = fr.witness ? witness_json(dg, *fr.witness) : json(nullptr);
    json clauses = json::array();
    for (std::size_t i = 0; i < fr.per_player.size(); ++i)
      clauses.push_back(json{{"player", i + 1}, {"clause", fair_clause_name(fr.per_player[i])}});
    doc["clauses"] = clauses;
    json blocked = json::array();
    for (const auto& b : fr.blocked)
      blocked.push_back(json{{"component", node_names(dg, b.component)}, {"players", b.players}});
    doc["blocked"] = blocked;
    r.verdict = fr.fair ? Verdict::Violated : Verdict::Ok;
  } else if (check == "equilibria") {
    const auto eq = equilibria(dg.graph);
    doc["count"] = eq.size();
    doc["equilibria"] = node_names(dg, eq);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown check '" + check + "'");
  }
  r.doc = std::move(doc);
  return r;
}

Report minor(const Game& source, const MinorResult& m, const Limits& limits) {
  json sims = json::array();
  Report r;
  std::vector<DynamicsKind> kinds{DynamicsKind::P1, DynamicsKind::PC};
  if (source.is_acyclic()) kinds.insert(kinds.begin(), DynamicsKind::OneStep);
  for (DynamicsKind k : kinds) {
    const DynamicsGraph big = build_dynamics(source, k, limits);
    const DynamicsGraph small = build_dynamics(m.game, k, limits);
    const LargestSimulation ls = largest_simulation(small.graph, big.graph);
    json entry{{"kind", kind_name(k)}, {"simulated", ls.full_domain}, {"pairs", ls.relation.size()}};
    if (k != DynamicsKind::OneStep)
      entry["constructive_witness"] =
          is_simulation(small.graph, big.graph, minor_witness_relation(source, m)).holds;
    if (!ls.full_domain) r.verdict = Verdict::Violated;
    sims.push_back(std::move(entry));
  }
  r.doc = json{{"steps", m.provenance}, {"minor", game_json(m.game)}, {"simulation", sims}};
  return r;
}

Report dominated(const Game& g, std::pair<VertexId, VertexId> e1, std::pair<VertexId, VertexId> e2,
                 const Limits& limits) {
  const bool d = is_dominated(g, e1, e2, limits);
  json doc{{"edge", g.name(e1.first) + "->" + g.name(e1.second)},
           {"sibling", g.name(e2.first) + "->" + g.name(e2.second)},
           {"dominated", d}};
  return {doc, d ? Verdict::Ok : Verdict::Violated};
}

Report belief(const BeliefGraph& bg) {
  const LabelledGraph& g = bg.graph;
  auto name = [&](NodeId n) { return g.names[n]; };
  json sink_names = json::array();
  for (NodeId n : sinks(g)) sink_names.push_back(name(n));
  json doc{{"nodes", g.node_count()}, {"labels", g.label_count()}, {"sinks", sink_names}};
  const auto two = reachable_two_sinks(g);
  doc["two_sinks"] = two ? json{{"from", name(two->from)}, {"first", name(two->first)}, {"second", name(two->second)}}
                         : json(nullptr);
  const DiamondResult d = check_diamond(g);
  doc["diamond"] = d.holds ? json{{"holds", true}}
                           : json{{"holds", false}, {"node", name(d.node)}, {"a", d.a}, {"b", d.b}};
  if (const auto c = find_lfair_cycle(g)) {
    json nodes = json::array();
    for (NodeId n : c->nodes) nodes.push_back(name(n));
    doc["lfair_cycle"] = json{{"nodes", nodes}, {"labels", c->labels}, {"validated", validate_lfair_cycle(g, *c)}};
  } else {
    doc["lfair_cycle"] = nullptr;
  }
  return {doc, Verdict::Ok};
}

Report dis_minor(const Game& g, const DisMinorResult& r) {
  json doc{{"found", r.found}, {"method", r.method}, {"expansions", r.expansions}};
  if (r.found) {
    doc["script"] = script_json(r.script);
    doc["minor"] = game_json(apply_script(g, r.script).game);
  }
  return {doc, r.found ? Verdict::Violated : Verdict::Ok};
}

Report spp_validate(const OneTargetGame& otg) {
  const auto diags = validate_otg(otg);
  json axioms = json::array();
  for (const auto& d : diags) axioms.push_back(json{{"axiom", otg_axiom_name(d.axiom)}, {"witness", d.witness}});
  json doc = header(otg.game);
  doc["target"] = otg.target == kNoVertex ? json(nullptr) : json(otg.game.name(otg.target));
  doc["valid"] = diags.empty();
  doc["neighbour"] = diags.empty() && is_notg(otg);
  doc["violations"] = axioms;
  return {doc, diags.empty() ? Verdict::Ok : Verdict::Violated};
}

Report spp_dw(const OneTargetGame& otg) {
  const auto w = find_dispute_wheel(otg);
  json doc{{"dispute_wheel", w ? wheel_json(otg.game, *w) : json(nullptr)}};
  return {doc, w ? Verdict::Violated : Verdict::Ok};
}

Report spp_sdw(const OneTargetGame& otg, const Limits& limits) {
  const auto w = find_sdw(otg, limits);
  json doc{{"strong_dispute_wheel", w ? wheel_json(otg.game, *w) : json(nullptr)}};
  if (w) {
    const SdwMinor m = extract_sdw_minor(otg, *w);
    doc["minor"] = json{{"script", script_json(m.script)},
                        {"sigma1", profile_name(m.game, m.sigma1)},
                        {"sigma2", profile_name(m.game, m.sigma2)},
                        {"game", game_json(m.game)}};
  }
  return {doc, w ? Verdict::Violated : Verdict::Ok};
}

Report spp_safety(const OneTargetGame& otg, SafetyMode mode, const Limits& limits) {
  const SafetyVerdict v = safety_verdict(otg, mode, limits);
  auto status = [](const std::optional<SafetyStatus>& s) {
    return s ? json(safety_status_name(*s)) : json(nullptr);
  };
  json doc{{"mode", safety_mode_name(mode)},
           {"status", safety_status_name(v.status)},
           {"method", v.method},
           {"structural", status(v.structural)},
           {"exact", status(v.exact)},
           {"wheel", v.wheel ? wheel_json(otg.game, *v.wheel) : json(nullptr)},
           {"cycle", profiles_json(otg.game, v.cycle)},
           {"equilibria", profiles_json(otg.game, v.equilibria)}};
  Verdict verdict = Verdict::Unknown;
  if (is_safe(v.status)) verdict = Verdict::Ok;
  if (is_unsafe(v.status)) verdict = Verdict::Violated;
  return {doc, verdict};
}

}  // namespace gamedyn::report
