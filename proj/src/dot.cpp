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

#include "gamedyn/dot.hpp"

#include <sstream>

namespace gamedyn {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string game_to_dot(const Game& g) {
  std::ostringstream os;
  os << "digraph game {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    os << "  n" << v << " [label=" << quote(g.name(v));
    if (g.is_terminal(v))
      os << ", shape=doublecircle";
    else if (g.owner(v) != 0)
      os << ", xlabel=" << quote("p" + std::to_string(g.owner(v)));
    os << "];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  n" << e.from << " -> n" << e.to;
    if (!e.label.empty()) os << " [label=" << quote(e.label) << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string dynamics_to_dot(const DynamicsGraph& dg) {
  std::ostringstream os;
  os << "digraph " << quote(std::string(kind_name(dg.kind))) << " {\n";
  for (std::uint32_t n = 0; n < dg.graph.node_count(); ++n) {
    os << "  n" << n << " [label=" << quote(dg.names[n]);
    if (dg.graph.out(n).empty()) os << ", peripheries=2";
    os << "];\n";
  }
  for (std::uint32_t n = 0; n < dg.graph.node_count(); ++n)
    for (const auto& a : dg.graph.out(n)) os << "  n" << n << " -> n" << a.to << ";\n";
  os << "}\n";
  return os.str();
}

std::string belief_to_dot(const BeliefGraph& bg) {
  const LabelledGraph& g = bg.graph;
  std::ostringstream os;
  os << "digraph belief {\n";
  for (std::uint32_t n = 0; n < g.node_count(); ++n) {
    os << "  n" << n << " [label=" << quote(g.names[n]);
    if (bg.agreeing[n]) os << ", style=bold";
    os << "];\n";
  }
  for (std::uint32_t n = 0; n < g.node_count(); ++n) {
    for (int l = 0; l < g.label_count(); ++l)
      os << "  n" << n << " -> n" << g.next(n, l) << " [label=\"" << l << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace gamedyn
