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

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "gamedyn/analysis.hpp"
#include "gamedyn/dynamics.hpp"
#include "gamedyn/game.hpp"

namespace testing {

inline std::string slurp(const std::string& name) {
  std::ifstream in(std::string(GAMEDYN_FIXTURES) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline gamedyn::Game fixture(const std::string& name) { return gamedyn::parse_game(slurp(name)); }

inline gamedyn::NodeId node(const gamedyn::DynamicsGraph& dg, const std::string& name) {
  for (std::size_t i = 0; i < dg.names.size(); ++i)
    if (dg.names[i] == name) return static_cast<gamedyn::NodeId>(i);
  throw std::runtime_error("no node " + name);
}

inline bool edge(const gamedyn::DynamicsGraph& dg, const std::string& a, const std::string& b) {
  return dg.graph.has_edge(node(dg, a), node(dg, b));
}

}  // namespace testing
