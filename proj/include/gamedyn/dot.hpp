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

#include <string>

#include "gamedyn/dynamics.hpp"
#include "gamedyn/game.hpp"

namespace gamedyn {

/// Graphviz text. Nodes are emitted in id order.
std::string game_to_dot(const Game& g);
std::string dynamics_to_dot(const DynamicsGraph& dg);
/// One edge per node and label 0..n.
std::string belief_to_dot(const BeliefGraph& bg);

}  // namespace gamedyn
