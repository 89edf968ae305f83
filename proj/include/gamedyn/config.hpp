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

#include <cstdint>

namespace gamedyn {

/// Resource limits shared by every analysis.
struct Limits {
  std::uint64_t profile_guard = 10'000'000;
  std::uint64_t search_budget = 100'000;
  bool force = false;
};

/// Throws StateSpaceTooLarge when count exceeds the guard and force is off.
void check_guard(std::uint64_t count, const Limits& limits, const char* what);

/// Saturating product.
std::uint64_t mul_saturate(std::uint64_t a, std::uint64_t b);

}  // namespace gamedyn
