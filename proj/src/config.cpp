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

#include "gamedyn/config.hpp"

#include <limits>
#include <string>

#include "gamedyn/error.hpp"

namespace gamedyn {

void check_guard(std::uint64_t count, const Limits& limits, const char* what) {
  if (limits.force || count <= limits.profile_guard) return;
  const bool saturated = count == std::numeric_limits<std::uint64_t>::max();
  throw Error(ErrorCode::StateSpaceTooLarge,
              std::string(what) + ": " + (saturated ? "more than 2^64" : std::to_string(count)) +
                  " states exceed the guard of " + std::to_string(limits.profile_guard));
}

std::uint64_t mul_saturate(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace gamedyn
