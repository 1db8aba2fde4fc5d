// Copyright 2026 The Agora Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace agora::gamification {

/// Nine levels, one medal per level.
inline constexpr int kLevelCap = 9;

/// XP needed to go from level k-1 to level k: B(2k-1). Successive
/// increments differ by exactly 2B.
std::uint64_t level_increment(int level, std::uint64_t base_xp);

/// Cumulative XP needed to reach `level` (1..9): B·n².
std::uint64_t threshold(int level, std::uint64_t base_xp);

/// Largest level n in [0, 9] with threshold(n) <= total_xp.
int level_for_xp(std::uint64_t total_xp, std::uint64_t base_xp);

}  // namespace agora::gamification
