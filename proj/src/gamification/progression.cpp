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

#include "agora/gamification/progression.hpp"

#include <algorithm>
#include <string>

#include "agora/common/error.hpp"

namespace agora::gamification {
namespace {

void check(int level, std::uint64_t base_xp) {
  if (level < 1 || level > kLevelCap) {
    throw Error(ErrorCode::LevelOutOfRange, std::to_string(level));
  }
  if (base_xp < 1) throw Error(ErrorCode::InvalidArgument, "base_xp must be >= 1");
}

// floor(sqrt(x)) without floating point.
std::uint64_t isqrt(std::uint64_t x) {
  std::uint64_t lo = 0;
  std::uint64_t hi = std::min<std::uint64_t>(x, 4294967295ull) + 1;
  while (hi - lo > 1) {
    const auto mid = lo + (hi - lo) / 2;
    if (mid * mid <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

std::uint64_t level_increment(int level, std::uint64_t base_xp) {
  check(level, base_xp);
  return base_xp * (2 * static_cast<std::uint64_t>(level) - 1);
}

std::uint64_t threshold(int level, std::uint64_t base_xp) {
  check(level, base_xp);
  const auto n = static_cast<std::uint64_t>(level);
  return base_xp * n * n;
}

int level_for_xp(std::uint64_t total_xp, std::uint64_t base_xp) {
  if (base_xp < 1) throw Error(ErrorCode::InvalidArgument, "base_xp must be >= 1");
  const auto level = isqrt(total_xp / base_xp);
  return static_cast<int>(std::min<std::uint64_t>(level, kLevelCap));
}

}  // namespace agora::gamification
