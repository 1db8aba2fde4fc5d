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

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "agora/core/event.hpp"
#include "agora/gamification/progression.hpp"

namespace agora::gamification {

/// Engagement loop: do `verb` `required_count` times inside a rolling window
/// of `window_days` (anchored at the first qualifying event) for a one-off
/// bonus per window.
struct Mission {
  std::string mission_id;
  Verb verb = Verb::Post;
  std::uint32_t required_count = 1;
  std::uint32_t window_days = 1;
  std::uint64_t bonus_xp = 1;

  friend bool operator==(const Mission&, const Mission&) = default;
};

struct GamificationConfig {
  std::uint64_t base_xp = 10;
  std::map<Verb, std::uint64_t> action_points = {
      {Verb::Post, 10},        {Verb::CreateDiscussion, 8}, {Verb::SurveyAnswer, 5},
      {Verb::Share, 3},        {Verb::Comment, 2},          {Verb::Like, 1},
      {Verb::Chat, 0},         {Verb::Register, 0},         {Verb::CreateCommunity, 0},
      {Verb::ProfileUpdate, 0},
  };
  std::vector<Mission> missions = {
      {"survey-streak", Verb::SurveyAnswer, 3, 7, 15},
      {"weekly-writer", Verb::Post, 5, 7, 25},
  };
  std::array<std::string, kLevelCap> medal_names = {
      "Newcomer", "Participant", "Contributor", "Collaborator", "Supporter",
      "Mentor",   "Pillar",      "Luminary",    "Legend",
  };

  std::uint64_t points_for(Verb verb) const;

  /// Throws InvalidArgument on any broken invariant.
  void validate() const;

  friend bool operator==(const GamificationConfig&, const GamificationConfig&) = default;
};

/// JSON document, every key optional:
///   {"base_xp": 10, "action_points": {"post": 10, ...},
///    "missions": [{"mission_id": ..., "verb": ..., "required_count": ...,
///                  "window_days": ..., "bonus_xp": ...}],
///    "medal_names": [nine strings], "level_cap": 9}
GamificationConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const GamificationConfig& config);
GamificationConfig load_config(const std::filesystem::path& path);

}  // namespace agora::gamification
