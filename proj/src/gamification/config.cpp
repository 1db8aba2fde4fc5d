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

#include "agora/gamification/config.hpp"

#include <fstream>
#include <set>

#include "agora/common/error.hpp"

namespace agora::gamification {

using nlohmann::json;

std::uint64_t GamificationConfig::points_for(Verb verb) const {
  auto it = action_points.find(verb);
  return it == action_points.end() ? 0 : it->second;
}

void GamificationConfig::validate() const {
  if (base_xp < 1) throw Error(ErrorCode::InvalidArgument, "base_xp must be >= 1");
  std::set<std::string> ids;
  for (const auto& m : missions) {
    if (m.mission_id.empty() || !ids.insert(m.mission_id).second) {
      throw Error(ErrorCode::InvalidArgument, "mission ids must be non-empty and unique");
    }
    if (m.required_count < 1 || m.window_days < 1 || m.bonus_xp < 1) {
      throw Error(ErrorCode::InvalidArgument, "mission " + m.mission_id);
    }
  }
  for (const auto& name : medal_names) {
    if (name.empty()) throw Error(ErrorCode::InvalidArgument, "medal names must be non-empty");
  }
}

GamificationConfig config_from_json(const json& j) {
  GamificationConfig c;
  try {
    if (j.contains("level_cap") && j.at("level_cap").get<int>() != kLevelCap) {
      throw Error(ErrorCode::InvalidArgument, "level_cap is fixed at 9");
    }
    if (j.contains("base_xp")) {
      const auto b = j.at("base_xp").get<std::int64_t>();
      if (b < 1) throw Error(ErrorCode::InvalidArgument, "base_xp must be >= 1");
      c.base_xp = static_cast<std::uint64_t>(b);
    }
    if (j.contains("action_points")) {
      for (const auto& [name, value] : j.at("action_points").items()) {
        const auto verb = parse_verb(name);
        if (!verb) throw Error(ErrorCode::InvalidArgument, "unknown verb " + name);
        const auto points = value.get<std::int64_t>();
        if (points < 0) throw Error(ErrorCode::InvalidArgument, "negative points for " + name);
        c.action_points[*verb] = static_cast<std::uint64_t>(points);
      }
    }
    if (j.contains("missions")) {
      c.missions.clear();
      for (const auto& m : j.at("missions")) {
        const auto verb = parse_verb(m.at("verb").get<std::string>());
        if (!verb) throw Error(ErrorCode::InvalidArgument, "unknown mission verb");
        auto positive = [&](const char* key) {
          const auto v = m.at(key).get<std::int64_t>();
          if (v < 1) throw Error(ErrorCode::InvalidArgument, std::string(key) + " must be >= 1");
          return static_cast<std::uint64_t>(v);
        };
        c.missions.push_back(Mission{m.at("mission_id").get<std::string>(), *verb,
                                     static_cast<std::uint32_t>(positive("required_count")),
                                     static_cast<std::uint32_t>(positive("window_days")),
                                     positive("bonus_xp")});
      }
    }
    if (j.contains("medal_names")) {
      const auto names = j.at("medal_names").get<std::vector<std::string>>();
      if (names.size() != kLevelCap) {
        throw Error(ErrorCode::InvalidArgument, "exactly nine medal names required");
      }
      std::copy(names.begin(), names.end(), c.medal_names.begin());
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, e.what());
  }
  c.validate();
  return c;
}

json config_to_json(const GamificationConfig& config) {
  json points = json::object();
  for (const auto& [verb, value] : config.action_points) points[std::string(to_string(verb))] = value;
  json missions = json::array();
  for (const auto& m : config.missions) {
    missions.push_back({{"mission_id", m.mission_id},
                        {"verb", to_string(m.verb)},
                        {"required_count", m.required_count},
                        {"window_days", m.window_days},
                        {"bonus_xp", m.bonus_xp}});
  }
  return json{{"base_xp", config.base_xp},
              {"level_cap", kLevelCap},
              {"action_points", points},
              {"missions", missions},
              {"medal_names", config.medal_names}};
}

GamificationConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, e.what());
  }
  return config_from_json(j);
}

}  // namespace agora::gamification
