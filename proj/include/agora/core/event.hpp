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
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "agora/common/ids.hpp"
#include "agora/common/time.hpp"

namespace agora {

/// Every user action the platform records. There is deliberately no update
/// or delete verb: the ledger only grows.
enum class Verb {
  Register,
  CreateCommunity,
  CreateDiscussion,
  Post,
  Comment,
  Like,
  Share,
  Chat,
  SurveyAnswer,
  ProfileUpdate,
};

inline constexpr std::array kAllVerbs = {
    Verb::Register, Verb::CreateCommunity, Verb::CreateDiscussion, Verb::Post,
    Verb::Comment,  Verb::Like,            Verb::Share,            Verb::Chat,
    Verb::SurveyAnswer, Verb::ProfileUpdate,
};

std::string_view to_string(Verb verb) noexcept;
std::optional<Verb> parse_verb(std::string_view text) noexcept;

struct InteractionEvent {
  EventId event_id = 0;
  UserId actor_id;
  Verb verb = Verb::Register;
  std::string object_id;
  std::optional<UserId> object_owner_id;  // absent for register / profile_update
  Timestamp occurred_at{};

  friend bool operator==(const InteractionEvent&, const InteractionEvent&) = default;
};

void to_json(nlohmann::json& j, const InteractionEvent& e);
void from_json(const nlohmann::json& j, InteractionEvent& e);

}  // namespace agora
