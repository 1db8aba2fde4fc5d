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

#include "agora/core/event.hpp"

#include "agora/common/error.hpp"

namespace agora {

std::string_view to_string(Verb verb) noexcept {
  switch (verb) {
    case Verb::Register: return "register";
    case Verb::CreateCommunity: return "create_community";
    case Verb::CreateDiscussion: return "create_discussion";
    case Verb::Post: return "post";
    case Verb::Comment: return "comment";
    case Verb::Like: return "like";
    case Verb::Share: return "share";
    case Verb::Chat: return "chat";
    case Verb::SurveyAnswer: return "survey_answer";
    case Verb::ProfileUpdate: return "profile_update";
  }
  return "unknown";
}

std::optional<Verb> parse_verb(std::string_view text) noexcept {
  for (Verb v : kAllVerbs) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

void to_json(nlohmann::json& j, const InteractionEvent& e) {
  j = nlohmann::json{
      {"event_id", e.event_id},
      {"occurred_at", format_iso8601(e.occurred_at)},
      {"actor_id", e.actor_id},
      {"verb", to_string(e.verb)},
      {"object_id", e.object_id},
      {"object_owner_id", nullptr},
  };
  if (e.object_owner_id) j["object_owner_id"] = *e.object_owner_id;
}

void from_json(const nlohmann::json& j, InteractionEvent& e) {
  e.event_id = j.at("event_id").get<EventId>();
  const auto ts = parse_iso8601(j.at("occurred_at").get<std::string>());
  if (!ts) throw Error(ErrorCode::BadRequest, "bad occurred_at");
  e.occurred_at = *ts;
  e.actor_id = j.at("actor_id").get<UserId>();
  const auto verb = parse_verb(j.at("verb").get<std::string>());
  if (!verb) throw Error(ErrorCode::UnknownKind, j.at("verb").get<std::string>());
  e.verb = *verb;
  e.object_id = j.at("object_id").get<std::string>();
  const auto& owner = j.at("object_owner_id");
  if (owner.is_null()) {
    e.object_owner_id.reset();
  } else {
    e.object_owner_id = owner.get<UserId>();
  }
}

}  // namespace agora
