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

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "agora/core/platform.hpp"
#include "agora/research/graph.hpp"
#include "agora/surveys/survey.hpp"

namespace agora::research {

/// Half-open [from, to) on occurred_at; either end may be open.
struct TimeRange {
  std::optional<Timestamp> from;
  std::optional<Timestamp> to;

  bool contains(Timestamp ts) const;
};

/// Parses "<from>/<to>" with ISO-8601 UTC ends, either side may be empty.
/// Throws InvalidRange.
TimeRange parse_time_range(std::string_view text);

// --- wire formats -----------------------------------------------------------

/// Line-delimited JSON: one header object, then one event object per line
/// with fields event_id, occurred_at, actor_id, verb, object_id,
/// object_owner_id.
std::string format_events(const std::vector<InteractionEvent>& events, EventId snapshot_event_id);
/// Inverse of format_events (header is validated and skipped).
std::vector<InteractionEvent> parse_events(std::string_view text);

/// CSV with header: user_id,handle,role,created_at,terms_version,terms_accepted_at
std::string format_users(const std::vector<User>& users);

/// `# directed interaction graph, kinds=<list>, snapshot_event_id=<id>` then
/// `src<TAB>dst<TAB>weight` per edge.
std::string format_graph(const SocialGraph& graph, const std::set<Verb>& kinds,
                         EventId snapshot_event_id);

nlohmann::json metrics_json(const GraphMetrics& metrics, const std::set<Verb>& kinds,
                            EventId snapshot_event_id);

// --- consent-gated access -----------------------------------------------------

struct ResearcherGrant {
  UserId user_id;
  std::string compromise_term_doc_hash;
  Timestamp signed_at{};
  UserId granted_by;
  bool active = true;
};

void to_json(nlohmann::json& j, const ResearcherGrant& g);
void from_json(const nlohmann::json& j, ResearcherGrant& g);

struct EventExport {
  EventId snapshot_event_id = 0;
  std::vector<InteractionEvent> events;
};

struct GraphExport {
  EventId snapshot_event_id = 0;
  std::set<Verb> kinds;
  SocialGraph graph;
};

/// Unrestricted data access for researchers holding an active grant backed by
/// a signed compromise term. Every export reads a ledger snapshot fixed at the
/// start of the call.
class ResearchService {
 public:
  ResearchService(Platform& platform, const surveys::SurveyService& surveys)
      : platform_(platform), surveys_(surveys) {}

  ResearcherGrant grant_researcher(const UserId& admin, const UserId& user,
                                   const std::string& signed_term_doc);
  ResearcherGrant revoke_grant(const UserId& admin, const UserId& user);
  std::optional<ResearcherGrant> grant_of(const UserId& user) const;
  bool has_active_grant(const UserId& user) const;

  EventExport export_events(const UserId& caller,
                            const std::optional<TimeRange>& range = std::nullopt) const;
  std::vector<User> export_users(const UserId& caller) const;
  GraphExport export_graph(const UserId& caller, const std::set<Verb>& kinds) const;
  GraphMetrics metrics(const UserId& caller, const std::set<Verb>& kinds) const;
  std::vector<surveys::SurveyResponse> export_survey_responses(const UserId& caller,
                                                               const SurveyId& survey) const;
  std::uint64_t post_success(const UserId& caller, const PostId& post,
                             const SuccessWeights& weights = {}) const;

 private:
  void require_grant(const UserId& caller) const;
  void require_admin(const UserId& caller) const;

  Platform& platform_;
  const surveys::SurveyService& surveys_;
};

}  // namespace agora::research
