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
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "agora/core/platform.hpp"

namespace agora::surveys {

inline constexpr std::size_t kMinOptions = 2;
inline constexpr std::size_t kMaxOptions = 10;
inline constexpr std::size_t kMaxQuestionChars = 500;
inline constexpr std::size_t kMaxOptionChars = 200;

enum class SurveyStatus { Open, Closed };

struct Survey {
  SurveyId survey_id;
  CommunityId community_id;
  UserId creator_id;
  std::string question;
  std::vector<std::string> options;
  Timestamp opens_at{};
  std::optional<Timestamp> closes_at;
  SurveyStatus status = SurveyStatus::Open;

  /// Closed explicitly or past closes_at.
  bool is_open_at(Timestamp now) const;
};

struct SurveyResponse {
  SurveyId survey_id;
  UserId respondent_id;
  std::size_t option_index = 0;
  Timestamp answered_at{};
};

struct SurveyResults {
  SurveyId survey_id;
  std::vector<std::uint64_t> counts;
  std::vector<double> fractions;
  std::uint64_t total_respondents = 0;
};

/// count[i] = responses choosing i; fraction[i] = count[i] / total, or 0
/// when nobody answered.
SurveyResults tally(std::size_t option_count, std::span<const std::size_t> chosen);

void to_json(nlohmann::json& j, const Survey& s);
void from_json(const nlohmann::json& j, Survey& s);
void to_json(nlohmann::json& j, const SurveyResponse& r);
void from_json(const nlohmann::json& j, SurveyResponse& r);
void to_json(nlohmann::json& j, const SurveyResults& r);

/// Community-scoped multiple-choice polls. Answers are single and
/// immutable; the store enforces one response per (survey, respondent).
class SurveyService {
 public:
  explicit SurveyService(Platform& platform) : platform_(platform) {}

  Survey create_survey(const UserId& actor, const CommunityId& community,
                       const std::string& question, const std::vector<std::string>& options,
                       std::optional<Timestamp> closes_at = std::nullopt);
  SurveyResponse answer_survey(const UserId& actor, const SurveyId& survey,
                               std::int64_t option_index);
  SurveyResults survey_results(const SurveyId& survey) const;
  Survey close_survey(const UserId& actor, const SurveyId& survey);

  Survey get_survey(const SurveyId& survey) const;  // UnknownSurvey
  std::vector<Survey> surveys_in(const CommunityId& community) const;
  /// Raw (respondent, option) pairs; only the research export reads these.
  std::vector<SurveyResponse> responses(const SurveyId& survey) const;

 private:
  void require_moderator(const UserId& actor, const CommunityId& community) const;

  Platform& platform_;
};

}  // namespace agora::surveys
