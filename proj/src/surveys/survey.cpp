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

#include "agora/surveys/survey.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace agora::surveys {

using nlohmann::json;

namespace {

constexpr std::string_view kSurveyKind = "survey";
constexpr std::string_view kResponseKind = "survey_response";
constexpr std::string_view kAnswerScope = "survey_answer";

std::string answer_key(const SurveyId& survey, const UserId& user) {
  return survey.str() + "|" + user.str();
}

bool blank(std::string_view text) {
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

bool Survey::is_open_at(Timestamp now) const {
  if (status == SurveyStatus::Closed) return false;
  return !closes_at || now < *closes_at;
}

SurveyResults tally(std::size_t option_count, std::span<const std::size_t> chosen) {
  SurveyResults r;
  r.counts.assign(option_count, 0);
  for (auto idx : chosen) {
    if (idx >= option_count) throw Error(ErrorCode::OptionOutOfRange, std::to_string(idx));
    ++r.counts[idx];
  }
  r.total_respondents = chosen.size();
  r.fractions.assign(option_count, 0.0);
  if (r.total_respondents == 0) return r;
  // The last non-empty option absorbs the rounding of the others, so the
  // index-order sum lands within one epsilon of 1.
  std::size_t last = 0;
  for (std::size_t i = 0; i < option_count; ++i) {
    if (r.counts[i] > 0) last = i;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < last; ++i) {
    r.fractions[i] = static_cast<double>(r.counts[i]) / static_cast<double>(r.total_respondents);
    sum += r.fractions[i];
  }
  r.fractions[last] = std::max(0.0, 1.0 - sum);
  return r;
}

void to_json(json& j, const Survey& s) {
  j = json{{"survey_id", s.survey_id},
           {"community_id", s.community_id},
           {"creator_id", s.creator_id},
           {"question", s.question},
           {"options", s.options},
           {"opens_at", timestamp_json(s.opens_at)},
           {"closes_at", s.closes_at ? timestamp_json(*s.closes_at) : json(nullptr)},
           {"status", s.status == SurveyStatus::Open ? "open" : "closed"}};
}

void from_json(const json& j, Survey& s) {
  s.survey_id = j.at("survey_id").get<SurveyId>();
  s.community_id = j.at("community_id").get<CommunityId>();
  s.creator_id = j.at("creator_id").get<UserId>();
  s.question = j.at("question").get<std::string>();
  s.options = j.at("options").get<std::vector<std::string>>();
  s.opens_at = timestamp_from_json(j.at("opens_at"));
  if (j.at("closes_at").is_null()) {
    s.closes_at.reset();
  } else {
    s.closes_at = timestamp_from_json(j.at("closes_at"));
  }
  s.status = j.at("status").get<std::string>() == "open" ? SurveyStatus::Open
                                                          : SurveyStatus::Closed;
}

void to_json(json& j, const SurveyResponse& r) {
  j = json{{"survey_id", r.survey_id},
           {"respondent_id", r.respondent_id},
           {"option_index", r.option_index},
           {"answered_at", timestamp_json(r.answered_at)}};
}

void from_json(const json& j, SurveyResponse& r) {
  r.survey_id = j.at("survey_id").get<SurveyId>();
  r.respondent_id = j.at("respondent_id").get<UserId>();
  r.option_index = j.at("option_index").get<std::size_t>();
  r.answered_at = timestamp_from_json(j.at("answered_at"));
}

void to_json(json& j, const SurveyResults& r) {
  j = json{{"survey_id", r.survey_id},
           {"counts", r.counts},
           {"fractions", r.fractions},
           {"total_respondents", r.total_respondents}};
}

void SurveyService::require_moderator(const UserId& actor, const CommunityId& community) const {
  auto c = platform_.find_community(community);
  if (!c) throw Error(ErrorCode::UnknownCommunity, community.str());
  if (!c->moderator_ids.contains(actor)) throw Error(ErrorCode::NotCommunityModerator);
}

Survey SurveyService::create_survey(const UserId& actor, const CommunityId& community,
                                    const std::string& question,
                                    const std::vector<std::string>& options,
                                    std::optional<Timestamp> closes_at) {
  require_moderator(actor, community);
  if (options.size() < kMinOptions || options.size() > kMaxOptions) {
    throw Error(ErrorCode::BadOptionCount, std::to_string(options.size()));
  }
  if (std::set<std::string>(options.begin(), options.end()).size() != options.size()) {
    throw Error(ErrorCode::DuplicateOptions);
  }
  if (blank(question)) throw Error(ErrorCode::InvalidArgument, "question");
  if (utf8_length(question) > kMaxQuestionChars) throw Error(ErrorCode::FieldTooLarge, "question");
  for (const auto& o : options) {
    if (blank(o)) throw Error(ErrorCode::InvalidArgument, "empty option");
    if (utf8_length(o) > kMaxOptionChars) throw Error(ErrorCode::FieldTooLarge, "option");
  }
  const auto now = platform_.clock().now();
  if (closes_at && *closes_at <= now) throw Error(ErrorCode::InvalidArgument, "closes_at in the past");

  auto& store = platform_.store();
  Survey s{SurveyId{store.next_id("q")}, community, actor, question, options, now, closes_at,
           SurveyStatus::Open};
  store::WriteBatch batch;
  batch.puts.push_back({std::string(kSurveyKind), s.survey_id.str(), community.str(), 0, json(s)});
  store.commit(batch);
  return s;
}

SurveyResponse SurveyService::answer_survey(const UserId& actor, const SurveyId& survey_id,
                                            std::int64_t option_index) {
  platform_.get_user(actor);
  const auto survey = get_survey(survey_id);
  const auto now = platform_.clock().now();
  if (!survey.is_open_at(now)) throw Error(ErrorCode::SurveyClosed);
  if (option_index < 0 || static_cast<std::size_t>(option_index) >= survey.options.size()) {
    throw Error(ErrorCode::OptionOutOfRange, std::to_string(option_index));
  }
  auto& store = platform_.store();
  const auto key = answer_key(survey_id, actor);
  if (store.lookup_unique(kAnswerScope, key)) throw Error(ErrorCode::AlreadyAnswered);

  SurveyResponse r{survey_id, actor, static_cast<std::size_t>(option_index), now};
  store::WriteBatch batch;
  batch.unique_keys.push_back({std::string(kAnswerScope), key, survey_id.str()});
  batch.puts.push_back({std::string(kResponseKind), key, survey_id.str(), 0, json(r)});
  batch.event = store::EventDraft{actor, Verb::SurveyAnswer, survey_id.str(), survey.creator_id, now};
  try {
    store.commit(batch);
  } catch (const store::UniqueViolation&) {
    throw Error(ErrorCode::AlreadyAnswered);
  }
  return r;
}

SurveyResults SurveyService::survey_results(const SurveyId& survey_id) const {
  const auto survey = get_survey(survey_id);
  std::vector<std::size_t> chosen;
  for (const auto& r : responses(survey_id)) chosen.push_back(r.option_index);
  auto results = tally(survey.options.size(), chosen);
  results.survey_id = survey_id;
  return results;
}

Survey SurveyService::close_survey(const UserId& actor, const SurveyId& survey_id) {
  auto survey = get_survey(survey_id);
  require_moderator(actor, survey.community_id);
  if (!survey.is_open_at(platform_.clock().now())) throw Error(ErrorCode::AlreadyClosed);
  survey.status = SurveyStatus::Closed;
  store::WriteBatch batch;
  batch.puts.push_back(
      {std::string(kSurveyKind), survey.survey_id.str(), survey.community_id.str(), 0, json(survey)});
  platform_.store().commit(batch);
  return survey;
}

Survey SurveyService::get_survey(const SurveyId& survey_id) const {
  auto d = platform_.store().get(kSurveyKind, survey_id.str());
  if (!d) throw Error(ErrorCode::UnknownSurvey, survey_id.str());
  return d->body.get<Survey>();
}

std::vector<Survey> SurveyService::surveys_in(const CommunityId& community) const {
  std::vector<Survey> out;
  for (const auto& d : platform_.store().list(kSurveyKind, community.str())) {
    out.push_back(d.body.get<Survey>());
  }
  return out;
}

std::vector<SurveyResponse> SurveyService::responses(const SurveyId& survey) const {
  std::vector<SurveyResponse> out;
  for (const auto& d : platform_.store().list(kResponseKind, survey.str())) {
    out.push_back(d.body.get<SurveyResponse>());
  }
  return out;
}

}  // namespace agora::surveys
