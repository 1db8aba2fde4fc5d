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

#include <functional>
#include <memory>
#include <optional>

#include "agora/api/auth.hpp"
#include "agora/api/config.hpp"
#include "agora/api/http.hpp"
#include "agora/core/platform.hpp"
#include "agora/gamification/engine.hpp"
#include "agora/research/export.hpp"
#include "agora/surveys/survey.hpp"

namespace agora::api {

/// Controller layer: authenticates, routes to the module services, and
/// shapes responses (pagination, sparse fields, gzip). Holds no
/// per-request state; all consistency lives in the store.
class ApiService {
 public:
  ApiService(ServiceConfig config, store::Store& store, const Clock& clock);

  Response handle(const Request& request);

  /// One line per route: "METHOD /pattern", plus whether it is public.
  std::vector<std::pair<std::string, bool>> route_table() const;

  const ServiceConfig& config() const noexcept { return config_; }
  Platform& platform() noexcept { return platform_; }
  surveys::SurveyService& surveys() noexcept { return surveys_; }
  research::ResearchService& research() noexcept { return research_; }
  gamification::Tracker& tracker() noexcept { return tracker_; }
  const TokenService& tokens() const noexcept { return tokens_; }
  const User& admin() const noexcept { return admin_; }

 private:
  struct Call {
    const Request& request;
    PathParams params;
    std::optional<User> caller;

    const User& user() const { return *caller; }
    const std::string& param(const std::string& name) const { return params.at(name); }
    nlohmann::json body() const;
  };
  using Handler = std::function<Response(Call&)>;

  void register_routes();
  Response dispatch(const Request& request);
  Response finish(const Request& request, Response response) const;
  nlohmann::json with_feedback(const UserId& user, EventId before, nlohmann::json body);
  nlohmann::json gamification_view(const UserId& user);

  ServiceConfig config_;
  store::Store& store_;
  const Clock& clock_;
  Platform platform_;
  surveys::SurveyService surveys_;
  research::ResearchService research_;
  gamification::Tracker tracker_;
  TokenService tokens_;
  User admin_;
  Router<Handler> router_;
};

/// HTTP status for an error code.
int http_status(ErrorCode code) noexcept;

}  // namespace agora::api
