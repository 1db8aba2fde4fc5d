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

#include "agora/api/service.hpp"

#include "agora/api/pagination.hpp"
#include "agora/api/representation.hpp"
#include "agora/common/crypto.hpp"

namespace agora::api {

using nlohmann::json;

std::optional<std::string> Request::query_param(const std::string& name) const {
  auto it = query.find(name);
  if (it == query.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> Request::header(const std::string& name) const {
  auto it = headers.find(name);
  if (it == headers.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> Response::header(const std::string& name) const {
  auto it = headers.find(name);
  if (it == headers.end()) return std::nullopt;
  return it->second;
}

int http_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::BadCredentials:
    case ErrorCode::Unauthenticated:
      return 401;
    case ErrorCode::NotModerator:
    case ErrorCode::NotCommunityModerator:
    case ErrorCode::NotAdministrator:
    case ErrorCode::NotAuthorizedResearcher:
    case ErrorCode::Forbidden:
      return 403;
    case ErrorCode::UnknownCommunity:
    case ErrorCode::UnknownDiscussion:
    case ErrorCode::UnknownPost:
    case ErrorCode::UnknownUser:
    case ErrorCode::UnknownAttachment:
    case ErrorCode::UnknownRecipient:
    case ErrorCode::UnknownSurvey:
    case ErrorCode::NotFound:
      return 404;
    case ErrorCode::MethodNotAllowed:
      return 405;
    case ErrorCode::NotAcceptable:
      return 406;
    case ErrorCode::DuplicateHandle:
    case ErrorCode::DuplicateTitle:
    case ErrorCode::AlreadyLiked:
    case ErrorCode::AlreadyAnswered:
    case ErrorCode::AlreadyClosed:
    case ErrorCode::SurveyClosed:
      return 409;
    case ErrorCode::AttachmentTooLarge:
      return 413;
    case ErrorCode::UnsupportedAttachmentKind:
      return 415;
    case ErrorCode::StoreFailure:
    case ErrorCode::OutOfOrderEvent:
      return 500;
    default:
      return 400;
  }
}

namespace {

constexpr const char* kJson = "application/json";

Response json_response(int status, const json& body) {
  return Response{status, {{"content-type", kJson}}, body.dump()};
}

Response text_response(const std::string& content_type, std::string body) {
  return Response{200, {{"content-type", content_type}}, std::move(body)};
}

Response error_response(ErrorCode code, const std::string& message) {
  return json_response(http_status(code),
                       json{{"error", std::string(to_string(code))}, {"message", message}});
}

std::string required_string(const json& body, const char* key) {
  if (!body.contains(key) || !body.at(key).is_string()) {
    throw Error(ErrorCode::BadRequest, std::string("missing string field ") + key);
  }
  return body.at(key).get<std::string>();
}

std::optional<std::string> optional_string(const json& body, const char* key) {
  if (!body.contains(key) || body.at(key).is_null()) return std::nullopt;
  if (!body.at(key).is_string()) throw Error(ErrorCode::BadRequest, std::string(key));
  return body.at(key).get<std::string>();
}

std::set<Verb> kinds_param(const Request& req) {
  const auto raw = req.query_param("kinds");
  if (!raw) return {research::kGraphVerbs.begin(), research::kGraphVerbs.end()};
  std::vector<std::string> names;
  std::string_view rest = *raw;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    if (auto name = rest.substr(0, comma); !name.empty()) names.emplace_back(name);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return research::parse_interaction_kinds(names);
}

bool media_acceptable(std::string_view accept, std::string_view content_type) {
  const auto type = content_type.substr(0, content_type.find(';'));
  const auto major = type.substr(0, type.find('/'));
  while (!accept.empty()) {
    const auto comma = accept.find(',');
    auto token = accept.substr(0, comma);
    token = token.substr(0, token.find(';'));
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token == "*/*" || token == type ||
        (token.size() == major.size() + 2 && token.substr(0, major.size()) == major &&
         token.substr(major.size()) == "/*")) {
      return true;
    }
    if (comma == std::string_view::npos) break;
    accept.remove_prefix(comma + 1);
  }
  return false;
}

using Item = std::pair<std::uint64_t, json>;

}  // namespace

json ApiService::Call::body() const {
  if (request.body.empty()) return json::object();
  try {
    auto j = json::parse(request.body);
    if (!j.is_object()) throw Error(ErrorCode::BadRequest, "body must be a JSON object");
    return j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadRequest, e.what());
  }
}

ApiService::ApiService(ServiceConfig config, store::Store& store, const Clock& clock)
    : config_(std::move(config)),
      store_(store),
      clock_(clock),
      platform_(store, clock,
                PlatformOptions{config_.terms_version, PlatformLimits{},
                                config_.secret_hash_iterations}),
      surveys_(platform_),
      research_(platform_, surveys_),
      tracker_(config_.gamification),
      tokens_(clock, config_.token_key_hex, config_.token_ttl) {
  if (config_.admin_secret.empty()) config_.admin_secret = crypto::random_hex(16);
  admin_ = platform_.bootstrap_admin(config_.admin_handle, config_.admin_secret);
  tracker_.catch_up(store_);
  register_routes();
}

std::vector<std::pair<std::string, bool>> ApiService::route_table() const {
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& r : router_.routes()) out.emplace_back(r.method + " " + r.pattern, !r.requires_auth);
  return out;
}

Response ApiService::handle(const Request& request) {
  Response response;
  try {
    response = dispatch(request);
  } catch (const Error& e) {
    response = error_response(e.code(), e.what());
  } catch (const std::exception& e) {
    response = error_response(ErrorCode::StoreFailure, e.what());
  }
  return finish(request, std::move(response));
}

Response ApiService::finish(const Request& request, Response response) const {
  if (auto accept = request.header("accept"); accept && response.status < 400) {
    const auto type = response.header("content-type").value_or(kJson);
    if (!media_acceptable(*accept, type)) {
      response = error_response(ErrorCode::NotAcceptable, "this route produces " + type);
    }
  }
  response.headers["vary"] = "Accept-Encoding";
  if (response.body.size() > config_.compression_threshold) {
    if (auto enc = request.header("accept-encoding"); enc && accepts_gzip(*enc)) {
      response.body = gzip_compress(response.body);
      response.headers["content-encoding"] = "gzip";
    }
  }
  return response;
}

Response ApiService::dispatch(const Request& request) {
  const Router<Handler>::Route* route = nullptr;
  PathParams params;
  switch (router_.match(request.method, request.path, route, params)) {
    case Router<Handler>::Outcome::NoPath:
      throw Error(ErrorCode::NotFound, request.path);
    case Router<Handler>::Outcome::WrongMethod:
      throw Error(ErrorCode::MethodNotAllowed, request.method + " " + request.path);
    case Router<Handler>::Outcome::Matched:
      break;
  }
  Call call{request, std::move(params), std::nullopt};
  if (route->requires_auth) {
    const auto auth = request.header("authorization").value_or("");
    constexpr std::string_view kBearer = "Bearer ";
    if (auth.rfind(kBearer, 0) != 0) throw Error(ErrorCode::Unauthenticated);
    const auto user_id = tokens_.verify(auth.substr(kBearer.size()));
    if (!user_id) throw Error(ErrorCode::Unauthenticated);
    call.caller = platform_.find_user(*user_id);
    if (!call.caller) throw Error(ErrorCode::Unauthenticated);
  }
  return route->handler(call);
}

json ApiService::with_feedback(const UserId& user, EventId before, json body) {
  tracker_.catch_up(store_);
  json feedback = json::array();
  for (const auto& f : tracker_.recent_feedback(user)) {
    if (f.caused_by <= before) continue;
    json item{{"kind", to_string(f.kind)}, {"value", f.value}, {"caused_by", f.caused_by}};
    if (!f.mission_id.empty()) item["mission_id"] = f.mission_id;
    feedback.push_back(std::move(item));
  }
  body["feedback"] = std::move(feedback);
  return body;
}

json ApiService::gamification_view(const UserId& user) {
  tracker_.catch_up(store_);
  const auto state = tracker_.state_of(user);
  const auto& cfg = tracker_.config();
  json medals = json::array();
  for (const auto& m : gamification::medals_of(state, cfg)) {
    medals.push_back({{"index", m.index}, {"name", m.name}});
  }
  json missions = json::array();
  for (const auto& m : cfg.missions) {
    json entry{{"mission_id", m.mission_id},
               {"verb", to_string(m.verb)},
               {"required_count", m.required_count},
               {"window_days", m.window_days},
               {"bonus_xp", m.bonus_xp},
               {"count", 0},
               {"granted", false},
               {"window_start", nullptr}};
    if (auto it = state.mission_progress.find(m.mission_id); it != state.mission_progress.end()) {
      entry["count"] = it->second.count;
      entry["granted"] = it->second.granted;
      entry["window_start"] = format_iso8601(it->second.window_start);
    }
    missions.push_back(std::move(entry));
  }
  const auto floor = state.level == 0 ? 0 : gamification::threshold(state.level, cfg.base_xp);
  json view{{"user_id", user},
            {"total_xp", state.total_xp},
            {"level", state.level},
            {"max_level", gamification::kLevelCap},
            {"medals", medals},
            {"base_xp", cfg.base_xp},
            {"current_level_threshold", floor},
            {"next_level_threshold", nullptr},
            {"xp_into_level", state.total_xp - floor},
            {"xp_for_next_level", nullptr},
            {"missions", missions}};
  if (state.level < gamification::kLevelCap) {
    const auto next = gamification::threshold(state.level + 1, cfg.base_xp);
    view["next_level_threshold"] = next;
    view["xp_for_next_level"] = next - floor;
  }
  return view;
}

void ApiService::register_routes() {
  auto page = [this](std::vector<Item> items, Order order, const Call& call,
                     std::string_view id_field) {
    const auto limit = parse_limit(call.request.query_param("limit"));
    auto p = paginate(
        std::move(items), [](const Item& i) { return i.first; }, order, limit,
        call.request.query_param("cursor"), store_.snapshot().max_seq);
    json out{{"items", json::array()}, {"next_cursor", nullptr}, {"total", p.total}};
    const auto fields = call.request.query_param("fields");
    for (const auto& [seq, item] : p.items) {
      out["items"].push_back(select_fields(item, fields, id_field));
    }
    if (p.next_cursor) out["next_cursor"] = *p.next_cursor;
    return json_response(200, out);
  };
  auto single = [](const json& resource, const Call& call, std::string_view id_field, int status) {
    return json_response(status, select_fields(resource, call.request.query_param("fields"), id_field));
  };
  auto before = [this] { return store_.snapshot().max_event_id; };

  // --- accounts ---------------------------------------------------------------
  router_.add("GET", "/terms", false, [this](Call&) {
    return json_response(200, json{{"terms_version", config_.terms_version},
                                   {"document", config_.terms_document}});
  });
  router_.add("POST", "/users", false, [this](Call& c) {
    const auto body = c.body();
    auto user = platform_.register_user(required_string(body, "handle"),
                                        optional_string(body, "display_name").value_or(""),
                                        required_string(body, "secret"),
                                        optional_string(body, "terms_version"));
    return json_response(201, json(user));
  });
  router_.add("POST", "/auth", false, [this](Call& c) {
    const auto body = c.body();
    const auto user = platform_.verify_credentials(required_string(body, "handle"),
                                                   required_string(body, "secret"));
    const auto token = tokens_.issue(user.user_id);
    return json_response(200, json{{"token", token.token},
                                   {"user_id", token.user_id},
                                   {"issued_at", format_iso8601(token.issued_at)},
                                   {"expires_at", format_iso8601(token.expires_at)}});
  });
  router_.add("GET", "/users/{id}", true, [this, single](Call& c) {
    return single(json(platform_.get_user(UserId{c.param("id")})), c, "user_id", 200);
  });
  router_.add("PATCH", "/users/{id}", true, [this, before](Call& c) {
    const UserId target{c.param("id")};
    platform_.get_user(target);
    if (target != c.user().user_id) throw Error(ErrorCode::Forbidden, "profiles are edited by their owner");
    const auto body = c.body();
    ProfilePatch patch;
    for (const auto& [key, value] : body.items()) {
      if (key == "display_name") {
        patch.display_name = optional_string(body, "display_name");
      } else if (key == "bio") {
        patch.bio = optional_string(body, "bio");
      } else if (key == "avatar_ref") {
        patch.avatar_ref = optional_string(body, "avatar_ref").value_or("");
      } else if (key == "banner_ref") {
        patch.banner_ref = optional_string(body, "banner_ref").value_or("");
      } else {
        throw Error(ErrorCode::UnknownField, key);
      }
    }
    const auto mark = before();
    return json_response(200, with_feedback(c.user().user_id, mark,
                                            json(platform_.customize_profile(target, patch))));
  });
  router_.add("GET", "/users/{id}/feed", true, [this, page](Call& c) {
    const UserId user{c.param("id")};
    platform_.get_user(user);
    std::vector<Item> items;
    for (const auto& f : platform_.profile_feed(user)) items.emplace_back(f.seq, feed_item_json(f));
    return page(std::move(items), Order::NewestFirst, c, "post_id");
  });
  router_.add("PUT", "/users/{id}/role", true, [this](Call& c) {
    const auto role = parse_role(required_string(c.body(), "role"));
    if (!role) throw Error(ErrorCode::BadRequest, "role must be moderator or ordinary");
    return json_response(200, json(platform_.assign_role(c.user().user_id, UserId{c.param("id")}, *role)));
  });
  router_.add("POST", "/attachments", true, [this](Call& c) {
    const auto body = c.body();
    AttachmentUpload up{required_string(body, "kind"), required_string(body, "content_ref"),
                        body.value("size_bytes", std::uint64_t{0}),
                        required_string(body, "declared_media_type")};
    return json_response(201, json(platform_.upload_attachment(c.user().user_id, up)));
  });

  // --- communities and discussions ------------------------------------------
  router_.add("POST", "/communities", true, [this, before](Call& c) {
    const auto body = c.body();
    const auto mark = before();
    auto community = platform_.create_community(c.user().user_id, required_string(body, "title"),
                                                optional_string(body, "description").value_or(""));
    return json_response(201, with_feedback(c.user().user_id, mark, json(community)));
  });
  router_.add("GET", "/communities", true, [this, page](Call& c) {
    std::vector<Item> items;
    for (const auto& d : store_.list(kind::kCommunity)) items.emplace_back(d.seq, d.body);
    return page(std::move(items), Order::OldestFirst, c, "community_id");
  });
  router_.add("GET", "/communities/{id}/discussions", true, [this, page](Call& c) {
    const CommunityId community{c.param("id")};
    if (!platform_.find_community(community)) throw Error(ErrorCode::UnknownCommunity);
    std::vector<Item> items;
    for (const auto& d : store_.list(kind::kDiscussion, community.str())) items.emplace_back(d.seq, d.body);
    return page(std::move(items), Order::OldestFirst, c, "discussion_id");
  });
  router_.add("POST", "/communities/{id}/discussions", true, [this, before](Call& c) {
    const auto body = c.body();
    const auto mark = before();
    auto d = platform_.create_discussion(c.user().user_id, CommunityId{c.param("id")},
                                         required_string(body, "title"));
    return json_response(201, with_feedback(c.user().user_id, mark, json(d)));
  });
  router_.add("GET", "/discussions/{id}/posts", true, [this, page](Call& c) {
    const DiscussionId discussion{c.param("id")};
    if (!platform_.find_discussion(discussion)) throw Error(ErrorCode::UnknownDiscussion);
    std::vector<Item> items;
    for (const auto& f : platform_.discussion_feed(discussion)) items.emplace_back(f.seq, feed_item_json(f));
    return page(std::move(items), Order::NewestFirst, c, "post_id");
  });
  router_.add("POST", "/discussions/{id}/posts", true, [this, before](Call& c) {
    const auto body = c.body();
    std::optional<AttachmentUpload> attachment;
    if (body.contains("attachment") && !body.at("attachment").is_null()) {
      const auto& a = body.at("attachment");
      if (!a.is_object()) throw Error(ErrorCode::BadRequest, "attachment");
      attachment = AttachmentUpload{required_string(a, "kind"), required_string(a, "content_ref"),
                                    a.value("size_bytes", std::uint64_t{0}),
                                    required_string(a, "declared_media_type")};
    }
    const auto mark = before();
    auto post = platform_.create_post(c.user().user_id, DiscussionId{c.param("id")},
                                      optional_string(body, "body").value_or(""), attachment);
    return json_response(201, with_feedback(c.user().user_id, mark, json(post)));
  });

  // --- posts and reactions ----------------------------------------------------
  router_.add("GET", "/posts/{id}", true, [this, single](Call& c) {
    auto post = platform_.find_post(PostId{c.param("id")});
    if (!post) throw Error(ErrorCode::UnknownPost);
    return single(feed_item_json(FeedItem{0, post->post_id.str(), *post, std::nullopt, std::nullopt}),
                  c, "post_id", 200);
  });
  router_.add("POST", "/posts/{id}/likes", true, [this, before](Call& c) {
    const PostId post{c.param("id")};
    const auto mark = before();
    platform_.like(c.user().user_id, post);
    return json_response(201, with_feedback(c.user().user_id, mark,
                                            json{{"post_id", post}, {"liked", true}}));
  });
  router_.add("POST", "/posts/{id}/comments", true, [this, before](Call& c) {
    const auto body = c.body();
    const auto mark = before();
    auto comment = platform_.comment(c.user().user_id, PostId{c.param("id")},
                                     optional_string(body, "body").value_or(""));
    return json_response(201, with_feedback(c.user().user_id, mark, json(comment)));
  });
  router_.add("GET", "/posts/{id}/comments", true, [this, page](Call& c) {
    const PostId post{c.param("id")};
    if (!platform_.find_post(post)) throw Error(ErrorCode::UnknownPost);
    std::vector<Item> items;
    for (const auto& d : store_.list(kind::kComment, post.str())) items.emplace_back(d.seq, d.body);
    return page(std::move(items), Order::OldestFirst, c, "comment_id");
  });
  router_.add("POST", "/posts/{id}/shares", true, [this, before](Call& c) {
    const auto body = c.body();
    std::optional<DiscussionId> target;
    if (auto t = optional_string(body, "target_discussion_id")) target = DiscussionId{*t};
    const auto mark = before();
    auto share = platform_.share(c.user().user_id, PostId{c.param("id")}, target);
    return json_response(201, with_feedback(c.user().user_id, mark, json(share)));
  });
  router_.add("POST", "/posts/{id}/hide", true, [this](Call& c) {
    auto post = platform_.hide_post(c.user().user_id, PostId{c.param("id")});
    return json_response(200, feed_item_json(FeedItem{0, post.post_id.str(), post, std::nullopt, std::nullopt}));
  });

  // --- chat ---------------------------------------------------------------------
  router_.add("POST", "/chats/{user_id}/messages", true, [this, before](Call& c) {
    const auto body = c.body();
    const auto mark = before();
    auto msg = platform_.send_chat(c.user().user_id, UserId{c.param("user_id")},
                                   optional_string(body, "body").value_or(""));
    return json_response(201, with_feedback(c.user().user_id, mark, json(msg)));
  });
  router_.add("GET", "/chats/{user_id}", true, [this, page](Call& c) {
    const UserId other{c.param("user_id")};
    platform_.get_user(other);
    std::vector<Item> items;
    for (const auto& [seq, msg] : platform_.conversation(c.user().user_id, other)) {
      items.emplace_back(seq, json(msg));
    }
    return page(std::move(items), Order::OldestFirst, c, "message_id");
  });

  // --- surveys ------------------------------------------------------------------
  router_.add("POST", "/communities/{id}/surveys", true, [this](Call& c) {
    const auto body = c.body();
    if (!body.contains("options") || !body.at("options").is_array()) {
      throw Error(ErrorCode::BadRequest, "options must be an array of strings");
    }
    std::vector<std::string> options;
    for (const auto& o : body.at("options")) {
      if (!o.is_string()) throw Error(ErrorCode::BadRequest, "options must be strings");
      options.push_back(o.get<std::string>());
    }
    std::optional<Timestamp> closes_at;
    if (auto raw = optional_string(body, "closes_at")) {
      closes_at = parse_iso8601(*raw);
      if (!closes_at) throw Error(ErrorCode::BadRequest, "closes_at");
    }
    auto survey = surveys_.create_survey(c.user().user_id, CommunityId{c.param("id")},
                                         required_string(body, "question"), options, closes_at);
    return json_response(201, json(survey));
  });
  router_.add("GET", "/communities/{id}/surveys", true, [this, page](Call& c) {
    const CommunityId community{c.param("id")};
    if (!platform_.find_community(community)) throw Error(ErrorCode::UnknownCommunity);
    std::vector<Item> items;
    for (const auto& d : store_.list("survey", community.str())) items.emplace_back(d.seq, d.body);
    return page(std::move(items), Order::OldestFirst, c, "survey_id");
  });
  router_.add("GET", "/surveys/{id}", true, [this, single](Call& c) {
    return single(json(surveys_.get_survey(SurveyId{c.param("id")})), c, "survey_id", 200);
  });
  router_.add("POST", "/surveys/{id}/answers", true, [this, before](Call& c) {
    const auto body = c.body();
    if (!body.contains("option_index") || !body.at("option_index").is_number_integer()) {
      throw Error(ErrorCode::BadRequest, "option_index must be an integer");
    }
    const SurveyId survey{c.param("id")};
    const auto mark = before();
    auto response = surveys_.answer_survey(c.user().user_id, survey,
                                           body.at("option_index").get<std::int64_t>());
    json out{{"response", response}, {"results", surveys_.survey_results(survey)}};
    out = with_feedback(c.user().user_id, mark, std::move(out));
    out["gamification"] = gamification_view(c.user().user_id);
    return json_response(201, out);
  });
  router_.add("GET", "/surveys/{id}/results", true, [this](Call& c) {
    return json_response(200, json(surveys_.survey_results(SurveyId{c.param("id")})));
  });
  router_.add("POST", "/surveys/{id}/close", true, [this](Call& c) {
    return json_response(200, json(surveys_.close_survey(c.user().user_id, SurveyId{c.param("id")})));
  });

  // --- gamification -------------------------------------------------------------
  router_.add("GET", "/gamification/me", true, [this](Call& c) {
    auto view = gamification_view(c.user().user_id);
    view = with_feedback(c.user().user_id, 0, std::move(view));
    return json_response(200, view);
  });
  router_.add("GET", "/leaderboard", true, [this](Call& c) {
    const auto limit = parse_limit(c.request.query_param("limit"));
    tracker_.catch_up(store_);
    json items = json::array();
    std::size_t rank = 0;
    for (const auto& e : gamification::leaderboard(tracker_.states(), limit)) {
      const auto user = platform_.find_user(e.user_id);
      items.push_back({{"rank", ++rank},
                       {"user_id", e.user_id},
                       {"handle", user ? user->handle : ""},
                       {"total_xp", e.total_xp},
                       {"level", e.level}});
    }
    return json_response(200, json{{"items", items}});
  });

  // --- research -----------------------------------------------------------------
  router_.add("POST", "/research/grants", true, [this](Call& c) {
    const auto body = c.body();
    auto grant = research_.grant_researcher(c.user().user_id, UserId{required_string(body, "user_id")},
                                            optional_string(body, "signed_term_document").value_or(""));
    return json_response(201, json(grant));
  });
  router_.add("POST", "/research/grants/{user_id}/revoke", true, [this](Call& c) {
    return json_response(200, json(research_.revoke_grant(c.user().user_id, UserId{c.param("user_id")})));
  });
  router_.add("GET", "/research/export/events", true, [this](Call& c) {
    std::optional<research::TimeRange> range;
    if (auto raw = c.request.query_param("range")) range = research::parse_time_range(*raw);
    const auto exported = research_.export_events(c.user().user_id, range);
    return text_response("application/x-ndjson",
                         research::format_events(exported.events, exported.snapshot_event_id));
  });
  router_.add("GET", "/research/export/users", true, [this](Call& c) {
    return text_response("text/csv", research::format_users(research_.export_users(c.user().user_id)));
  });
  router_.add("GET", "/research/export/graph", true, [this](Call& c) {
    const auto kinds = kinds_param(c.request);
    const auto g = research_.export_graph(c.user().user_id, kinds);
    return text_response("text/tab-separated-values",
                         research::format_graph(g.graph, g.kinds, g.snapshot_event_id));
  });
  router_.add("GET", "/research/metrics", true, [this](Call& c) {
    const auto kinds = kinds_param(c.request);
    const auto g = research_.export_graph(c.user().user_id, kinds);
    return json_response(200, research::metrics_json(research::graph_metrics(g.graph), kinds,
                                                     g.snapshot_event_id));
  });
  router_.add("GET", "/research/export/surveys/{id}", true, [this](Call& c) {
    const auto responses = research_.export_survey_responses(c.user().user_id, SurveyId{c.param("id")});
    return json_response(200, json{{"survey_id", c.param("id")}, {"responses", responses}});
  });
  router_.add("GET", "/research/posts/{id}/success", true, [this](Call& c) {
    const PostId post{c.param("id")};
    return json_response(200, json{{"post_id", post},
                                   {"interaction_success", research_.post_success(c.user().user_id, post)}});
  });
}

}  // namespace agora::api
