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

#include <gtest/gtest.h>

#include "support/api_client.hpp"

namespace agora::api {
namespace {

using nlohmann::json;
using testing::ApiHarness;

class ApiTest : public ::testing::Test {
 protected:
  void SetUp() override {
    admin = api.admin_token();
    std::tie(mod_id, mod) = api.signup("mod");
    ASSERT_EQ(api.call("PUT", "/users/" + mod_id + "/role", {{"role", "moderator"}}, admin).status, 200);
    std::tie(alice_id, alice) = api.signup("alice");
    std::tie(bob_id, bob) = api.signup("bob");
    community = api.call("POST", "/communities", {{"title", "Database"}}, mod).json().at("community_id");
    discussion = api.call("POST", "/communities/" + community + "/discussions", {{"title", "SQL"}}, alice)
                     .json()
                     .at("discussion_id");
  }

  std::string post(const std::string& token, const std::string& body) {
    return api.call("POST", "/discussions/" + discussion + "/posts", {{"body", body}}, token)
        .json()
        .at("post_id");
  }

  ApiHarness api;
  std::string admin, mod_id, mod, alice_id, alice, bob_id, bob, community, discussion;
};

TEST_F(ApiTest, OnlyRegistrationLoginAndTermsArePublic) {
  std::set<std::string> open;
  for (const auto& [route, is_public] : api.service().route_table()) {
    if (is_public) open.insert(route);
  }
  EXPECT_EQ(open, (std::set<std::string>{"GET /terms", "POST /users", "POST /auth"}));
  for (const auto& [route, is_public] : api.service().route_table()) {
    if (is_public) continue;
    const auto space = route.find(' ');
    auto path = route.substr(space + 1);
    for (auto pos = path.find('{'); pos != std::string::npos; pos = path.find('{')) {
      path.replace(pos, path.find('}', pos) - pos + 1, "x-1");
    }
    const auto r = api.call(route.substr(0, space), path, json::object());
    EXPECT_EQ(r.status, 401) << route;
    EXPECT_EQ(r.json().at("error"), "Unauthenticated") << route;
    EXPECT_EQ(api.call(route.substr(0, space), path, json::object(), "forged.token").status, 401) << route;
  }
}

TEST_F(ApiTest, TermsDocumentIsServed) {
  const auto r = api.call("GET", "/terms");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.json().at("terms_version"), "v1");
  EXPECT_FALSE(r.json().at("document").get<std::string>().empty());
}

TEST_F(ApiTest, RegistrationAndLoginErrors) {
  auto r = api.call("POST", "/users", {{"handle", "alice"}, {"secret", "x"}, {"terms_version", "v1"}});
  EXPECT_EQ(r.status, 409);
  EXPECT_EQ(r.json().at("error"), "DuplicateHandle");
  r = api.call("POST", "/users", {{"handle", "zed"}, {"secret", "x"}});
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(r.json().at("error"), "TermsNotAccepted");
  r = api.call("POST", "/auth", {{"handle", "alice"}, {"secret", "wrong"}});
  EXPECT_EQ(r.status, 401);
  EXPECT_EQ(r.json().at("error"), "BadCredentials");
  EXPECT_FALSE(r.json().contains("token"));
  r = api.call("POST", "/users", json::object());
  EXPECT_EQ(r.status, 400);
  api::Request bad;
  bad.method = "POST";
  bad.path = "/users";
  bad.body = "{not json";
  EXPECT_EQ(api.service().handle(bad).status, 400);
}

TEST_F(ApiTest, TokensExpireAfterOneDay) {
  EXPECT_EQ(api.call("GET", "/users/" + alice_id, nullptr, alice).status, 200);
  api.clock().advance(std::chrono::hours{24});
  EXPECT_EQ(api.call("GET", "/users/" + alice_id, nullptr, alice).status, 401);
  const auto fresh = api.login("alice", "pw-alice");
  EXPECT_EQ(api.call("GET", "/users/" + alice_id, nullptr, fresh).status, 200);
}

TEST_F(ApiTest, UnknownRoutesAndMethods) {
  EXPECT_EQ(api.call("GET", "/events", nullptr, alice).status, 404);
  EXPECT_EQ(api.call("GET", "/lives", nullptr, alice).status, 404);
  EXPECT_EQ(api.call("DELETE", "/posts/x", nullptr, alice).status, 405);
  EXPECT_EQ(api.call("PUT", "/communities", json::object(), alice).status, 405);
}

TEST_F(ApiTest, RoleGatesFollowTheDomain) {
  auto r = api.call("POST", "/communities", {{"title", "Networks"}}, alice);
  EXPECT_EQ(r.status, 403);
  EXPECT_EQ(r.json().at("error"), "NotModerator");
  EXPECT_EQ(api.call("POST", "/communities", {{"title", "database"}}, mod).status, 409);
  EXPECT_EQ(api.call("PUT", "/users/" + bob_id + "/role", {{"role", "moderator"}}, mod).status, 403);
  EXPECT_EQ(api.call("PUT", "/users/" + bob_id + "/role", {{"role", "boss"}}, admin).status, 400);
  EXPECT_EQ(api.call("POST", "/communities/" + community + "/surveys",
                     {{"question", "q"}, {"options", {"a", "b"}}}, alice).status, 403);
  EXPECT_EQ(api.call("POST", "/research/grants", {{"user_id", bob_id}, {"signed_term_document", "t"}}, mod).status,
            403);
  EXPECT_EQ(api.call("GET", "/research/export/events", nullptr, admin).status, 403);
}

TEST_F(ApiTest, ProfilesAreReadableByEveryoneAndEditableByTheOwner) {
  auto r = api.call("PATCH", "/users/" + alice_id, {{"bio", "researcher"}}, alice);
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.json().at("profile").at("bio"), "researcher");
  EXPECT_TRUE(r.json().at("feedback").empty());  // profile updates are worth nothing
  EXPECT_EQ(api.call("GET", "/users/" + alice_id, nullptr, bob).json().at("profile").at("bio"), "researcher");
  EXPECT_EQ(api.call("PATCH", "/users/" + alice_id, {{"bio", "hacked"}}, bob).status, 403);
  EXPECT_EQ(api.call("PATCH", "/users/" + alice_id, {{"visibility", "friends"}}, alice).json().at("error"),
            "UnknownField");
  EXPECT_EQ(api.call("PATCH", "/users/" + alice_id, {{"bio", std::string(3000, 'x')}}, alice).status, 400);
  const auto img = api.call("POST", "/attachments",
                            {{"kind", "image"}, {"content_ref", "blob://a.png"}, {"size_bytes", 100},
                             {"declared_media_type", "image/png"}}, alice);
  ASSERT_EQ(img.status, 201);
  r = api.call("PATCH", "/users/" + alice_id, {{"avatar_ref", img.json().at("attachment_id")}}, alice);
  EXPECT_EQ(r.json().at("profile").at("avatar_ref"), img.json().at("attachment_id"));
  EXPECT_EQ(api.call("GET", "/users/user-404", nullptr, bob).status, 404);
}

TEST_F(ApiTest, PostingEarnsFeedback) {
  // alice has 8 XP from creating the discussion; a post takes her to level 1.
  const auto r = api.call("POST", "/discussions/" + discussion + "/posts", {{"body", "hello"}}, alice);
  ASSERT_EQ(r.status, 201);
  const auto fb = r.json().at("feedback");
  ASSERT_EQ(fb.size(), 3u);
  EXPECT_EQ(fb[0].at("kind"), "xp_gained");
  EXPECT_EQ(fb[0].at("value"), 10);
  EXPECT_EQ(fb[1].at("kind"), "level_up");
  EXPECT_EQ(fb[2].at("kind"), "medal_unlocked");
  const auto me = api.call("GET", "/gamification/me", nullptr, alice).json();
  EXPECT_EQ(me.at("total_xp"), 18);
  EXPECT_EQ(me.at("level"), 1);
  EXPECT_EQ(me.at("current_level_threshold"), 10);
  EXPECT_EQ(me.at("next_level_threshold"), 40);
  EXPECT_EQ(me.at("xp_into_level"), 8);
  EXPECT_EQ(me.at("xp_for_next_level"), 30);
  ASSERT_EQ(me.at("medals").size(), 1u);
  EXPECT_EQ(me.at("medals")[0].at("name"), "Newcomer");
}

TEST_F(ApiTest, PostValidationOverHttp) {
  const auto path = "/discussions/" + discussion + "/posts";
  EXPECT_EQ(api.call("POST", path, {{"body", ""}}, alice).json().at("error"), "EmptyPost");
  const auto pdf = api.call("POST", path, {{"body", ""}, {"attachment", {{"kind", "pdf"}, {"content_ref", "blob://x.pdf"},
                                            {"size_bytes", 1 << 20}, {"declared_media_type", "application/pdf"}}}},
                            alice);
  EXPECT_EQ(pdf.status, 201);
  EXPECT_EQ(pdf.json().at("attachment").at("kind"), "pdf");
  const auto huge = api.call("POST", path, {{"body", ""}, {"attachment", {{"kind", "video"}, {"content_ref", "blob://x"},
                                             {"size_bytes", 26 << 20}, {"declared_media_type", "video/mp4"}}}},
                             alice);
  EXPECT_EQ(huge.status, 413);
  const auto audio = api.call("POST", path, {{"body", ""}, {"attachment", {{"kind", "audio"}, {"content_ref", "blob://x"},
                                              {"size_bytes", 10}, {"declared_media_type", "audio/ogg"}}}},
                              alice);
  EXPECT_EQ(audio.status, 415);
  EXPECT_EQ(api.call("POST", "/discussions/discussion-404/posts", {{"body", "x"}}, alice).status, 404);
}

TEST_F(ApiTest, ReactionsAndSparseFields) {
  const auto p = post(bob, "hello world");
  EXPECT_EQ(api.call("POST", "/posts/" + p + "/likes", json::object(), alice).status, 201);
  auto again = api.call("POST", "/posts/" + p + "/likes", json::object(), alice);
  EXPECT_EQ(again.status, 409);
  EXPECT_EQ(again.json().at("error"), "AlreadyLiked");
  EXPECT_EQ(api.call("POST", "/posts/" + p + "/comments", {{"body", "nice"}}, alice).status, 201);
  EXPECT_EQ(api.call("POST", "/posts/" + p + "/comments", {{"body", ""}}, alice).status, 400);
  EXPECT_EQ(api.call("GET", "/posts/" + p + "/comments", nullptr, bob).json().at("total"), 1);
  EXPECT_EQ(api.call("POST", "/posts/" + p + "/shares", json::object(), alice).status, 201);
  EXPECT_EQ(api.call("GET", "/users/" + alice_id + "/feed", nullptr, bob).json().at("total"), 1);
  EXPECT_EQ(api.call("GET", "/posts/" + p + "?fields=body", nullptr, alice).json(),
            (json{{"post_id", p}, {"body", "hello world"}}));
  EXPECT_EQ(api.call("GET", "/posts/" + p + "?fields=bogus", nullptr, alice).json().at("error"), "UnknownField");
  EXPECT_EQ(api.call("GET", "/posts/post-404", nullptr, alice).status, 404);
}

TEST_F(ApiTest, ModeratorsHidePosts) {
  const auto p = post(bob, "spam");
  EXPECT_EQ(api.call("POST", "/posts/" + p + "/hide", json::object(), alice).status, 403);
  const auto r = api.call("POST", "/posts/" + p + "/hide", json::object(), mod);
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.json().at("hidden"), true);
  EXPECT_EQ(api.call("GET", "/posts/" + p, nullptr, alice).json().at("body"), "");
}

TEST_F(ApiTest, ChatIsPrivateToTheConversation) {
  EXPECT_EQ(api.call("POST", "/chats/" + bob_id + "/messages", {{"body", "hi"}}, alice).status, 201);
  EXPECT_EQ(api.call("POST", "/chats/" + alice_id + "/messages", {{"body", "hey"}}, bob).status, 201);
  const auto from_bob = api.call("GET", "/chats/" + alice_id, nullptr, bob).json();
  ASSERT_EQ(from_bob.at("items").size(), 2u);
  EXPECT_EQ(from_bob.at("items")[0].at("body"), "hi");
  EXPECT_EQ(api.call("GET", "/chats/" + alice_id, nullptr, mod).json().at("total"), 0);
  EXPECT_EQ(api.call("POST", "/chats/user-404/messages", {{"body", "hi"}}, alice).status, 404);
  EXPECT_EQ(api.call("POST", "/chats/" + bob_id + "/messages", {{"body", ""}}, alice).status, 400);
}

TEST_F(ApiTest, SurveyRoundTripReturnsResultsAndXp) {
  const auto s = api.call("POST", "/communities/" + community + "/surveys",
                          {{"question", "Preferred meeting day?"}, {"options", {"Mon", "Wed"}}}, mod);
  ASSERT_EQ(s.status, 201);
  const std::string sid = s.json().at("survey_id");
  const auto answered = api.call("POST", "/surveys/" + sid + "/answers", {{"option_index", 1}}, bob);
  ASSERT_EQ(answered.status, 201);
  const auto body = answered.json();
  EXPECT_EQ(body.at("results").at("counts"), (json{0, 1}));
  EXPECT_EQ(body.at("gamification").at("total_xp"), 5);
  EXPECT_EQ(body.at("feedback")[0].at("value"), 5);
  EXPECT_EQ(api.call("POST", "/surveys/" + sid + "/answers", {{"option_index", 0}}, bob).status, 409);
  EXPECT_EQ(api.call("POST", "/surveys/" + sid + "/answers", {{"option_index", 7}}, alice).status, 400);
  EXPECT_EQ(api.call("POST", "/surveys/" + sid + "/answers", {{"option_index", "one"}}, alice).status, 400);
  const auto results = api.call("GET", "/surveys/" + sid + "/results", nullptr, alice).json();
  EXPECT_EQ(results.at("total_respondents"), 1);
  EXPECT_EQ(results.dump().find(bob_id), std::string::npos);
  EXPECT_EQ(api.call("POST", "/surveys/" + sid + "/close", json::object(), alice).status, 403);
  EXPECT_EQ(api.call("POST", "/surveys/" + sid + "/close", json::object(), mod).json().at("status"), "closed");
  EXPECT_EQ(api.call("POST", "/surveys/" + sid + "/answers", {{"option_index", 0}}, alice).status, 409);
  EXPECT_EQ(api.call("GET", "/communities/" + community + "/surveys", nullptr, alice).json().at("total"), 1);
}

TEST_F(ApiTest, LeaderboardRanksByXp) {
  post(bob, "one");
  post(bob, "two");
  const auto board = api.call("GET", "/leaderboard?limit=2", nullptr, alice).json().at("items");
  ASSERT_EQ(board.size(), 2u);
  EXPECT_EQ(board[0].at("user_id"), bob_id);
  EXPECT_EQ(board[0].at("total_xp"), 20);
  EXPECT_EQ(board[1].at("user_id"), alice_id);
  EXPECT_EQ(api.call("GET", "/leaderboard?limit=0", nullptr, alice).status, 400);
}

TEST_F(ApiTest, FeedPaginatesNewestFirstWithoutGaps) {
  for (int i = 0; i < 250; ++i) post(bob, "post " + std::to_string(i));
  std::vector<std::size_t> sizes;
  std::set<std::string> seen;
  std::string cursor;
  do {
    auto target = "/discussions/" + discussion + "/posts?limit=100";
    if (!cursor.empty()) target += "&cursor=" + cursor;
    const auto page = api.call("GET", target, nullptr, alice).json();
    sizes.push_back(page.at("items").size());
    for (const auto& item : page.at("items")) EXPECT_TRUE(seen.insert(item.at("item_id")).second);
    if (sizes.size() == 1) EXPECT_EQ(page.at("items")[0].at("body"), "post 249");
    cursor = page.at("next_cursor").is_null() ? "" : page.at("next_cursor").get<std::string>();
    if (sizes.size() == 1) post(bob, "appended during the walk");
  } while (!cursor.empty());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{100, 100, 50}));
  EXPECT_EQ(api.call("GET", "/discussions/" + discussion + "/posts?limit=101", nullptr, alice).status, 400);
  EXPECT_EQ(api.call("GET", "/discussions/" + discussion + "/posts?cursor=nope", nullptr, alice).status, 400);
}

TEST_F(ApiTest, LargeResponsesAreCompressedWhenNegotiated) {
  for (int i = 0; i < 100; ++i) post(bob, "A post about relational databases, number " + std::to_string(i));
  const auto path = "/discussions/" + discussion + "/posts?limit=100";
  const auto plain = api.call("GET", path, nullptr, alice);
  const auto packed = api.call("GET", path, nullptr, alice, {{"accept-encoding", "gzip, deflate"}});
  EXPECT_EQ(plain.header("content-encoding"), "");
  EXPECT_EQ(packed.header("content-encoding"), "gzip");
  EXPECT_LT(packed.raw.size(), plain.raw.size());
  EXPECT_EQ(packed.json(), plain.json());
  const auto small = api.call("GET", "/users/" + alice_id, nullptr, alice, {{"accept-encoding", "gzip"}});
  EXPECT_EQ(small.header("content-encoding"), "");
  const auto refused = api.call("GET", path, nullptr, alice, {{"accept-encoding", "gzip;q=0"}});
  EXPECT_EQ(refused.header("content-encoding"), "");
}

TEST_F(ApiTest, MediaTypeNegotiation) {
  EXPECT_EQ(api.call("GET", "/users/" + alice_id, nullptr, alice, {{"accept", "application/json"}}).status, 200);
  EXPECT_EQ(api.call("GET", "/users/" + alice_id, nullptr, alice, {{"accept", "*/*"}}).status, 200);
  EXPECT_EQ(api.call("GET", "/users/" + alice_id, nullptr, alice, {{"accept", "text/html, application/*;q=0.5"}}).status,
            200);
  const auto r = api.call("GET", "/users/" + alice_id, nullptr, alice, {{"accept", "text/html"}});
  EXPECT_EQ(r.status, 406);
  EXPECT_EQ(r.json().at("error"), "NotAcceptable");
}

TEST_F(ApiTest, ResearcherExportsOverHttp) {
  const auto p = post(bob, "hello");
  api.call("POST", "/posts/" + p + "/likes", json::object(), alice);
  auto [rid, researcher] = api.signup("rita");
  EXPECT_EQ(api.call("GET", "/research/export/users", nullptr, researcher).status, 403);
  EXPECT_EQ(api.call("POST", "/research/grants", {{"user_id", rid}, {"signed_term_document", ""}}, admin).status, 400);
  const auto g = api.call("POST", "/research/grants", {{"user_id", rid}, {"signed_term_document", "I agree"}}, admin);
  ASSERT_EQ(g.status, 201);
  EXPECT_EQ(g.json().at("active"), true);

  const auto events = api.call("GET", "/research/export/events", nullptr, researcher);
  EXPECT_EQ(events.header("content-type"), "application/x-ndjson");
  EXPECT_EQ(research::parse_events(events.raw), api.store().events(0, api.store().snapshot().max_event_id));
  EXPECT_EQ(api.call("GET", "/research/export/events?range=bogus", nullptr, researcher).status, 400);
  const auto ranged = api.call("GET", "/research/export/events?range=2030-01-01T00:00:00Z/", nullptr, researcher);
  EXPECT_TRUE(research::parse_events(ranged.raw).empty());

  const auto users = api.call("GET", "/research/export/users", nullptr, researcher);
  EXPECT_EQ(users.header("content-type"), "text/csv");
  EXPECT_EQ(users.raw.rfind("user_id,handle,role,created_at,terms_version,terms_accepted_at\n", 0), 0u);

  const auto graph = api.call("GET", "/research/export/graph?kinds=like", nullptr, researcher);
  EXPECT_EQ(graph.header("content-type"), "text/tab-separated-values");
  EXPECT_NE(graph.raw.find(alice_id + "\t" + bob_id + "\t1"), std::string::npos);
  EXPECT_EQ(api.call("GET", "/research/export/graph?kinds=poke", nullptr, researcher).status, 400);

  const auto metrics = api.call("GET", "/research/metrics", nullptr, researcher).json();
  EXPECT_EQ(metrics.at("graph"), "directed");
  EXPECT_EQ(metrics.at("edge_count"), 1);
  EXPECT_EQ(api.call("GET", "/research/posts/" + p + "/success", nullptr, researcher).json().at("interaction_success"), 1);

  EXPECT_EQ(api.call("POST", "/research/grants/" + rid + "/revoke", json::object(), admin).status, 200);
  EXPECT_EQ(api.call("GET", "/research/metrics", nullptr, researcher).status, 403);
}

TEST_F(ApiTest, CommunityListingsPaginate) {
  for (int i = 0; i < 5; ++i) {
    ASSERT_EQ(api.call("POST", "/communities", {{"title", "c" + std::to_string(i)}}, mod).status, 201);
  }
  const auto page = api.call("GET", "/communities?limit=4&fields=title", nullptr, alice).json();
  EXPECT_EQ(page.at("total"), 6);
  EXPECT_EQ(page.at("items").size(), 4u);
  EXPECT_EQ(page.at("items")[0], (json{{"community_id", community}, {"title", "Database"}}));
  EXPECT_FALSE(page.at("next_cursor").is_null());
  const auto d = api.call("GET", "/communities/" + community + "/discussions", nullptr, bob).json();
  EXPECT_EQ(d.at("items")[0].at("title"), "SQL");
  EXPECT_EQ(api.call("GET", "/communities/community-404/discussions", nullptr, bob).status, 404);
}

}  // namespace
}  // namespace agora::api
