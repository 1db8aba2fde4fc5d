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

#include <atomic>
#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "agora/common/error.hpp"
#include "support/expect.hpp"
#include "support/world.hpp"

namespace agora {
namespace {

using testing::World;

class PlatformTest : public ::testing::Test {
 protected:
  World w;
  Platform& p = w.platform;
};

TEST_F(PlatformTest, RegisterCreatesOrdinaryUserWithConsent) {
  const auto ana = p.register_user("ana", "Ana", "s3cret", "v1");
  EXPECT_EQ(ana.role, Role::Ordinary);
  EXPECT_FALSE(ana.administrator);
  EXPECT_EQ(ana.terms_version, "v1");
  EXPECT_EQ(ana.terms_accepted_at, w.clock.now());
  const auto last = w.store->events(0, w.store->snapshot().max_event_id).back();
  EXPECT_EQ(last.verb, Verb::Register);
  EXPECT_EQ(last.actor_id, ana.user_id);
  EXPECT_FALSE(last.object_owner_id);
}

TEST_F(PlatformTest, RegisterRejectsDuplicatesAndMissingConsent) {
  p.register_user("ana", "Ana", "s", "v1");
  const auto before = w.ledger_size();
  EXPECT_CODE(p.register_user("ana", "Other", "s", "v1"), ErrorCode::DuplicateHandle);
  EXPECT_CODE(p.register_user("ANA", "Other", "s", "v1"), ErrorCode::DuplicateHandle);
  EXPECT_CODE(p.register_user("bobby", "Bob", "s", std::nullopt), ErrorCode::TermsNotAccepted);
  EXPECT_CODE(p.register_user("bobby", "Bob", "s", "v0"), ErrorCode::TermsNotAccepted);
  EXPECT_CODE(p.register_user("", "Bob", "s", "v1"), ErrorCode::InvalidArgument);
  EXPECT_CODE(p.register_user("has space", "Bob", "s", "v1"), ErrorCode::InvalidArgument);
  EXPECT_CODE(p.register_user(std::string(33, 'a'), "Bob", "s", "v1"), ErrorCode::FieldTooLarge);
  EXPECT_EQ(w.ledger_size(), before);
}

TEST_F(PlatformTest, CredentialsVerify) {
  const auto ana = p.register_user("ana", "Ana", "s3cret", "v1");
  EXPECT_EQ(p.verify_credentials("ana", "s3cret").user_id, ana.user_id);
  EXPECT_CODE(p.verify_credentials("ana", "wrong"), ErrorCode::BadCredentials);
  EXPECT_CODE(p.verify_credentials("nobody", "s3cret"), ErrorCode::BadCredentials);
}

TEST_F(PlatformTest, SecretsAreStoredOnlyAsSaltedHashes) {
  p.register_user("ana", "Ana", "plain-secret-value", "v1");
  for (const auto kind : {kind::kUser, kind::kCredential}) {
    for (const auto& d : w.store->list(kind)) {
      EXPECT_EQ(d.body.dump().find("plain-secret-value"), std::string::npos);
    }
  }
}

TEST_F(PlatformTest, OnlyModeratorsCreateCommunities) {
  const auto c = p.create_community(w.mod.user_id, "Database", "");
  EXPECT_EQ(c.moderator_ids, std::set<UserId>{w.mod.user_id});
  const auto before = w.ledger_size();
  EXPECT_CODE(p.create_community(w.alice.user_id, "Networks", ""), ErrorCode::NotModerator);
  EXPECT_CODE(p.create_community(w.mod.user_id, "database", ""), ErrorCode::DuplicateTitle);
  EXPECT_EQ(w.ledger_size(), before);
}

TEST_F(PlatformTest, RoleAssignmentIsAdministratorOnly) {
  EXPECT_CODE(p.assign_role(w.mod.user_id, w.alice.user_id, Role::Moderator), ErrorCode::NotAdministrator);
  const auto promoted = p.assign_role(w.admin.user_id, w.alice.user_id, Role::Moderator);
  EXPECT_EQ(promoted.role, Role::Moderator);
  EXPECT_NO_THROW(p.create_community(w.alice.user_id, "Database", ""));
  EXPECT_CODE(p.assign_role(w.admin.user_id, UserId{"user-404"}, Role::Moderator), ErrorCode::UnknownUser);
}

TEST_F(PlatformTest, AnyUserCreatesDiscussions) {
  const auto java = p.create_discussion(w.mod.user_id, w.community.community_id, "JAVA");
  EXPECT_EQ(java.community_id, w.community.community_id);
  EXPECT_EQ(p.discussions(w.community.community_id).size(), 2u);
  EXPECT_CODE(p.create_discussion(w.alice.user_id, CommunityId{"community-404"}, "x"),
              ErrorCode::UnknownCommunity);
}

TEST_F(PlatformTest, PostsAcceptTextAndMediaAttachments) {
  const auto text = p.create_post(w.alice.user_id, w.discussion.discussion_id, "hello", std::nullopt);
  EXPECT_FALSE(text.attachment);
  const auto doc = p.create_post(w.alice.user_id, w.discussion.discussion_id, "", testing::pdf());
  ASSERT_TRUE(doc.attachment);
  EXPECT_EQ(doc.attachment->kind, AttachmentKind::Pdf);
  const auto clip = p.create_post(w.bob.user_id, w.discussion.discussion_id, "watch", testing::video());
  EXPECT_EQ(clip.attachment->kind, AttachmentKind::Video);
  const auto last = w.store->events(0, w.store->snapshot().max_event_id).back();
  EXPECT_EQ(last.verb, Verb::Post);
  EXPECT_EQ(last.object_owner_id, w.bob.user_id);
}

TEST_F(PlatformTest, PostRejections) {
  const auto d = w.discussion.discussion_id;
  const auto before = w.ledger_size();
  EXPECT_CODE(p.create_post(w.alice.user_id, d, "", std::nullopt), ErrorCode::EmptyPost);
  EXPECT_CODE(p.create_post(w.alice.user_id, d, "  \n", std::nullopt), ErrorCode::EmptyPost);
  EXPECT_CODE(p.create_post(w.alice.user_id, DiscussionId{"discussion-404"}, "x", std::nullopt),
              ErrorCode::UnknownDiscussion);
  EXPECT_CODE(p.create_post(w.alice.user_id, d, std::string(10001, 'x'), std::nullopt),
              ErrorCode::FieldTooLarge);
  EXPECT_NO_THROW(p.create_post(w.alice.user_id, d, std::string(10000, 'x'), std::nullopt));
  const auto after_ok = w.ledger_size();
  EXPECT_CODE(p.create_post(w.alice.user_id, d, "", testing::pdf(25ull * 1024 * 1024 + 1)),
              ErrorCode::AttachmentTooLarge);
  EXPECT_CODE(p.create_post(w.alice.user_id, d, "", (AttachmentUpload{"audio", "blob://a", 10, "audio/ogg"})),
              ErrorCode::UnsupportedAttachmentKind);
  EXPECT_CODE(p.create_post(w.alice.user_id, d, "", (AttachmentUpload{"pdf", "blob://a", 10, "image/png"})),
              ErrorCode::UnsupportedAttachmentKind);
  EXPECT_CODE(p.create_post(w.alice.user_id, d, "", (AttachmentUpload{"pdf", "", 10, "application/pdf"})),
              ErrorCode::InvalidArgument);
  EXPECT_EQ(w.ledger_size(), after_ok);
  EXPECT_EQ(after_ok, before + 1);
}

TEST_F(PlatformTest, AttachmentAtExactCapIsAccepted) {
  EXPECT_NO_THROW(p.create_post(w.alice.user_id, w.discussion.discussion_id, "",
                                testing::video(25ull * 1024 * 1024)));
}

TEST_F(PlatformTest, LikeOncePerUserAndPost) {
  const auto post = p.create_post(w.bob.user_id, w.discussion.discussion_id, "hi", std::nullopt);
  p.like(w.alice.user_id, post.post_id);
  EXPECT_CODE(p.like(w.alice.user_id, post.post_id), ErrorCode::AlreadyLiked);
  EXPECT_CODE(p.like(w.alice.user_id, PostId{"post-404"}), ErrorCode::UnknownPost);
  p.like(w.bob.user_id, post.post_id);  // self-like is allowed
  std::size_t alice_likes = 0;
  for (const auto& e : w.store->events(0, w.store->snapshot().max_event_id)) {
    if (e.verb == Verb::Like && e.actor_id == w.alice.user_id) {
      ++alice_likes;
      EXPECT_EQ(e.object_owner_id, w.bob.user_id);
    }
  }
  EXPECT_EQ(alice_likes, 1u);
}

TEST_F(PlatformTest, ConcurrentDuplicateLikesHaveOneWinner) {
  const auto post = p.create_post(w.bob.user_id, w.discussion.discussion_id, "hi", std::nullopt);
  std::atomic<int> ok{0}, dup{0};
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&] {
      try {
        p.like(w.alice.user_id, post.post_id);
        ++ok;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::AlreadyLiked) ++dup;
      }
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(ok.load(), 1);
  EXPECT_EQ(dup.load(), 7);
}

TEST_F(PlatformTest, CommentsAndShares) {
  const auto post = p.create_post(w.bob.user_id, w.discussion.discussion_id, "hi", std::nullopt);
  const auto c = p.comment(w.alice.user_id, post.post_id, "nice");
  EXPECT_EQ(p.comments(post.post_id).size(), 1u);
  EXPECT_EQ(c.body, "nice");
  EXPECT_CODE(p.comment(w.alice.user_id, post.post_id, ""), ErrorCode::EmptyComment);
  EXPECT_CODE(p.comment(w.alice.user_id, PostId{"post-404"}, "x"), ErrorCode::UnknownPost);

  const auto d2 = p.create_discussion(w.alice.user_id, w.community.community_id, "JAVA");
  p.share(w.alice.user_id, post.post_id, d2.discussion_id);
  const auto feed = p.discussion_feed(d2.discussion_id);
  ASSERT_EQ(feed.size(), 1u);
  EXPECT_EQ(feed[0].post.post_id, post.post_id);
  EXPECT_EQ(feed[0].shared_by, w.alice.user_id);

  p.share(w.alice.user_id, post.post_id, std::nullopt);
  const auto profile = p.profile_feed(w.alice.user_id);
  ASSERT_EQ(profile.size(), 1u);
  EXPECT_EQ(profile[0].post.post_id, post.post_id);
  EXPECT_CODE(p.share(w.alice.user_id, post.post_id, DiscussionId{"discussion-404"}),
              ErrorCode::UnknownDiscussion);
  for (const auto& e : w.store->events(0, w.store->snapshot().max_event_id)) {
    if (e.verb == Verb::Share || e.verb == Verb::Comment) EXPECT_EQ(e.object_owner_id, w.bob.user_id);
  }
}

TEST_F(PlatformTest, ChatIsOrderedPerConversation) {
  p.send_chat(w.alice.user_id, w.bob.user_id, "hi");
  p.send_chat(w.bob.user_id, w.alice.user_id, "hello");
  p.send_chat(w.alice.user_id, w.mod.user_id, "other");
  const auto convo = p.conversation(w.bob.user_id, w.alice.user_id);
  ASSERT_EQ(convo.size(), 2u);
  EXPECT_EQ(convo[0].second.body, "hi");
  EXPECT_EQ(convo[1].second.body, "hello");
  EXPECT_LT(convo[0].first, convo[1].first);
  EXPECT_TRUE(p.conversation(w.bob.user_id, w.mod.user_id).empty());
  EXPECT_CODE(p.send_chat(w.alice.user_id, UserId{"user-404"}, "hi"), ErrorCode::UnknownRecipient);
  EXPECT_CODE(p.send_chat(w.alice.user_id, w.bob.user_id, ""), ErrorCode::EmptyMessage);
  EXPECT_CODE(p.send_chat(w.alice.user_id, w.bob.user_id, std::string(2001, 'x')), ErrorCode::FieldTooLarge);
  const auto last_chat = w.store->events(0, w.store->snapshot().max_event_id).back();
  EXPECT_EQ(last_chat.verb, Verb::Chat);
  EXPECT_EQ(last_chat.object_owner_id, w.mod.user_id);
}

TEST_F(PlatformTest, ProfileCustomization) {
  ProfilePatch patch;
  patch.bio = "researcher";
  auto u = p.customize_profile(w.alice.user_id, patch);
  EXPECT_EQ(u.profile.bio, "researcher");
  const auto last = w.store->events(0, w.store->snapshot().max_event_id).back();
  EXPECT_EQ(last.verb, Verb::ProfileUpdate);
  EXPECT_FALSE(last.object_owner_id);

  const auto avatar = p.upload_attachment(w.alice.user_id, testing::image());
  patch = {};
  patch.avatar_ref = avatar.attachment_id.str();
  u = p.customize_profile(w.alice.user_id, patch);
  EXPECT_EQ(u.profile.avatar_ref, avatar.attachment_id);
  EXPECT_EQ(u.profile.bio, "researcher");

  patch = {};
  patch.bio = std::string(3000, 'x');
  EXPECT_CODE(p.customize_profile(w.alice.user_id, patch), ErrorCode::FieldTooLarge);
  const auto doc = p.upload_attachment(w.alice.user_id, testing::pdf());
  patch = {};
  patch.banner_ref = doc.attachment_id.str();
  EXPECT_CODE(p.customize_profile(w.alice.user_id, patch), ErrorCode::UnsupportedAttachmentKind);
  patch.banner_ref = "attachment-404";
  EXPECT_CODE(p.customize_profile(w.alice.user_id, patch), ErrorCode::UnknownAttachment);
  patch = {};
  patch.avatar_ref = "";
  EXPECT_FALSE(p.customize_profile(w.alice.user_id, patch).profile.avatar_ref);
}

TEST_F(PlatformTest, HidingMasksContentForModeratorsOnly) {
  const auto post = p.create_post(w.bob.user_id, w.discussion.discussion_id, "spam", testing::pdf());
  const auto events_before = w.ledger_size();
  EXPECT_CODE(p.hide_post(w.alice.user_id, post.post_id), ErrorCode::NotCommunityModerator);
  const auto hidden = p.hide_post(w.mod.user_id, post.post_id);
  EXPECT_TRUE(hidden.hidden);
  EXPECT_EQ(w.ledger_size(), events_before);
  const auto j = feed_item_json(p.discussion_feed(w.discussion.discussion_id).front());
  EXPECT_TRUE(j.at("hidden").get<bool>());
  EXPECT_EQ(j.at("body"), "");
  EXPECT_TRUE(j.at("attachment").is_null());
}

TEST_F(PlatformTest, ProfilesHaveNoRestrictionPath) {
  const auto j = nlohmann::json(p.get_user(w.alice.user_id));
  for (const auto& [key, value] : j.items()) {
    EXPECT_EQ(key.find("restrict"), std::string::npos) << key;
    EXPECT_EQ(key.find("private"), std::string::npos) << key;
  }
  EXPECT_EQ(j.at("profile").at("visible_fields"), "all-public");
}

// Ledger length equals accepted mutating calls, under a random mix of valid
// and invalid operations.
TEST_F(PlatformTest, LedgerCountsExactlyTheAcceptedCalls) {
  std::mt19937_64 rng(7);
  std::vector<UserId> users{w.alice.user_id, w.bob.user_id, w.mod.user_id};
  std::vector<PostId> posts{PostId{"post-404"}};
  std::size_t accepted = w.ledger_size();
  for (int i = 0; i < 400; ++i) {
    const auto& actor = users[rng() % users.size()];
    const auto& post = posts[rng() % posts.size()];
    try {
      switch (rng() % 6) {
        case 0: posts.push_back(p.create_post(actor, w.discussion.discussion_id, rng() % 4 ? "x" : "", std::nullopt).post_id); break;
        case 1: p.like(actor, post); break;
        case 2: p.comment(actor, post, rng() % 3 ? "c" : ""); break;
        case 3: p.share(actor, post, std::nullopt); break;
        case 4: p.send_chat(actor, users[rng() % users.size()], rng() % 5 ? "m" : ""); break;
        case 5: p.create_community(actor, "c" + std::to_string(rng() % 30), ""); break;
      }
      ++accepted;
    } catch (const Error&) {
    }
  }
  EXPECT_EQ(w.ledger_size(), accepted);
  for (const auto& doc : w.store->list(kind::kPost)) {
    EXPECT_TRUE(p.find_discussion(DiscussionId{doc.body.at("discussion_id").get<std::string>()}));
  }
}

TEST(PlatformLimits, Utf8LengthCountsCodePoints) {
  EXPECT_EQ(utf8_length(""), 0u);
  EXPECT_EQ(utf8_length("abc"), 3u);
  EXPECT_EQ(utf8_length("\xc3\xa1gua"), 4u);
  EXPECT_EQ(utf8_length("\xe2\x82\xac"), 1u);
}

}  // namespace
}  // namespace agora
