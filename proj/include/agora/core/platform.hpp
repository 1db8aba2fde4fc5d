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

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "agora/common/crypto.hpp"
#include "agora/common/error.hpp"
#include "agora/core/event.hpp"
#include "agora/core/types.hpp"
#include "agora/store/store.hpp"

namespace agora {

namespace kind {
inline constexpr std::string_view kUser = "user";
inline constexpr std::string_view kCredential = "credential";
inline constexpr std::string_view kCommunity = "community";
inline constexpr std::string_view kDiscussion = "discussion";
inline constexpr std::string_view kPost = "post";
inline constexpr std::string_view kComment = "comment";
inline constexpr std::string_view kShare = "share";
inline constexpr std::string_view kChat = "chat";
inline constexpr std::string_view kAttachment = "attachment";
}  // namespace kind

struct PlatformOptions {
  std::string terms_version = "v1";
  PlatformLimits limits;
  int secret_hash_iterations = 100'000;
};

/// A post as it appears in a discussion or profile feed: either the original
/// or a shared reference to it.
struct FeedItem {
  std::uint64_t seq = 0;
  std::string item_id;  // post id, or share id for shared references
  Post post;
  std::optional<UserId> shared_by;
  std::optional<Timestamp> shared_at;
};

nlohmann::json feed_item_json(const FeedItem& item);

/// Users, communities, discussions, posts, reactions, chat and profiles.
/// Every accepted mutating operation appends exactly one ledger event in the
/// same store commit as its entities; rejected operations append nothing.
class Platform {
 public:
  Platform(store::Store& store, const Clock& clock, PlatformOptions options = {});

  const PlatformOptions& options() const noexcept { return options_; }
  store::Store& store() noexcept { return store_; }
  const Clock& clock() const noexcept { return clock_; }

  // Accounts
  User register_user(const std::string& handle, const std::string& display_name,
                     const std::string& secret, const std::optional<std::string>& terms_version);
  /// Creates (or returns the existing) configured administrator account.
  User bootstrap_admin(const std::string& handle, const std::string& secret);
  /// Returns the user whose credentials match, or throws BadCredentials.
  User verify_credentials(const std::string& handle, const std::string& secret) const;
  User assign_role(const UserId& admin, const UserId& target, Role role);
  User customize_profile(const UserId& actor, const ProfilePatch& patch);

  // Forum hierarchy
  Community create_community(const UserId& actor, const std::string& title,
                             const std::string& description);
  Discussion create_discussion(const UserId& actor, const CommunityId& community,
                               const std::string& title);
  Post create_post(const UserId& actor, const DiscussionId& discussion, const std::string& body,
                   const std::optional<AttachmentUpload>& attachment);
  Attachment upload_attachment(const UserId& actor, const AttachmentUpload& upload);
  Post hide_post(const UserId& actor, const PostId& post);

  // Reactions
  void like(const UserId& actor, const PostId& post);
  Comment comment(const UserId& actor, const PostId& post, const std::string& body);
  Share share(const UserId& actor, const PostId& post,
              const std::optional<DiscussionId>& target_discussion);

  ChatMessage send_chat(const UserId& actor, const UserId& recipient, const std::string& body);

  // Reads
  std::optional<User> find_user(const UserId& id) const;
  User get_user(const UserId& id) const;  // UnknownUser
  std::vector<User> users() const;
  std::optional<Community> find_community(const CommunityId& id) const;
  std::vector<Community> communities() const;
  std::vector<Discussion> discussions(const CommunityId& community) const;
  std::optional<Discussion> find_discussion(const DiscussionId& id) const;
  std::optional<Post> find_post(const PostId& id) const;
  std::vector<Comment> comments(const PostId& post) const;
  /// Posts and shared references in a discussion, oldest first (seq order).
  std::vector<FeedItem> discussion_feed(const DiscussionId& discussion) const;
  /// Shared references the user re-emitted to their profile.
  std::vector<FeedItem> profile_feed(const UserId& user) const;
  /// Messages between two users in send order.
  std::vector<std::pair<std::uint64_t, ChatMessage>> conversation(const UserId& a,
                                                                  const UserId& b) const;

  static std::string conversation_key(const UserId& a, const UserId& b);

 private:
  Attachment validate_attachment(const UserId& actor, const AttachmentUpload& upload,
                                 const std::string& id) const;
  store::EventDraft draft(const UserId& actor, Verb verb, std::string object_id,
                          std::optional<UserId> owner) const;
  User require_user(const UserId& id, ErrorCode missing) const;

  store::Store& store_;
  const Clock& clock_;
  PlatformOptions options_;
  // serialises read-modify-write of user documents
  std::mutex user_update_mutex_;
};

std::string lowercase(std::string_view text);

}  // namespace agora
