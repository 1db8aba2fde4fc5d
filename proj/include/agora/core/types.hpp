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

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include <json.hpp>

#include "agora/common/ids.hpp"
#include "agora/common/time.hpp"

namespace agora {

enum class Role { Moderator, Ordinary };

std::string_view to_string(Role role) noexcept;
std::optional<Role> parse_role(std::string_view text) noexcept;

/// Profiles carry no visibility settings: every field is public to every
/// authenticated user.
struct ProfileCustomization {
  std::string bio;
  std::optional<AttachmentId> avatar_ref;
  std::optional<AttachmentId> banner_ref;

  friend bool operator==(const ProfileCustomization&, const ProfileCustomization&) = default;
};

struct User {
  UserId user_id;
  std::string handle;
  std::string display_name;
  Role role = Role::Ordinary;
  bool administrator = false;
  ProfileCustomization profile;
  Timestamp terms_accepted_at{};
  std::string terms_version;
  Timestamp created_at{};
};

enum class AttachmentKind { Pdf, Video, Image };

std::string_view to_string(AttachmentKind kind) noexcept;
std::optional<AttachmentKind> parse_attachment_kind(std::string_view text) noexcept;

struct Attachment {
  AttachmentId attachment_id;
  AttachmentKind kind = AttachmentKind::Pdf;
  std::string content_ref;
  std::uint64_t size_bytes = 0;
  std::string declared_media_type;
  UserId uploader_id;
  Timestamp created_at{};
};

/// What a client supplies when attaching media; the platform assigns the id.
struct AttachmentUpload {
  std::string kind;
  std::string content_ref;
  std::uint64_t size_bytes = 0;
  std::string declared_media_type;
};

struct Community {
  CommunityId community_id;
  std::string title;
  std::string description;
  std::set<UserId> moderator_ids;
  Timestamp created_at{};
};

struct Discussion {
  DiscussionId discussion_id;
  CommunityId community_id;
  std::string title;
  UserId creator_id;
  Timestamp created_at{};
};

struct Post {
  PostId post_id;
  DiscussionId discussion_id;
  UserId author_id;
  std::string body;
  std::optional<Attachment> attachment;
  bool hidden = false;
  Timestamp created_at{};
};

struct Comment {
  CommentId comment_id;
  PostId post_id;
  UserId author_id;
  std::string body;
  Timestamp created_at{};
};

struct Share {
  std::string share_id;
  PostId post_id;
  UserId actor_id;
  std::optional<DiscussionId> target_discussion_id;  // none = actor's profile feed
  Timestamp created_at{};
};

struct ChatMessage {
  MessageId message_id;
  UserId sender_id;
  UserId recipient_id;
  std::string body;
  Timestamp sent_at{};
};

struct ProfilePatch {
  std::optional<std::string> display_name;
  std::optional<std::string> bio;
  std::optional<std::string> avatar_ref;  // empty string clears
  std::optional<std::string> banner_ref;
};

struct PlatformLimits {
  std::uint64_t max_attachment_bytes = 25ull * 1024 * 1024;
  std::size_t max_post_chars = 10000;
  std::size_t max_comment_chars = 10000;
  std::size_t max_bio_chars = 2000;
  std::size_t max_chat_chars = 2000;
  std::size_t max_display_name_chars = 100;
  std::size_t max_handle_chars = 32;
};

/// Number of UTF-8 code points (invalid bytes count as one each).
std::size_t utf8_length(std::string_view text) noexcept;

void to_json(nlohmann::json& j, const ProfileCustomization& p);
void from_json(const nlohmann::json& j, ProfileCustomization& p);
void to_json(nlohmann::json& j, const User& u);
void from_json(const nlohmann::json& j, User& u);
void to_json(nlohmann::json& j, const Attachment& a);
void from_json(const nlohmann::json& j, Attachment& a);
void to_json(nlohmann::json& j, const Community& c);
void from_json(const nlohmann::json& j, Community& c);
void to_json(nlohmann::json& j, const Discussion& d);
void from_json(const nlohmann::json& j, Discussion& d);
void to_json(nlohmann::json& j, const Post& p);
void from_json(const nlohmann::json& j, Post& p);
void to_json(nlohmann::json& j, const Comment& c);
void from_json(const nlohmann::json& j, Comment& c);
void to_json(nlohmann::json& j, const Share& s);
void from_json(const nlohmann::json& j, Share& s);
void to_json(nlohmann::json& j, const ChatMessage& m);
void from_json(const nlohmann::json& j, ChatMessage& m);

// Shared by every module that stores timestamps in JSON.
nlohmann::json timestamp_json(Timestamp ts);
Timestamp timestamp_from_json(const nlohmann::json& j);

}  // namespace agora
