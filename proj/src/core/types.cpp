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

#include "agora/core/types.hpp"

#include "agora/common/error.hpp"

namespace agora {

using nlohmann::json;

std::string_view to_string(Role role) noexcept {
  return role == Role::Moderator ? "moderator" : "ordinary";
}

std::optional<Role> parse_role(std::string_view text) noexcept {
  if (text == "moderator") return Role::Moderator;
  if (text == "ordinary") return Role::Ordinary;
  return std::nullopt;
}

std::string_view to_string(AttachmentKind kind) noexcept {
  switch (kind) {
    case AttachmentKind::Pdf: return "pdf";
    case AttachmentKind::Video: return "video";
    case AttachmentKind::Image: return "image";
  }
  return "unknown";
}

std::optional<AttachmentKind> parse_attachment_kind(std::string_view text) noexcept {
  if (text == "pdf") return AttachmentKind::Pdf;
  if (text == "video") return AttachmentKind::Video;
  if (text == "image") return AttachmentKind::Image;
  return std::nullopt;
}

std::size_t utf8_length(std::string_view text) noexcept {
  std::size_t n = 0;
  for (unsigned char c : text) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

json timestamp_json(Timestamp ts) { return format_iso8601(ts); }

Timestamp timestamp_from_json(const json& j) {
  auto ts = parse_iso8601(j.get<std::string>());
  if (!ts) throw Error(ErrorCode::BadRequest, "bad timestamp");
  return *ts;
}

namespace {

template <typename Id>
json optional_id(const std::optional<Id>& id) {
  return id ? json(*id) : json(nullptr);
}

template <typename Id>
std::optional<Id> optional_id_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<Id>();
}

}  // namespace

void to_json(json& j, const ProfileCustomization& p) {
  j = json{{"bio", p.bio},
           {"avatar_ref", optional_id(p.avatar_ref)},
           {"banner_ref", optional_id(p.banner_ref)},
           {"visible_fields", "all-public"}};
}

void from_json(const json& j, ProfileCustomization& p) {
  p.bio = j.value("bio", "");
  p.avatar_ref = optional_id_from<AttachmentId>(j, "avatar_ref");
  p.banner_ref = optional_id_from<AttachmentId>(j, "banner_ref");
}

void to_json(json& j, const User& u) {
  j = json{{"user_id", u.user_id},
           {"handle", u.handle},
           {"display_name", u.display_name},
           {"role", to_string(u.role)},
           {"administrator", u.administrator},
           {"profile", u.profile},
           {"terms_accepted_at", timestamp_json(u.terms_accepted_at)},
           {"terms_version", u.terms_version},
           {"created_at", timestamp_json(u.created_at)}};
}

void from_json(const json& j, User& u) {
  u.user_id = j.at("user_id").get<UserId>();
  u.handle = j.at("handle").get<std::string>();
  u.display_name = j.at("display_name").get<std::string>();
  u.role = parse_role(j.at("role").get<std::string>()).value_or(Role::Ordinary);
  u.administrator = j.value("administrator", false);
  u.profile = j.at("profile").get<ProfileCustomization>();
  u.terms_accepted_at = timestamp_from_json(j.at("terms_accepted_at"));
  u.terms_version = j.at("terms_version").get<std::string>();
  u.created_at = timestamp_from_json(j.at("created_at"));
}

void to_json(json& j, const Attachment& a) {
  j = json{{"attachment_id", a.attachment_id},
           {"kind", to_string(a.kind)},
           {"content_ref", a.content_ref},
           {"size_bytes", a.size_bytes},
           {"declared_media_type", a.declared_media_type},
           {"uploader_id", a.uploader_id},
           {"created_at", timestamp_json(a.created_at)}};
}

void from_json(const json& j, Attachment& a) {
  a.attachment_id = j.at("attachment_id").get<AttachmentId>();
  a.kind = parse_attachment_kind(j.at("kind").get<std::string>()).value_or(AttachmentKind::Pdf);
  a.content_ref = j.at("content_ref").get<std::string>();
  a.size_bytes = j.at("size_bytes").get<std::uint64_t>();
  a.declared_media_type = j.at("declared_media_type").get<std::string>();
  a.uploader_id = j.at("uploader_id").get<UserId>();
  a.created_at = timestamp_from_json(j.at("created_at"));
}

void to_json(json& j, const Community& c) {
  j = json{{"community_id", c.community_id},
           {"title", c.title},
           {"description", c.description},
           {"moderator_ids", c.moderator_ids},
           {"created_at", timestamp_json(c.created_at)}};
}

void from_json(const json& j, Community& c) {
  c.community_id = j.at("community_id").get<CommunityId>();
  c.title = j.at("title").get<std::string>();
  c.description = j.at("description").get<std::string>();
  c.moderator_ids = j.at("moderator_ids").get<std::set<UserId>>();
  c.created_at = timestamp_from_json(j.at("created_at"));
}

void to_json(json& j, const Discussion& d) {
  j = json{{"discussion_id", d.discussion_id},
           {"community_id", d.community_id},
           {"title", d.title},
           {"creator_id", d.creator_id},
           {"created_at", timestamp_json(d.created_at)}};
}

void from_json(const json& j, Discussion& d) {
  d.discussion_id = j.at("discussion_id").get<DiscussionId>();
  d.community_id = j.at("community_id").get<CommunityId>();
  d.title = j.at("title").get<std::string>();
  d.creator_id = j.at("creator_id").get<UserId>();
  d.created_at = timestamp_from_json(j.at("created_at"));
}

void to_json(json& j, const Post& p) {
  j = json{{"post_id", p.post_id},
           {"discussion_id", p.discussion_id},
           {"author_id", p.author_id},
           {"body", p.body},
           {"attachment", p.attachment ? json(*p.attachment) : json(nullptr)},
           {"hidden", p.hidden},
           {"created_at", timestamp_json(p.created_at)}};
}

void from_json(const json& j, Post& p) {
  p.post_id = j.at("post_id").get<PostId>();
  p.discussion_id = j.at("discussion_id").get<DiscussionId>();
  p.author_id = j.at("author_id").get<UserId>();
  p.body = j.at("body").get<std::string>();
  if (j.contains("attachment") && !j.at("attachment").is_null()) {
    p.attachment = j.at("attachment").get<Attachment>();
  } else {
    p.attachment.reset();
  }
  p.hidden = j.value("hidden", false);
  p.created_at = timestamp_from_json(j.at("created_at"));
}

void to_json(json& j, const Comment& c) {
  j = json{{"comment_id", c.comment_id},
           {"post_id", c.post_id},
           {"author_id", c.author_id},
           {"body", c.body},
           {"created_at", timestamp_json(c.created_at)}};
}

void from_json(const json& j, Comment& c) {
  c.comment_id = j.at("comment_id").get<CommentId>();
  c.post_id = j.at("post_id").get<PostId>();
  c.author_id = j.at("author_id").get<UserId>();
  c.body = j.at("body").get<std::string>();
  c.created_at = timestamp_from_json(j.at("created_at"));
}

void to_json(json& j, const Share& s) {
  j = json{{"share_id", s.share_id},
           {"post_id", s.post_id},
           {"actor_id", s.actor_id},
           {"target_discussion_id", optional_id(s.target_discussion_id)},
           {"created_at", timestamp_json(s.created_at)}};
}

void from_json(const json& j, Share& s) {
  s.share_id = j.at("share_id").get<std::string>();
  s.post_id = j.at("post_id").get<PostId>();
  s.actor_id = j.at("actor_id").get<UserId>();
  s.target_discussion_id = optional_id_from<DiscussionId>(j, "target_discussion_id");
  s.created_at = timestamp_from_json(j.at("created_at"));
}

void to_json(json& j, const ChatMessage& m) {
  j = json{{"message_id", m.message_id},
           {"sender_id", m.sender_id},
           {"recipient_id", m.recipient_id},
           {"body", m.body},
           {"sent_at", timestamp_json(m.sent_at)}};
}

void from_json(const json& j, ChatMessage& m) {
  m.message_id = j.at("message_id").get<MessageId>();
  m.sender_id = j.at("sender_id").get<UserId>();
  m.recipient_id = j.at("recipient_id").get<UserId>();
  m.body = j.at("body").get<std::string>();
  m.sent_at = timestamp_from_json(j.at("sent_at"));
}

}  // namespace agora
