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

#include "agora/core/platform.hpp"

#include <algorithm>
#include <cctype>

namespace agora {

using nlohmann::json;
using store::Document;
using store::UniqueKey;
using store::UniqueViolation;
using store::WriteBatch;

namespace {

constexpr std::string_view kHandleScope = "handle";
constexpr std::string_view kTitleScope = "community_title";
constexpr std::string_view kLikeScope = "like";
constexpr std::size_t kMaxTitleChars = 200;
constexpr std::size_t kMaxDescriptionChars = 2000;

bool blank(std::string_view text) {
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

bool valid_handle_char(unsigned char c) {
  return std::isalnum(c) != 0 || c == '_' || c == '-' || c == '.';
}

template <typename T>
Document doc(std::string_view kind, std::string id, std::string partition, const T& value) {
  return Document{std::string(kind), std::move(id), std::move(partition), 0, json(value)};
}

template <typename T>
std::optional<T> load(const store::Store& s, std::string_view kind, const std::string& id) {
  auto d = s.get(kind, id);
  if (!d) return std::nullopt;
  return d->body.get<T>();
}

std::string like_key(const UserId& actor, const PostId& post) {
  return actor.str() + "|" + post.str();
}

std::string profile_partition(const UserId& user) { return "profile:" + user.str(); }

bool media_type_matches(AttachmentKind kind, std::string_view media) {
  switch (kind) {
    case AttachmentKind::Pdf: return media == "application/pdf";
    case AttachmentKind::Video: return media.rfind("video/", 0) == 0;
    case AttachmentKind::Image: return media.rfind("image/", 0) == 0;
  }
  return false;
}

}  // namespace

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

json feed_item_json(const FeedItem& item) {
  json j = item.post;
  if (item.post.hidden) {
    j["body"] = "";
    j["attachment"] = nullptr;
  }
  j["item_id"] = item.item_id;
  j["shared_by"] = item.shared_by ? json(*item.shared_by) : json(nullptr);
  j["shared_at"] = item.shared_at ? timestamp_json(*item.shared_at) : json(nullptr);
  return j;
}

Platform::Platform(store::Store& store, const Clock& clock, PlatformOptions options)
    : store_(store), clock_(clock), options_(std::move(options)) {}

std::string Platform::conversation_key(const UserId& a, const UserId& b) {
  return a < b ? a.str() + "|" + b.str() : b.str() + "|" + a.str();
}

store::EventDraft Platform::draft(const UserId& actor, Verb verb, std::string object_id,
                                  std::optional<UserId> owner) const {
  return store::EventDraft{actor, verb, std::move(object_id), std::move(owner), clock_.now()};
}

User Platform::require_user(const UserId& id, ErrorCode missing) const {
  auto user = find_user(id);
  if (!user) throw Error(missing, id.str());
  return *user;
}

User Platform::register_user(const std::string& handle, const std::string& display_name,
                             const std::string& secret,
                             const std::optional<std::string>& terms_version) {
  if (!terms_version || *terms_version != options_.terms_version) {
    throw Error(ErrorCode::TermsNotAccepted, "current terms are " + options_.terms_version);
  }
  if (handle.empty() || !std::all_of(handle.begin(), handle.end(), valid_handle_char)) {
    throw Error(ErrorCode::InvalidArgument, "handle");
  }
  if (utf8_length(handle) > options_.limits.max_handle_chars ||
      utf8_length(display_name) > options_.limits.max_display_name_chars) {
    throw Error(ErrorCode::FieldTooLarge, "handle/display_name");
  }
  if (secret.empty()) throw Error(ErrorCode::InvalidArgument, "secret");
  const auto key = lowercase(handle);
  if (store_.lookup_unique(kHandleScope, key)) throw Error(ErrorCode::DuplicateHandle, handle);

  const auto now = clock_.now();
  User user;
  user.user_id = UserId{store_.next_id("u")};
  user.handle = handle;
  user.display_name = display_name.empty() ? handle : display_name;
  user.role = Role::Ordinary;
  user.terms_accepted_at = now;
  user.terms_version = *terms_version;
  user.created_at = now;
  const auto hashed = crypto::hash_secret(secret, options_.secret_hash_iterations);

  WriteBatch batch;
  batch.unique_keys.push_back({std::string(kHandleScope), key, user.user_id.str()});
  batch.puts.push_back(doc(kind::kUser, user.user_id.str(), "", user));
  batch.puts.push_back(Document{std::string(kind::kCredential), user.user_id.str(), "", 0,
                                json{{"salt", hashed.salt_hex},
                                     {"iterations", hashed.iterations},
                                     {"digest", hashed.digest_hex}}});
  batch.event = draft(user.user_id, Verb::Register, user.user_id.str(), std::nullopt);
  try {
    store_.commit(batch);
  } catch (const UniqueViolation&) {
    throw Error(ErrorCode::DuplicateHandle, handle);
  }
  return user;
}

User Platform::bootstrap_admin(const std::string& handle, const std::string& secret) {
  if (auto existing = store_.lookup_unique(kHandleScope, lowercase(handle))) {
    auto user = require_user(UserId{*existing}, ErrorCode::UnknownUser);
    if (!user.administrator) {
      throw Error(ErrorCode::InvalidArgument, "handle taken by a non-administrator");
    }
    return user;
  }
  auto user = register_user(handle, handle, secret, options_.terms_version);
  user.role = Role::Moderator;
  user.administrator = true;
  WriteBatch batch;
  batch.puts.push_back(doc(kind::kUser, user.user_id.str(), "", user));
  store_.commit(batch);
  return user;
}

User Platform::verify_credentials(const std::string& handle, const std::string& secret) const {
  auto id = store_.lookup_unique(kHandleScope, lowercase(handle));
  if (!id) throw Error(ErrorCode::BadCredentials);
  auto cred = store_.get(kind::kCredential, *id);
  if (!cred) throw Error(ErrorCode::BadCredentials);
  crypto::PasswordHash stored{cred->body.at("salt").get<std::string>(),
                              cred->body.at("iterations").get<int>(),
                              cred->body.at("digest").get<std::string>()};
  if (!crypto::verify_secret(secret, stored)) throw Error(ErrorCode::BadCredentials);
  return require_user(UserId{*id}, ErrorCode::BadCredentials);
}

User Platform::assign_role(const UserId& admin, const UserId& target, Role role) {
  std::lock_guard lock(user_update_mutex_);
  if (!require_user(admin, ErrorCode::NotAdministrator).administrator) {
    throw Error(ErrorCode::NotAdministrator);
  }
  auto user = require_user(target, ErrorCode::UnknownUser);
  if (role == Role::Ordinary) {
    // A community may never be left with a non-moderator owner.
    for (const auto& c : communities()) {
      if (c.moderator_ids.contains(target)) {
        throw Error(ErrorCode::InvalidArgument, "user moderates " + c.title);
      }
    }
    if (user.administrator) throw Error(ErrorCode::InvalidArgument, "administrator");
  }
  user.role = role;
  WriteBatch batch;
  batch.puts.push_back(doc(kind::kUser, user.user_id.str(), "", user));
  store_.commit(batch);
  return user;
}

User Platform::customize_profile(const UserId& actor, const ProfilePatch& patch) {
  std::lock_guard lock(user_update_mutex_);
  auto user = require_user(actor, ErrorCode::UnknownUser);
  const auto& lim = options_.limits;
  if (patch.display_name && utf8_length(*patch.display_name) > lim.max_display_name_chars) {
    throw Error(ErrorCode::FieldTooLarge, "display_name");
  }
  if (patch.bio && utf8_length(*patch.bio) > lim.max_bio_chars) {
    throw Error(ErrorCode::FieldTooLarge, "bio");
  }
  auto resolve_image = [&](const std::string& ref) -> std::optional<AttachmentId> {
    if (ref.empty()) return std::nullopt;
    auto att = load<Attachment>(store_, kind::kAttachment, ref);
    if (!att) throw Error(ErrorCode::UnknownAttachment, ref);
    if (att->kind != AttachmentKind::Image) {
      throw Error(ErrorCode::UnsupportedAttachmentKind, "profile media must be an image");
    }
    return att->attachment_id;
  };
  if (patch.display_name && !patch.display_name->empty()) user.display_name = *patch.display_name;
  if (patch.bio) user.profile.bio = *patch.bio;
  if (patch.avatar_ref) user.profile.avatar_ref = resolve_image(*patch.avatar_ref);
  if (patch.banner_ref) user.profile.banner_ref = resolve_image(*patch.banner_ref);

  WriteBatch batch;
  batch.puts.push_back(doc(kind::kUser, user.user_id.str(), "", user));
  batch.event = draft(actor, Verb::ProfileUpdate, actor.str(), std::nullopt);
  store_.commit(batch);
  return user;
}

Community Platform::create_community(const UserId& actor, const std::string& title,
                                     const std::string& description) {
  if (require_user(actor, ErrorCode::UnknownUser).role != Role::Moderator) {
    throw Error(ErrorCode::NotModerator);
  }
  if (blank(title)) throw Error(ErrorCode::InvalidArgument, "title");
  if (utf8_length(title) > kMaxTitleChars || utf8_length(description) > kMaxDescriptionChars) {
    throw Error(ErrorCode::FieldTooLarge, "title/description");
  }
  const auto key = lowercase(title);
  if (store_.lookup_unique(kTitleScope, key)) throw Error(ErrorCode::DuplicateTitle, title);

  Community c{CommunityId{store_.next_id("c")}, title, description, {actor}, clock_.now()};
  WriteBatch batch;
  batch.unique_keys.push_back({std::string(kTitleScope), key, c.community_id.str()});
  batch.puts.push_back(doc(kind::kCommunity, c.community_id.str(), "", c));
  batch.event = draft(actor, Verb::CreateCommunity, c.community_id.str(), actor);
  try {
    store_.commit(batch);
  } catch (const UniqueViolation&) {
    throw Error(ErrorCode::DuplicateTitle, title);
  }
  return c;
}

Discussion Platform::create_discussion(const UserId& actor, const CommunityId& community,
                                       const std::string& title) {
  require_user(actor, ErrorCode::UnknownUser);
  if (!find_community(community)) throw Error(ErrorCode::UnknownCommunity, community.str());
  if (blank(title)) throw Error(ErrorCode::InvalidArgument, "title");
  if (utf8_length(title) > kMaxTitleChars) throw Error(ErrorCode::FieldTooLarge, "title");

  Discussion d{DiscussionId{store_.next_id("d")}, community, title, actor, clock_.now()};
  WriteBatch batch;
  batch.puts.push_back(doc(kind::kDiscussion, d.discussion_id.str(), community.str(), d));
  batch.event = draft(actor, Verb::CreateDiscussion, d.discussion_id.str(), actor);
  store_.commit(batch);
  return d;
}

Attachment Platform::validate_attachment(const UserId& actor, const AttachmentUpload& upload,
                                         const std::string& id) const {
  const auto kind = parse_attachment_kind(upload.kind);
  if (!kind) throw Error(ErrorCode::UnsupportedAttachmentKind, upload.kind);
  if (!media_type_matches(*kind, upload.declared_media_type)) {
    throw Error(ErrorCode::UnsupportedAttachmentKind,
                upload.declared_media_type + " is not " + upload.kind);
  }
  if (upload.content_ref.empty()) throw Error(ErrorCode::InvalidArgument, "content_ref");
  if (upload.size_bytes == 0) throw Error(ErrorCode::InvalidArgument, "size_bytes");
  if (upload.size_bytes > options_.limits.max_attachment_bytes) {
    throw Error(ErrorCode::AttachmentTooLarge, std::to_string(upload.size_bytes));
  }
  return Attachment{AttachmentId{id}, *kind,  upload.content_ref, upload.size_bytes,
                    upload.declared_media_type, actor, clock_.now()};
}

Attachment Platform::upload_attachment(const UserId& actor, const AttachmentUpload& upload) {
  require_user(actor, ErrorCode::UnknownUser);
  validate_attachment(actor, upload, "");
  auto att = validate_attachment(actor, upload, store_.next_id("a"));
  WriteBatch batch;
  batch.puts.push_back(doc(kind::kAttachment, att.attachment_id.str(), actor.str(), att));
  store_.commit(batch);
  return att;
}

Post Platform::create_post(const UserId& actor, const DiscussionId& discussion,
                           const std::string& body,
                           const std::optional<AttachmentUpload>& attachment) {
  require_user(actor, ErrorCode::UnknownUser);
  if (!find_discussion(discussion)) throw Error(ErrorCode::UnknownDiscussion, discussion.str());
  if (blank(body) && !attachment) throw Error(ErrorCode::EmptyPost);
  if (utf8_length(body) > options_.limits.max_post_chars) {
    throw Error(ErrorCode::FieldTooLarge, "body");
  }
  if (attachment) validate_attachment(actor, *attachment, "");

  Post p;
  p.post_id = PostId{store_.next_id("p")};
  p.discussion_id = discussion;
  p.author_id = actor;
  p.body = body;
  p.created_at = clock_.now();
  WriteBatch batch;
  if (attachment) {
    p.attachment = validate_attachment(actor, *attachment, store_.next_id("a"));
    batch.puts.push_back(
        doc(kind::kAttachment, p.attachment->attachment_id.str(), actor.str(), *p.attachment));
  }
  batch.puts.push_back(doc(kind::kPost, p.post_id.str(), discussion.str(), p));
  batch.event = draft(actor, Verb::Post, p.post_id.str(), actor);
  store_.commit(batch);
  return p;
}

Post Platform::hide_post(const UserId& actor, const PostId& post_id) {
  auto post = find_post(post_id);
  if (!post) throw Error(ErrorCode::UnknownPost, post_id.str());
  const auto discussion = find_discussion(post->discussion_id);
  const auto community = find_community(discussion->community_id);
  if (!community->moderator_ids.contains(actor)) throw Error(ErrorCode::NotCommunityModerator);
  post->hidden = true;
  WriteBatch batch;
  batch.puts.push_back(doc(kind::kPost, post->post_id.str(), post->discussion_id.str(), *post));
  store_.commit(batch);
  return *post;
}

void Platform::like(const UserId& actor, const PostId& post_id) {
  require_user(actor, ErrorCode::UnknownUser);
  auto post = find_post(post_id);
  if (!post) throw Error(ErrorCode::UnknownPost, post_id.str());
  const auto key = like_key(actor, post_id);
  if (store_.lookup_unique(kLikeScope, key)) throw Error(ErrorCode::AlreadyLiked);
  WriteBatch batch;
  batch.unique_keys.push_back({std::string(kLikeScope), key, post_id.str()});
  batch.event = draft(actor, Verb::Like, post_id.str(), post->author_id);
  try {
    store_.commit(batch);
  } catch (const UniqueViolation&) {
    throw Error(ErrorCode::AlreadyLiked);
  }
}

Comment Platform::comment(const UserId& actor, const PostId& post_id, const std::string& body) {
  require_user(actor, ErrorCode::UnknownUser);
  auto post = find_post(post_id);
  if (!post) throw Error(ErrorCode::UnknownPost, post_id.str());
  if (blank(body)) throw Error(ErrorCode::EmptyComment);
  if (utf8_length(body) > options_.limits.max_comment_chars) {
    throw Error(ErrorCode::FieldTooLarge, "body");
  }
  Comment c{CommentId{store_.next_id("k")}, post_id, actor, body, clock_.now()};
  WriteBatch batch;
  batch.puts.push_back(doc(kind::kComment, c.comment_id.str(), post_id.str(), c));
  batch.event = draft(actor, Verb::Comment, post_id.str(), post->author_id);
  store_.commit(batch);
  return c;
}

Share Platform::share(const UserId& actor, const PostId& post_id,
                      const std::optional<DiscussionId>& target) {
  require_user(actor, ErrorCode::UnknownUser);
  auto post = find_post(post_id);
  if (!post) throw Error(ErrorCode::UnknownPost, post_id.str());
  if (target && !find_discussion(*target)) throw Error(ErrorCode::UnknownDiscussion, target->str());
  Share s{store_.next_id("s"), post_id, actor, target, clock_.now()};
  WriteBatch batch;
  batch.puts.push_back(
      doc(kind::kShare, s.share_id, target ? target->str() : profile_partition(actor), s));
  batch.event = draft(actor, Verb::Share, post_id.str(), post->author_id);
  store_.commit(batch);
  return s;
}

ChatMessage Platform::send_chat(const UserId& actor, const UserId& recipient,
                                const std::string& body) {
  require_user(actor, ErrorCode::UnknownUser);
  if (!find_user(recipient)) throw Error(ErrorCode::UnknownRecipient, recipient.str());
  if (blank(body)) throw Error(ErrorCode::EmptyMessage);
  if (utf8_length(body) > options_.limits.max_chat_chars) {
    throw Error(ErrorCode::FieldTooLarge, "body");
  }
  ChatMessage m{MessageId{store_.next_id("m")}, actor, recipient, body, clock_.now()};
  WriteBatch batch;
  batch.puts.push_back(
      doc(kind::kChat, m.message_id.str(), conversation_key(actor, recipient), m));
  batch.event = draft(actor, Verb::Chat, m.message_id.str(), recipient);
  store_.commit(batch);
  return m;
}

std::optional<User> Platform::find_user(const UserId& id) const {
  return load<User>(store_, kind::kUser, id.str());
}

User Platform::get_user(const UserId& id) const { return require_user(id, ErrorCode::UnknownUser); }

std::vector<User> Platform::users() const {
  std::vector<User> out;
  for (const auto& d : store_.list(kind::kUser)) out.push_back(d.body.get<User>());
  return out;
}

std::optional<Community> Platform::find_community(const CommunityId& id) const {
  return load<Community>(store_, kind::kCommunity, id.str());
}

std::vector<Community> Platform::communities() const {
  std::vector<Community> out;
  for (const auto& d : store_.list(kind::kCommunity)) out.push_back(d.body.get<Community>());
  return out;
}

std::vector<Discussion> Platform::discussions(const CommunityId& community) const {
  std::vector<Discussion> out;
  for (const auto& d : store_.list(kind::kDiscussion, community.str())) {
    out.push_back(d.body.get<Discussion>());
  }
  return out;
}

std::optional<Discussion> Platform::find_discussion(const DiscussionId& id) const {
  return load<Discussion>(store_, kind::kDiscussion, id.str());
}

std::optional<Post> Platform::find_post(const PostId& id) const {
  return load<Post>(store_, kind::kPost, id.str());
}

std::vector<Comment> Platform::comments(const PostId& post) const {
  std::vector<Comment> out;
  for (const auto& d : store_.list(kind::kComment, post.str())) out.push_back(d.body.get<Comment>());
  return out;
}

std::vector<FeedItem> Platform::discussion_feed(const DiscussionId& discussion) const {
  std::vector<FeedItem> out;
  for (const auto& d : store_.list(kind::kPost, discussion.str())) {
    auto p = d.body.get<Post>();
    out.push_back(FeedItem{d.seq, p.post_id.str(), std::move(p), std::nullopt, std::nullopt});
  }
  for (const auto& d : store_.list(kind::kShare, discussion.str())) {
    auto s = d.body.get<Share>();
    if (auto p = find_post(s.post_id)) {
      out.push_back(FeedItem{d.seq, s.share_id, std::move(*p), s.actor_id, s.created_at});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.seq < b.seq; });
  return out;
}

std::vector<FeedItem> Platform::profile_feed(const UserId& user) const {
  std::vector<FeedItem> out;
  for (const auto& d : store_.list(kind::kShare, profile_partition(user))) {
    auto s = d.body.get<Share>();
    if (auto p = find_post(s.post_id)) {
      out.push_back(FeedItem{d.seq, s.share_id, std::move(*p), s.actor_id, s.created_at});
    }
  }
  return out;
}

std::vector<std::pair<std::uint64_t, ChatMessage>> Platform::conversation(const UserId& a,
                                                                          const UserId& b) const {
  std::vector<std::pair<std::uint64_t, ChatMessage>> out;
  for (const auto& d : store_.list(kind::kChat, conversation_key(a, b))) {
    out.emplace_back(d.seq, d.body.get<ChatMessage>());
  }
  return out;
}

}  // namespace agora
