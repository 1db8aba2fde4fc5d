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

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>

#include <json.hpp>

namespace agora {

/// Opaque string identifier tagged by the entity it names, so a PostId
/// cannot be passed where a UserId is expected.
template <typename Tag>
class StrongId {
 public:
  StrongId() = default;
  explicit StrongId(std::string value) : value_(std::move(value)) {}

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  friend auto operator<=>(const StrongId&, const StrongId&) = default;
  friend std::ostream& operator<<(std::ostream& os, const StrongId& id) {
    return os << id.value_;
  }
  friend void to_json(nlohmann::json& j, const StrongId& id) { j = id.value_; }
  friend void from_json(const nlohmann::json& j, StrongId& id) {
    id.value_ = j.get<std::string>();
  }

 private:
  std::string value_;
};

using UserId = StrongId<struct UserTag>;
using CommunityId = StrongId<struct CommunityTag>;
using DiscussionId = StrongId<struct DiscussionTag>;
using PostId = StrongId<struct PostTag>;
using CommentId = StrongId<struct CommentTag>;
using AttachmentId = StrongId<struct AttachmentTag>;
using MessageId = StrongId<struct MessageTag>;
using SurveyId = StrongId<struct SurveyTag>;

/// Ledger sequence number; 0 means "before the first event".
using EventId = std::uint64_t;

}  // namespace agora

template <typename Tag>
struct std::hash<agora::StrongId<Tag>> {
  std::size_t operator()(const agora::StrongId<Tag>& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
