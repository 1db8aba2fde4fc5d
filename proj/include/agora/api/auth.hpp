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

#include <chrono>
#include <optional>
#include <string>

#include "agora/common/ids.hpp"
#include "agora/common/time.hpp"

namespace agora::api {

struct AuthToken {
  std::string token;
  UserId user_id;
  Timestamp issued_at{};
  Timestamp expires_at{};
};

/// Stateless bearer tokens: `<user>.<issued>.<expires>.<nonce>.<mac>`, where
/// the nonce carries 128 random bits and the mac is HMAC-SHA256 under the
/// server key. Nothing is stored server-side, so old tokens stay valid until
/// they expire.
class TokenService {
 public:
  TokenService(const Clock& clock, std::string key_hex, std::chrono::seconds ttl);

  AuthToken issue(const UserId& user) const;
  /// The token's user, or nullopt when malformed, forged or expired.
  std::optional<UserId> verify(const std::string& token) const;

  std::chrono::seconds ttl() const noexcept { return ttl_; }

 private:
  const Clock& clock_;
  std::string key_;
  std::chrono::seconds ttl_;
};

}  // namespace agora::api
