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

#include "agora/api/auth.hpp"

#include <charconv>
#include <vector>

#include "agora/common/crypto.hpp"

namespace agora::api {
namespace {

constexpr std::size_t kNonceBytes = 16;

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::optional<std::int64_t> to_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

TokenService::TokenService(const Clock& clock, std::string key_hex, std::chrono::seconds ttl)
    : clock_(clock), key_(std::move(key_hex)), ttl_(ttl) {
  if (key_.empty()) key_ = crypto::random_hex(32);
}

AuthToken TokenService::issue(const UserId& user) const {
  const auto now = clock_.now();
  const auto expires = now + ttl_;
  const auto payload = user.str() + "." + std::to_string(now.time_since_epoch().count()) + "." +
                       std::to_string(expires.time_since_epoch().count()) + "." +
                       crypto::random_hex(kNonceBytes);
  return {payload + "." + crypto::hmac_sha256_hex(key_, payload), user, now, expires};
}

std::optional<UserId> TokenService::verify(const std::string& token) const {
  const auto parts = split(token, '.');
  if (parts.size() != 5 || parts[0].empty() || parts[3].size() != kNonceBytes * 2) {
    return std::nullopt;
  }
  const auto payload = std::string_view(token).substr(0, token.rfind('.'));
  if (!crypto::equal_digests(crypto::hmac_sha256_hex(key_, payload), parts[4])) {
    return std::nullopt;
  }
  const auto expires = to_int(parts[2]);
  if (!expires || clock_.now().time_since_epoch().count() >= *expires) return std::nullopt;
  return UserId{std::string(parts[0])};
}

}  // namespace agora::api
