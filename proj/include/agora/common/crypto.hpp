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

#include <string>
#include <string_view>

namespace agora::crypto {

std::string sha256_hex(std::string_view data);

std::string hmac_sha256_hex(std::string_view key, std::string_view data);

/// Constant-time comparison.
bool equal_digests(std::string_view a, std::string_view b);

/// Hex string of `bytes` bytes from the OS CSPRNG.
std::string random_hex(std::size_t bytes);

struct PasswordHash {
  std::string salt_hex;
  int iterations = 0;
  std::string digest_hex;
};

/// Salted PBKDF2-HMAC-SHA256.
PasswordHash hash_secret(std::string_view secret, int iterations);
bool verify_secret(std::string_view secret, const PasswordHash& stored);

}  // namespace agora::crypto
