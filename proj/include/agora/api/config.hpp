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
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "agora/gamification/config.hpp"

namespace agora::api {

struct ServiceConfig {
  std::string listen_host = "127.0.0.1";
  std::uint16_t listen_port = 8080;
  /// ":memory:" keeps everything in process; anything else is a SQLite file.
  std::string storage_path = ":memory:";
  std::optional<std::filesystem::path> gamification_config_path;
  std::string admin_handle = "admin";
  std::string admin_secret;
  std::string terms_version = "v1";
  std::string terms_document =
      "By registering you agree that your activity on this platform may be used in "
      "scientific studies by researchers who have signed a compromise term.";
  std::optional<std::filesystem::path> terms_document_path;
  std::chrono::seconds token_ttl{24 * 3600};
  std::string token_key_hex;  // empty: random per process
  std::size_t compression_threshold = 1024;
  int secret_hash_iterations = 100'000;

  gamification::GamificationConfig gamification;
};

/// Reads a JSON config file (every key optional, names as the struct
/// members) then applies AGORA_* environment overrides:
/// AGORA_LISTEN (host:port), AGORA_STORAGE, AGORA_GAMIFICATION_CONFIG,
/// AGORA_ADMIN_HANDLE, AGORA_ADMIN_SECRET, AGORA_TERMS_VERSION,
/// AGORA_TERMS_PATH, AGORA_TOKEN_KEY.
ServiceConfig load_service_config(const std::optional<std::filesystem::path>& path);

}  // namespace agora::api
