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

#include "agora/api/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "agora/common/error.hpp"

namespace agora::api {
namespace {

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  return std::string(v);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void parse_listen(ServiceConfig& c, const std::string& listen) {
  const auto colon = listen.rfind(':');
  if (colon == std::string::npos) throw Error(ErrorCode::InvalidArgument, "listen: host:port");
  c.listen_host = listen.substr(0, colon);
  const auto digits = std::string_view(listen).substr(colon + 1);
  int port = -1;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), port);
  if (ec != std::errc{} || end != digits.data() + digits.size() || port < 0 || port > 65535) {
    throw Error(ErrorCode::InvalidArgument, "listen port");
  }
  c.listen_port = static_cast<std::uint16_t>(port);
}

}  // namespace

ServiceConfig load_service_config(const std::optional<std::filesystem::path>& path) {
  ServiceConfig c;
  if (path) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(*path));
      if (j.contains("listen")) parse_listen(c, j.at("listen").get<std::string>());
      c.storage_path = j.value("storage_path", c.storage_path);
      if (j.contains("gamification_config_path")) {
        auto p = std::filesystem::path(j.at("gamification_config_path").get<std::string>());
        c.gamification_config_path = p.is_relative() ? path->parent_path() / p : p;
      }
      c.admin_handle = j.value("admin_handle", c.admin_handle);
      c.admin_secret = j.value("admin_secret", c.admin_secret);
      c.terms_version = j.value("terms_version", c.terms_version);
      if (j.contains("terms_document_path")) {
        auto p = std::filesystem::path(j.at("terms_document_path").get<std::string>());
        c.terms_document_path = p.is_relative() ? path->parent_path() / p : p;
      }
      if (j.contains("token_ttl_seconds")) {
        c.token_ttl = std::chrono::seconds{j.at("token_ttl_seconds").get<std::int64_t>()};
      }
      c.token_key_hex = j.value("token_key_hex", c.token_key_hex);
      c.compression_threshold = j.value("compression_threshold", c.compression_threshold);
      c.secret_hash_iterations = j.value("secret_hash_iterations", c.secret_hash_iterations);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::InvalidArgument, e.what());
    }
  }
  if (auto v = env("AGORA_LISTEN")) parse_listen(c, *v);
  if (auto v = env("AGORA_STORAGE")) c.storage_path = *v;
  if (auto v = env("AGORA_GAMIFICATION_CONFIG")) c.gamification_config_path = *v;
  if (auto v = env("AGORA_ADMIN_HANDLE")) c.admin_handle = *v;
  if (auto v = env("AGORA_ADMIN_SECRET")) c.admin_secret = *v;
  if (auto v = env("AGORA_TERMS_VERSION")) c.terms_version = *v;
  if (auto v = env("AGORA_TERMS_PATH")) c.terms_document_path = *v;
  if (auto v = env("AGORA_TOKEN_KEY")) c.token_key_hex = *v;

  if (c.gamification_config_path) c.gamification = gamification::load_config(*c.gamification_config_path);
  if (c.terms_document_path) c.terms_document = read_file(*c.terms_document_path);
  if (c.token_ttl.count() <= 0) throw Error(ErrorCode::InvalidArgument, "token_ttl_seconds");
  if (c.secret_hash_iterations < 1) throw Error(ErrorCode::InvalidArgument, "secret_hash_iterations");
  return c;
}

}  // namespace agora::api
