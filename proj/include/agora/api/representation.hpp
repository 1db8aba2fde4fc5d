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

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace agora::api {

/// Sparse fieldsets. `fields` is a comma-separated list of top-level field
/// names; the result holds exactly those plus `id_field`. Absent `fields`
/// returns the resource unchanged. Throws UnknownField for names the
/// resource does not have.
nlohmann::json select_fields(const nlohmann::json& resource,
                             const std::optional<std::string>& fields,
                             std::string_view id_field);

/// gzip framing (RFC 1952) via zlib.
std::string gzip_compress(std::string_view data);
std::string gzip_decompress(std::string_view data);

/// True if an Accept-Encoding value allows gzip (q=0 disables it).
bool accepts_gzip(std::string_view accept_encoding);

}  // namespace agora::api
