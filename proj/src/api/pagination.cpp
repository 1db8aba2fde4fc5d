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

#include "agora/api/pagination.hpp"

#include <charconv>

namespace agora::api {
namespace {

constexpr std::string_view kPrefix = "c1.";

std::optional<std::uint64_t> to_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::string to_hex(std::uint64_t v) {
  char buf[17];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, 16);
  return std::string(buf, ptr);
}

}  // namespace

std::string encode_cursor(const Cursor& cursor) {
  return std::string(kPrefix) + to_hex(cursor.snapshot) + "." + to_hex(cursor.last);
}

Cursor decode_cursor(std::string_view text) {
  if (text.substr(0, kPrefix.size()) != kPrefix) throw Error(ErrorCode::BadCursor);
  text.remove_prefix(kPrefix.size());
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) throw Error(ErrorCode::BadCursor);
  const auto snapshot = to_u64(text.substr(0, dot));
  const auto last = to_u64(text.substr(dot + 1));
  if (!snapshot || !last || *last > *snapshot) throw Error(ErrorCode::BadCursor);
  return {*snapshot, *last};
}

std::size_t parse_limit(const std::optional<std::string>& text) {
  if (!text) return kDefaultPageSize;
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text->data(), text->data() + text->size(), v);
  if (ec != std::errc{} || ptr != text->data() + text->size() || v < 1 || v > kMaxPageSize) {
    throw Error(ErrorCode::LimitOutOfRange, *text);
  }
  return v;
}

}  // namespace agora::api
