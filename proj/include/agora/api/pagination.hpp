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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agora/common/error.hpp"

namespace agora::api {

inline constexpr std::size_t kMaxPageSize = 100;
inline constexpr std::size_t kDefaultPageSize = 20;

enum class Order { OldestFirst, NewestFirst };

/// Position in a snapshot-bounded walk: items with seq > snapshot are
/// invisible to every page of the walk, and `last` is the seq of the final
/// item on the previous page.
struct Cursor {
  std::uint64_t snapshot = 0;
  std::uint64_t last = 0;
};

std::string encode_cursor(const Cursor& cursor);
/// Throws BadCursor.
Cursor decode_cursor(std::string_view text);

/// Throws LimitOutOfRange unless 1 <= limit <= 100. Absent means default.
std::size_t parse_limit(const std::optional<std::string>& text);

template <typename T>
struct Page {
  std::vector<T> items;
  std::optional<std::string> next_cursor;
  std::size_t total = 0;  // visible items in the snapshot
};

/// Pages `items` (any order) by their store seq. A fresh walk pins the
/// snapshot to `current_seq`; continuing walks use the cursor's snapshot.
template <typename T, typename SeqOf>
Page<T> paginate(std::vector<T> items, SeqOf seq_of, Order order, std::size_t limit,
                 const std::optional<std::string>& cursor_text, std::uint64_t current_seq) {
  if (limit < 1 || limit > kMaxPageSize) throw Error(ErrorCode::LimitOutOfRange);
  std::optional<Cursor> cursor;
  if (cursor_text) cursor = decode_cursor(*cursor_text);
  const auto snapshot = cursor ? cursor->snapshot : current_seq;

  std::erase_if(items, [&](const T& item) { return seq_of(item) > snapshot; });
  std::sort(items.begin(), items.end(), [&](const T& a, const T& b) {
    return order == Order::OldestFirst ? seq_of(a) < seq_of(b) : seq_of(a) > seq_of(b);
  });
  Page<T> page;
  page.total = items.size();
  auto begin = items.begin();
  if (cursor) {
    begin = std::find_if(items.begin(), items.end(), [&](const T& item) {
      return order == Order::OldestFirst ? seq_of(item) > cursor->last : seq_of(item) < cursor->last;
    });
  }
  const auto remaining = static_cast<std::size_t>(items.end() - begin);
  const auto take = std::min(limit, remaining);
  page.items.assign(std::make_move_iterator(begin), std::make_move_iterator(begin + take));
  if (take < remaining) {
    page.next_cursor = encode_cursor({snapshot, seq_of(page.items.back())});
  }
  return page;
}

}  // namespace agora::api
