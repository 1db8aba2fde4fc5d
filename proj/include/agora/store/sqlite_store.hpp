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

#include <memory>
#include <mutex>
#include <string>

#include "agora/store/store.hpp"

struct sqlite3;

namespace agora::store {

/// Deployment backend: a single SQLite database file. Uniqueness is enforced
/// by primary keys, and each commit is one SQLite transaction.
class SqliteStore final : public Store {
 public:
  /// `path` may be ":memory:".
  explicit SqliteStore(const std::string& path);
  ~SqliteStore() override;

  SqliteStore(const SqliteStore&) = delete;
  SqliteStore& operator=(const SqliteStore&) = delete;

  CommitReceipt commit(const WriteBatch& batch) override;

  std::optional<Document> get(std::string_view kind, std::string_view id) const override;
  std::vector<Document> list(std::string_view kind,
                             std::optional<std::string_view> partition) const override;
  std::optional<std::string> lookup_unique(std::string_view scope,
                                           std::string_view key) const override;
  std::vector<InteractionEvent> events(EventId after, EventId upto) const override;
  Snapshot snapshot() const override;
  std::string next_id(std::string_view prefix) override;

 private:
  void exec(const char* sql) const;
  std::uint64_t bump_counter(std::string_view name);

  mutable std::mutex mutex_;
  sqlite3* db_ = nullptr;
};

}  // namespace agora::store
