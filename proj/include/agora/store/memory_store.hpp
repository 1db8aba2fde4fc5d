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

#include <map>
#include <shared_mutex>
#include <unordered_map>

#include "agora/store/store.hpp"

namespace agora::store {

/// Reference in-memory backend.
class MemoryStore final : public Store {
 public:
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
  using Key = std::pair<std::string, std::string>;

  mutable std::shared_mutex mutex_;
  std::map<Key, Document> documents_;
  // (kind, partition) -> seq -> id
  std::map<Key, std::map<std::uint64_t, std::string>> by_partition_;
  std::map<std::string, std::map<std::uint64_t, std::string>> by_kind_;
  std::map<Key, std::string> unique_;
  std::vector<InteractionEvent> ledger_;
  std::uint64_t max_seq_ = 0;
  std::unordered_map<std::string, std::uint64_t> id_counters_;
};

}  // namespace agora::store
