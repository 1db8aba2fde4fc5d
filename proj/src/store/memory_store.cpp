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

#include "agora/store/memory_store.hpp"

#include <mutex>
#include <set>

namespace agora::store {

CommitReceipt MemoryStore::commit(const WriteBatch& batch) {
  std::unique_lock lock(mutex_);

  std::set<Key> claimed;
  for (const auto& uk : batch.unique_keys) {
    Key k{uk.scope, uk.key};
    if (unique_.contains(k) || !claimed.insert(k).second) throw UniqueViolation(uk);
  }

  // Mutations are applied in place and rolled back from this undo log if a
  // later stage throws.
  std::vector<Key> inserted_keys;
  std::vector<std::pair<Key, std::optional<Document>>> replaced;
  const auto saved_seq = max_seq_;
  const auto saved_ledger = ledger_.size();

  auto unindex = [&](const Document& d) {
    by_partition_[{d.kind, d.partition}].erase(d.seq);
    by_kind_[d.kind].erase(d.seq);
  };
  auto index = [&](const Document& d) {
    by_partition_[{d.kind, d.partition}][d.seq] = d.id;
    by_kind_[d.kind][d.seq] = d.id;
  };

  try {
    for (const auto& uk : batch.unique_keys) {
      unique_.emplace(Key{uk.scope, uk.key}, uk.value);
      inserted_keys.push_back({uk.scope, uk.key});
    }
    fire(CommitStage::AfterUniqueKeys);

    for (const auto& doc : batch.puts) {
      Key k{doc.kind, doc.id};
      auto it = documents_.find(k);
      Document stored = doc;
      if (it != documents_.end()) {
        replaced.emplace_back(k, it->second);
        stored.seq = it->second.seq;
        unindex(it->second);
        it->second = stored;
      } else {
        replaced.emplace_back(k, std::nullopt);
        stored.seq = ++max_seq_;
        documents_.emplace(k, stored);
      }
      index(stored);
    }
    fire(CommitStage::AfterPuts);

    CommitReceipt receipt;
    if (batch.event) {
      fire(CommitStage::BeforeAppend);
      const auto& d = *batch.event;
      InteractionEvent e{ledger_.size() + 1, d.actor_id, d.verb, d.object_id,
                         d.object_owner_id, d.occurred_at};
      ledger_.push_back(std::move(e));
      receipt.event_id = ledger_.back().event_id;
    }
    return receipt;
  } catch (...) {
    ledger_.resize(saved_ledger);
    for (auto it = replaced.rbegin(); it != replaced.rend(); ++it) {
      auto cur = documents_.find(it->first);
      unindex(cur->second);
      if (it->second) {
        cur->second = *it->second;
        index(cur->second);
      } else {
        documents_.erase(cur);
      }
    }
    for (const auto& k : inserted_keys) unique_.erase(k);
    max_seq_ = saved_seq;
    throw;
  }
}

std::optional<Document> MemoryStore::get(std::string_view kind, std::string_view id) const {
  std::shared_lock lock(mutex_);
  auto it = documents_.find(Key{std::string(kind), std::string(id)});
  if (it == documents_.end()) return std::nullopt;
  return it->second;
}

std::vector<Document> MemoryStore::list(std::string_view kind,
                                        std::optional<std::string_view> partition) const {
  std::shared_lock lock(mutex_);
  const std::map<std::uint64_t, std::string>* ids = nullptr;
  if (partition) {
    auto it = by_partition_.find(Key{std::string(kind), std::string(*partition)});
    if (it != by_partition_.end()) ids = &it->second;
  } else {
    auto it = by_kind_.find(std::string(kind));
    if (it != by_kind_.end()) ids = &it->second;
  }
  std::vector<Document> out;
  if (!ids) return out;
  out.reserve(ids->size());
  for (const auto& [seq, id] : *ids) {
    out.push_back(documents_.at(Key{std::string(kind), id}));
  }
  return out;
}

std::optional<std::string> MemoryStore::lookup_unique(std::string_view scope,
                                                      std::string_view key) const {
  std::shared_lock lock(mutex_);
  auto it = unique_.find(Key{std::string(scope), std::string(key)});
  if (it == unique_.end()) return std::nullopt;
  return it->second;
}

std::vector<InteractionEvent> MemoryStore::events(EventId after, EventId upto) const {
  std::shared_lock lock(mutex_);
  std::vector<InteractionEvent> out;
  const EventId last = std::min<EventId>(upto, ledger_.size());
  for (EventId id = after + 1; id <= last; ++id) out.push_back(ledger_[id - 1]);
  return out;
}

Snapshot MemoryStore::snapshot() const {
  std::shared_lock lock(mutex_);
  return {ledger_.size(), max_seq_};
}

std::string MemoryStore::next_id(std::string_view prefix) {
  std::unique_lock lock(mutex_);
  const auto n = ++id_counters_[std::string(prefix)];
  return std::string(prefix) + "-" + std::to_string(n);
}

}  // namespace agora::store
