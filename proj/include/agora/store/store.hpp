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

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "agora/core/event.hpp"

namespace agora::store {

/// An entity as the store sees it: a JSON body addressed by (kind, id) and
/// indexed by an optional partition key (parent id, conversation key, ...).
/// `seq` is assigned by the store on first insert and never changes, so it
/// gives a stable insertion order across all kinds.
struct Document {
  std::string kind;
  std::string id;
  std::string partition;
  std::uint64_t seq = 0;
  nlohmann::json body;
};

/// A uniqueness claim. Claiming an existing (scope, key) fails the whole
/// batch. `value` is what lookup_unique returns (usually the owning id).
struct UniqueKey {
  std::string scope;
  std::string key;
  std::string value;
};

struct EventDraft {
  UserId actor_id;
  Verb verb = Verb::Register;
  std::string object_id;
  std::optional<UserId> object_owner_id;
  Timestamp occurred_at{};
};

struct WriteBatch {
  std::vector<UniqueKey> unique_keys;
  std::vector<Document> puts;  // insert or replace; seq is ignored on input
  std::optional<EventDraft> event;
};

struct CommitReceipt {
  std::optional<EventId> event_id;
};

struct Snapshot {
  EventId max_event_id = 0;
  std::uint64_t max_seq = 0;
};

class UniqueViolation : public std::runtime_error {
 public:
  explicit UniqueViolation(UniqueKey key)
      : std::runtime_error("unique violation: " + key.scope + "/" + key.key),
        key_(std::move(key)) {}
  const UniqueKey& key() const noexcept { return key_; }

 private:
  UniqueKey key_;
};

/// Points inside a commit where tests can inject a failure. A throwing hook
/// must leave the store exactly as it was before the commit.
enum class CommitStage { AfterUniqueKeys, AfterPuts, BeforeAppend };
using FaultHook = std::function<void(CommitStage)>;

/// Persistence contract shared by every backend. All operations are
/// thread-safe; commit is atomic and serialises ledger appends, so event
/// ids are strictly increasing with no gaps.
class Store {
 public:
  virtual ~Store() = default;

  virtual CommitReceipt commit(const WriteBatch& batch) = 0;

  virtual std::optional<Document> get(std::string_view kind, std::string_view id) const = 0;
  /// Documents of `kind` in seq order, optionally restricted to a partition.
  virtual std::vector<Document> list(std::string_view kind,
                                     std::optional<std::string_view> partition = {}) const = 0;
  virtual std::optional<std::string> lookup_unique(std::string_view scope,
                                                   std::string_view key) const = 0;

  /// Events with after < event_id <= upto, in event_id order.
  virtual std::vector<InteractionEvent> events(EventId after, EventId upto) const = 0;
  virtual Snapshot snapshot() const = 0;

  /// Fresh id of the form "<prefix>-<n>". Never reused, even when the
  /// commit that would have used it fails.
  virtual std::string next_id(std::string_view prefix) = 0;

  void set_fault_hook(FaultHook hook) { fault_hook_ = std::move(hook); }

 protected:
  void fire(CommitStage stage) const {
    if (fault_hook_) fault_hook_(stage);
  }

 private:
  FaultHook fault_hook_;
};

}  // namespace agora::store
