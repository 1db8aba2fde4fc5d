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

#include "agora/store/sqlite_store.hpp"

#include <sqlite3.h>

#include "agora/common/error.hpp"

namespace agora::store {
namespace {

class Statement {
 public:
  Statement(sqlite3* db, const char* sql) : db_(db) {
    if (sqlite3_prepare_v2(db, sql, -1, &stmt_, nullptr) != SQLITE_OK) {
      throw Error(ErrorCode::StoreFailure, sqlite3_errmsg(db));
    }
  }
  ~Statement() { sqlite3_finalize(stmt_); }
  Statement(const Statement&) = delete;
  Statement& operator=(const Statement&) = delete;

  Statement& bind(int idx, std::string_view text) {
    sqlite3_bind_text(stmt_, idx, text.data(), static_cast<int>(text.size()), SQLITE_TRANSIENT);
    return *this;
  }
  Statement& bind(int idx, std::int64_t value) {
    sqlite3_bind_int64(stmt_, idx, value);
    return *this;
  }
  Statement& bind_null(int idx) {
    sqlite3_bind_null(stmt_, idx);
    return *this;
  }

  /// true while a row is available
  bool step() {
    const int rc = sqlite3_step(stmt_);
    if (rc == SQLITE_ROW) return true;
    if (rc == SQLITE_DONE) return false;
    last_rc_ = rc;
    throw Error(ErrorCode::StoreFailure, sqlite3_errmsg(db_));
  }
  int last_rc() const { return last_rc_; }

  std::string text(int col) const {
    const auto* p = sqlite3_column_text(stmt_, col);
    return p ? std::string(reinterpret_cast<const char*>(p)) : std::string();
  }
  bool is_null(int col) const { return sqlite3_column_type(stmt_, col) == SQLITE_NULL; }
  std::int64_t integer(int col) const { return sqlite3_column_int64(stmt_, col); }

 private:
  sqlite3* db_;
  sqlite3_stmt* stmt_ = nullptr;
  int last_rc_ = SQLITE_OK;
};

Document read_document(const Statement& s) {
  Document d;
  d.kind = s.text(0);
  d.id = s.text(1);
  d.partition = s.text(2);
  d.seq = static_cast<std::uint64_t>(s.integer(3));
  d.body = nlohmann::json::parse(s.text(4));
  return d;
}

constexpr const char* kSchema = R"sql(
CREATE TABLE IF NOT EXISTS documents(
  kind TEXT NOT NULL, id TEXT NOT NULL, part TEXT NOT NULL,
  seq INTEGER NOT NULL, body TEXT NOT NULL, PRIMARY KEY(kind, id));
CREATE INDEX IF NOT EXISTS documents_part ON documents(kind, part, seq);
CREATE INDEX IF NOT EXISTS documents_seq ON documents(kind, seq);
CREATE TABLE IF NOT EXISTS uniques(
  scope TEXT NOT NULL, key TEXT NOT NULL, value TEXT NOT NULL, PRIMARY KEY(scope, key));
CREATE TABLE IF NOT EXISTS events(
  event_id INTEGER PRIMARY KEY, actor TEXT NOT NULL, verb TEXT NOT NULL,
  object_id TEXT NOT NULL, owner TEXT, occurred_at INTEGER NOT NULL);
CREATE TABLE IF NOT EXISTS counters(name TEXT PRIMARY KEY, value INTEGER NOT NULL);
)sql";

}  // namespace

SqliteStore::SqliteStore(const std::string& path) {
  if (sqlite3_open_v2(path.c_str(), &db_,
                      SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE | SQLITE_OPEN_FULLMUTEX,
                      nullptr) != SQLITE_OK) {
    std::string msg = db_ ? sqlite3_errmsg(db_) : "cannot open";
    sqlite3_close(db_);
    throw Error(ErrorCode::StoreFailure, msg);
  }
  exec("PRAGMA journal_mode=WAL;");
  exec("PRAGMA synchronous=NORMAL;");
  exec(kSchema);
}

SqliteStore::~SqliteStore() { sqlite3_close(db_); }

void SqliteStore::exec(const char* sql) const {
  char* err = nullptr;
  if (sqlite3_exec(db_, sql, nullptr, nullptr, &err) != SQLITE_OK) {
    std::string msg = err ? err : "sqlite error";
    sqlite3_free(err);
    throw Error(ErrorCode::StoreFailure, msg);
  }
}

std::uint64_t SqliteStore::bump_counter(std::string_view name) {
  Statement up(db_,
               "INSERT INTO counters(name, value) VALUES(?1, 1) "
               "ON CONFLICT(name) DO UPDATE SET value = value + 1 RETURNING value");
  up.bind(1, name);
  if (!up.step()) throw Error(ErrorCode::StoreFailure, "counter");
  const auto value = static_cast<std::uint64_t>(up.integer(0));
  while (up.step()) {
  }
  return value;
}

CommitReceipt SqliteStore::commit(const WriteBatch& batch) {
  std::lock_guard lock(mutex_);
  exec("BEGIN IMMEDIATE;");
  try {
    for (const auto& uk : batch.unique_keys) {
      Statement ins(db_, "INSERT INTO uniques(scope, key, value) VALUES(?1, ?2, ?3)");
      ins.bind(1, uk.scope).bind(2, uk.key).bind(3, uk.value);
      try {
        ins.step();
      } catch (const Error&) {
        if (sqlite3_extended_errcode(db_) == SQLITE_CONSTRAINT_PRIMARYKEY) {
          throw UniqueViolation(uk);
        }
        throw;
      }
    }
    fire(CommitStage::AfterUniqueKeys);

    for (const auto& doc : batch.puts) {
      Statement find(db_, "SELECT seq FROM documents WHERE kind = ?1 AND id = ?2");
      find.bind(1, doc.kind).bind(2, doc.id);
      if (find.step()) {
        Statement upd(db_, "UPDATE documents SET part = ?3, body = ?4 WHERE kind = ?1 AND id = ?2");
        upd.bind(1, doc.kind).bind(2, doc.id).bind(3, doc.partition).bind(4, doc.body.dump());
        upd.step();
      } else {
        const auto seq = bump_counter("#seq");
        Statement ins(db_,
                      "INSERT INTO documents(kind, id, part, seq, body) VALUES(?1, ?2, ?3, ?4, ?5)");
        ins.bind(1, doc.kind).bind(2, doc.id).bind(3, doc.partition);
        ins.bind(4, static_cast<std::int64_t>(seq)).bind(5, doc.body.dump());
        ins.step();
      }
    }
    fire(CommitStage::AfterPuts);

    CommitReceipt receipt;
    if (batch.event) {
      fire(CommitStage::BeforeAppend);
      const auto& e = *batch.event;
      Statement ins(db_,
                    "INSERT INTO events(event_id, actor, verb, object_id, owner, occurred_at) "
                    "VALUES((SELECT COALESCE(MAX(event_id), 0) + 1 FROM events), ?1, ?2, ?3, ?4, ?5) "
                    "RETURNING event_id");
      ins.bind(1, e.actor_id.str()).bind(2, to_string(e.verb)).bind(3, e.object_id);
      if (e.object_owner_id) {
        ins.bind(4, e.object_owner_id->str());
      } else {
        ins.bind_null(4);
      }
      ins.bind(5, static_cast<std::int64_t>(e.occurred_at.time_since_epoch().count()));
      if (!ins.step()) throw Error(ErrorCode::StoreFailure, "append");
      receipt.event_id = static_cast<EventId>(ins.integer(0));
      while (ins.step()) {
      }
    }
    exec("COMMIT;");
    return receipt;
  } catch (...) {
    exec("ROLLBACK;");
    throw;
  }
}

std::optional<Document> SqliteStore::get(std::string_view kind, std::string_view id) const {
  std::lock_guard lock(mutex_);
  Statement s(db_, "SELECT kind, id, part, seq, body FROM documents WHERE kind = ?1 AND id = ?2");
  s.bind(1, kind).bind(2, id);
  if (!s.step()) return std::nullopt;
  return read_document(s);
}

std::vector<Document> SqliteStore::list(std::string_view kind,
                                        std::optional<std::string_view> partition) const {
  std::lock_guard lock(mutex_);
  std::vector<Document> out;
  if (partition) {
    Statement s(db_,
                "SELECT kind, id, part, seq, body FROM documents "
                "WHERE kind = ?1 AND part = ?2 ORDER BY seq");
    s.bind(1, kind).bind(2, *partition);
    while (s.step()) out.push_back(read_document(s));
  } else {
    Statement s(db_, "SELECT kind, id, part, seq, body FROM documents WHERE kind = ?1 ORDER BY seq");
    s.bind(1, kind);
    while (s.step()) out.push_back(read_document(s));
  }
  return out;
}

std::optional<std::string> SqliteStore::lookup_unique(std::string_view scope,
                                                      std::string_view key) const {
  std::lock_guard lock(mutex_);
  Statement s(db_, "SELECT value FROM uniques WHERE scope = ?1 AND key = ?2");
  s.bind(1, scope).bind(2, key);
  if (!s.step()) return std::nullopt;
  return s.text(0);
}

std::vector<InteractionEvent> SqliteStore::events(EventId after, EventId upto) const {
  std::lock_guard lock(mutex_);
  Statement s(db_,
              "SELECT event_id, actor, verb, object_id, owner, occurred_at FROM events "
              "WHERE event_id > ?1 AND event_id <= ?2 ORDER BY event_id");
  s.bind(1, static_cast<std::int64_t>(after));
  s.bind(2, static_cast<std::int64_t>(std::min<EventId>(upto, INT64_MAX)));
  std::vector<InteractionEvent> out;
  while (s.step()) {
    InteractionEvent e;
    e.event_id = static_cast<EventId>(s.integer(0));
    e.actor_id = UserId{s.text(1)};
    e.verb = parse_verb(s.text(2)).value();
    e.object_id = s.text(3);
    if (!s.is_null(4)) e.object_owner_id = UserId{s.text(4)};
    e.occurred_at = Timestamp{std::chrono::seconds{s.integer(5)}};
    out.push_back(std::move(e));
  }
  return out;
}

Snapshot SqliteStore::snapshot() const {
  std::lock_guard lock(mutex_);
  Snapshot snap;
  {
    Statement s(db_, "SELECT COALESCE(MAX(event_id), 0) FROM events");
    s.step();
    snap.max_event_id = static_cast<EventId>(s.integer(0));
  }
  {
    Statement s(db_, "SELECT COALESCE((SELECT value FROM counters WHERE name = '#seq'), 0)");
    s.step();
    snap.max_seq = static_cast<std::uint64_t>(s.integer(0));
  }
  return snap;
}

std::string SqliteStore::next_id(std::string_view prefix) {
  std::lock_guard lock(mutex_);
  const auto n = bump_counter(prefix);
  return std::string(prefix) + "-" + std::to_string(n);
}

}  // namespace agora::store
