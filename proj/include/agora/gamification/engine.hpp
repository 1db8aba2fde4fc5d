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
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "agora/core/event.hpp"
#include "agora/gamification/config.hpp"

namespace agora::store {
class Store;
}

namespace agora::gamification {

struct MissionProgress {
  Timestamp window_start{};
  std::uint32_t count = 0;
  bool granted = false;

  friend bool operator==(const MissionProgress&, const MissionProgress&) = default;
};

/// Per-user reward state. level and medals are always derived from
/// total_xp: level = min(9, floor(sqrt(xp / B))), medals = {1..level}.
struct GamificationState {
  UserId user_id;
  std::uint64_t total_xp = 0;
  int level = 0;
  std::set<int> medals;
  std::map<std::string, MissionProgress> mission_progress;
  EventId last_event_id = 0;
  // Ledger position at which total_xp last changed; leaderboard tie-break.
  EventId xp_reached_event_id = 0;

  friend bool operator==(const GamificationState&, const GamificationState&) = default;
};

enum class FeedbackKind { XpGained, LevelUp, MedalUnlocked, MissionCompleted };

std::string_view to_string(FeedbackKind kind) noexcept;

struct FeedbackEvent {
  FeedbackKind kind = FeedbackKind::XpGained;
  UserId user_id;
  // xp amount, new level, medal index, or mission bonus
  std::uint64_t value = 0;
  std::string mission_id;  // MissionCompleted only
  EventId caused_by = 0;

  friend bool operator==(const FeedbackEvent&, const FeedbackEvent&) = default;
};

struct ActionOutcome {
  GamificationState state;
  std::vector<FeedbackEvent> feedback;
};

/// Applies one ledger event to its actor's state. Pure and deterministic.
/// An empty state (no user_id) is initialised for the event's actor.
/// Throws OutOfOrderEvent unless event.event_id > state.last_event_id.
ActionOutcome record_action(const GamificationState& state, const InteractionEvent& event,
                            const GamificationConfig& config);

using StateMap = std::map<UserId, GamificationState>;

/// Folds record_action over a ledger in event_id order.
StateMap replay(std::span<const InteractionEvent> events, const GamificationConfig& config);

struct LeaderboardEntry {
  UserId user_id;
  std::uint64_t total_xp = 0;
  int level = 0;

  friend bool operator==(const LeaderboardEntry&, const LeaderboardEntry&) = default;
};

/// XP descending, then earlier xp_reached_event_id, then user_id ascending.
std::vector<LeaderboardEntry> leaderboard(const StateMap& states, std::size_t top_n);

struct Medal {
  int index = 0;
  std::string name;
};

std::vector<Medal> medals_of(const GamificationState& state, const GamificationConfig& config);

/// Incrementally maintained states, fed from the store ledger in order.
class Tracker {
 public:
  explicit Tracker(GamificationConfig config);

  const GamificationConfig& config() const noexcept { return config_; }

  /// Applies every ledger event after the last applied one.
  void catch_up(const store::Store& store);
  void apply(const InteractionEvent& event);

  GamificationState state_of(const UserId& user) const;
  StateMap states() const;
  EventId last_applied() const;
  /// Most recent feedback for the user, oldest first.
  std::vector<FeedbackEvent> recent_feedback(const UserId& user) const;

 private:
  void apply_locked(const InteractionEvent& event);

  static constexpr std::size_t kFeedbackHistory = 32;

  GamificationConfig config_;
  mutable std::mutex mutex_;
  StateMap states_;
  std::map<UserId, std::deque<FeedbackEvent>> feedback_;
  EventId last_applied_ = 0;
};

}  // namespace agora::gamification
