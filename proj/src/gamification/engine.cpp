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

#include "agora/gamification/engine.hpp"

#include <algorithm>
#include <chrono>

#include "agora/common/error.hpp"
#include "agora/store/store.hpp"

namespace agora::gamification {

std::string_view to_string(FeedbackKind kind) noexcept {
  switch (kind) {
    case FeedbackKind::XpGained: return "xp_gained";
    case FeedbackKind::LevelUp: return "level_up";
    case FeedbackKind::MedalUnlocked: return "medal_unlocked";
    case FeedbackKind::MissionCompleted: return "mission_completed";
  }
  return "unknown";
}

ActionOutcome record_action(const GamificationState& state, const InteractionEvent& event,
                            const GamificationConfig& config) {
  if (event.event_id <= state.last_event_id) {
    throw Error(ErrorCode::OutOfOrderEvent, std::to_string(event.event_id) + " after " +
                                                std::to_string(state.last_event_id));
  }
  ActionOutcome out{state, {}};
  auto& s = out.state;
  if (s.user_id.empty()) s.user_id = event.actor_id;
  if (s.user_id != event.actor_id) {
    throw Error(ErrorCode::InvalidArgument, "event actor does not own this state");
  }
  auto emit = [&](FeedbackKind kind, std::uint64_t value, std::string mission = {}) {
    out.feedback.push_back({kind, s.user_id, value, std::move(mission), event.event_id});
  };

  const auto before = s.total_xp;
  if (const auto points = config.points_for(event.verb); points > 0) {
    s.total_xp += points;
    emit(FeedbackKind::XpGained, points);
  }

  for (const auto& mission : config.missions) {
    if (mission.verb != event.verb) continue;
    auto& progress = s.mission_progress[mission.mission_id];
    const auto window = std::chrono::days{mission.window_days};
    if (progress.count == 0 || event.occurred_at >= progress.window_start + window) {
      progress = MissionProgress{event.occurred_at, 0, false};
    }
    ++progress.count;
    if (!progress.granted && progress.count >= mission.required_count) {
      progress.granted = true;
      s.total_xp += mission.bonus_xp;
      emit(FeedbackKind::MissionCompleted, mission.bonus_xp, mission.mission_id);
      emit(FeedbackKind::XpGained, mission.bonus_xp);
    }
  }

  const int new_level = level_for_xp(s.total_xp, config.base_xp);
  for (int n = s.level + 1; n <= new_level; ++n) {
    emit(FeedbackKind::LevelUp, static_cast<std::uint64_t>(n));
    emit(FeedbackKind::MedalUnlocked, static_cast<std::uint64_t>(n));
    s.medals.insert(n);
  }
  s.level = std::max(s.level, new_level);
  s.last_event_id = event.event_id;
  if (s.total_xp != before) s.xp_reached_event_id = event.event_id;
  return out;
}

StateMap replay(std::span<const InteractionEvent> events, const GamificationConfig& config) {
  StateMap states;
  EventId previous = 0;
  for (const auto& e : events) {
    if (e.event_id <= previous) {
      throw Error(ErrorCode::OutOfOrderEvent, std::to_string(e.event_id));
    }
    previous = e.event_id;
    auto& slot = states[e.actor_id];
    slot = record_action(slot, e, config).state;
  }
  return states;
}

std::vector<LeaderboardEntry> leaderboard(const StateMap& states, std::size_t top_n) {
  if (top_n < 1) throw Error(ErrorCode::InvalidArgument, "top_n must be >= 1");
  std::vector<const GamificationState*> ranked;
  ranked.reserve(states.size());
  for (const auto& [id, s] : states) ranked.push_back(&s);
  std::sort(ranked.begin(), ranked.end(), [](const auto* a, const auto* b) {
    if (a->total_xp != b->total_xp) return a->total_xp > b->total_xp;
    if (a->xp_reached_event_id != b->xp_reached_event_id) {
      return a->xp_reached_event_id < b->xp_reached_event_id;
    }
    return a->user_id < b->user_id;
  });
  std::vector<LeaderboardEntry> out;
  for (std::size_t i = 0; i < ranked.size() && i < top_n; ++i) {
    out.push_back({ranked[i]->user_id, ranked[i]->total_xp, ranked[i]->level});
  }
  return out;
}

std::vector<Medal> medals_of(const GamificationState& state, const GamificationConfig& config) {
  std::vector<Medal> out;
  for (int k = 1; k <= std::min(state.level, kLevelCap); ++k) {
    out.push_back({k, config.medal_names[static_cast<std::size_t>(k - 1)]});
  }
  return out;
}

Tracker::Tracker(GamificationConfig config) : config_(std::move(config)) { config_.validate(); }

void Tracker::catch_up(const store::Store& store) {
  std::lock_guard lock(mutex_);
  const auto snap = store.snapshot();
  if (snap.max_event_id <= last_applied_) return;
  for (const auto& e : store.events(last_applied_, snap.max_event_id)) apply_locked(e);
}

void Tracker::apply(const InteractionEvent& event) {
  std::lock_guard lock(mutex_);
  apply_locked(event);
}

void Tracker::apply_locked(const InteractionEvent& event) {
  if (event.event_id <= last_applied_) {
    throw Error(ErrorCode::OutOfOrderEvent, std::to_string(event.event_id));
  }
  auto& slot = states_[event.actor_id];
  auto outcome = record_action(slot, event, config_);
  slot = std::move(outcome.state);
  auto& history = feedback_[event.actor_id];
  for (auto& f : outcome.feedback) {
    history.push_back(std::move(f));
    if (history.size() > kFeedbackHistory) history.pop_front();
  }
  last_applied_ = event.event_id;
}

GamificationState Tracker::state_of(const UserId& user) const {
  std::lock_guard lock(mutex_);
  auto it = states_.find(user);
  if (it != states_.end()) return it->second;
  GamificationState empty;
  empty.user_id = user;
  return empty;
}

StateMap Tracker::states() const {
  std::lock_guard lock(mutex_);
  return states_;
}

EventId Tracker::last_applied() const {
  std::lock_guard lock(mutex_);
  return last_applied_;
}

std::vector<FeedbackEvent> Tracker::recent_feedback(const UserId& user) const {
  std::lock_guard lock(mutex_);
  auto it = feedback_.find(user);
  if (it == feedback_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

}  // namespace agora::gamification
