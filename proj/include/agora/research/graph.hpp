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

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "agora/core/event.hpp"

namespace agora::research {

/// Verbs that can define a social edge.
inline constexpr std::array kGraphVerbs = {Verb::Like, Verb::Comment, Verb::Share, Verb::Chat};

/// Parses kind names; throws UnknownKind for anything outside kGraphVerbs.
std::set<Verb> parse_interaction_kinds(const std::vector<std::string>& names);
std::string kinds_label(const std::set<Verb>& kinds);

/// Directed actor -> content-owner graph. No self-loops; every weight >= 1.
struct SocialGraph {
  std::set<UserId> nodes;
  std::map<std::pair<UserId, UserId>, std::uint64_t> edges;

  friend bool operator==(const SocialGraph&, const SocialGraph&) = default;
};

SocialGraph build_graph(std::span<const InteractionEvent> events, const std::set<Verb>& kinds);

struct DegreeStats {
  std::size_t in = 0;     // distinct predecessors
  std::size_t out = 0;    // distinct successors
  std::size_t total = 0;  // distinct neighbours in the undirected projection

  friend bool operator==(const DegreeStats&, const DegreeStats&) = default;
};

struct GraphMetrics {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double density = 0.0;             // edges / (n(n-1)), directed
  double undirected_density = 0.0;  // undirected edges / (n(n-1)/2)
  std::map<UserId, DegreeStats> degree_stats;
  double degree_centralization = 0.0;  // Freeman, undirected projection
  std::size_t weakly_connected_components = 0;
};

GraphMetrics graph_metrics(const SocialGraph& graph);

struct SuccessWeights {
  std::uint64_t like = 1;
  std::uint64_t comment = 1;
  std::uint64_t share = 1;
};

/// Weighted count of likes, comments and shares whose object is the post.
std::uint64_t interaction_success(const std::string& post_id,
                                  std::span<const InteractionEvent> events,
                                  const SuccessWeights& weights = {});

}  // namespace agora::research
