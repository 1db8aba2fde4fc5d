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

#include "agora/research/graph.hpp"

#include <algorithm>
#include <numeric>

#include "agora/common/error.hpp"

namespace agora::research {

std::set<Verb> parse_interaction_kinds(const std::vector<std::string>& names) {
  std::set<Verb> kinds;
  for (const auto& name : names) {
    const auto verb = parse_verb(name);
    if (!verb || std::find(kGraphVerbs.begin(), kGraphVerbs.end(), *verb) == kGraphVerbs.end()) {
      throw Error(ErrorCode::UnknownKind, name);
    }
    kinds.insert(*verb);
  }
  return kinds;
}

std::string kinds_label(const std::set<Verb>& kinds) {
  std::string out;
  for (Verb v : kGraphVerbs) {
    if (!kinds.contains(v)) continue;
    if (!out.empty()) out += ',';
    out += to_string(v);
  }
  return out;
}

SocialGraph build_graph(std::span<const InteractionEvent> events, const std::set<Verb>& kinds) {
  for (Verb v : kinds) {
    if (std::find(kGraphVerbs.begin(), kGraphVerbs.end(), v) == kGraphVerbs.end()) {
      throw Error(ErrorCode::UnknownKind, std::string(to_string(v)));
    }
  }
  SocialGraph g;
  for (const auto& e : events) {
    if (!kinds.contains(e.verb) || !e.object_owner_id || *e.object_owner_id == e.actor_id) continue;
    g.nodes.insert(e.actor_id);
    g.nodes.insert(*e.object_owner_id);
    ++g.edges[{e.actor_id, *e.object_owner_id}];
  }
  return g;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

GraphMetrics graph_metrics(const SocialGraph& graph) {
  GraphMetrics m;
  m.node_count = graph.nodes.size();
  m.edge_count = graph.edges.size();
  const double n = static_cast<double>(m.node_count);

  std::map<UserId, std::size_t> index;
  for (const auto& node : graph.nodes) {
    index.emplace(node, index.size());
    m.degree_stats[node] = {};
  }
  std::set<std::pair<UserId, UserId>> undirected;
  DisjointSets sets(m.node_count);
  for (const auto& [edge, weight] : graph.edges) {
    const auto& [src, dst] = edge;
    ++m.degree_stats[src].out;
    ++m.degree_stats[dst].in;
    undirected.insert(std::minmax(src, dst));
    sets.unite(index.at(src), index.at(dst));
  }
  for (const auto& [a, b] : undirected) {
    ++m.degree_stats[a].total;
    ++m.degree_stats[b].total;
  }

  if (m.node_count >= 2) {
    m.density = static_cast<double>(m.edge_count) / (n * (n - 1));
    m.undirected_density = static_cast<double>(undirected.size()) / (n * (n - 1) / 2);
  }
  if (m.node_count >= 3) {
    std::size_t d_max = 0;
    for (const auto& [node, d] : m.degree_stats) d_max = std::max(d_max, d.total);
    std::size_t spread = 0;
    for (const auto& [node, d] : m.degree_stats) spread += d_max - d.total;
    m.degree_centralization = static_cast<double>(spread) / ((n - 1) * (n - 2));
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < m.node_count; ++i) roots.insert(sets.find(i));
  m.weakly_connected_components = roots.size();
  return m;
}

std::uint64_t interaction_success(const std::string& post_id,
                                  std::span<const InteractionEvent> events,
                                  const SuccessWeights& weights) {
  std::uint64_t score = 0;
  for (const auto& e : events) {
    if (e.object_id != post_id) continue;
    switch (e.verb) {
      case Verb::Like: score += weights.like; break;
      case Verb::Comment: score += weights.comment; break;
      case Verb::Share: score += weights.share; break;
      default: break;
    }
  }
  return score;
}

}  // namespace agora::research
