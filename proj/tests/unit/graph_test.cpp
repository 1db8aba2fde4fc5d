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

#include <random>

#include <gtest/gtest.h>

#include "agora/research/graph.hpp"
#include "support/expect.hpp"
#include "support/generators.hpp"

namespace agora::research {
namespace {

const std::set<Verb> kAllKinds{Verb::Like, Verb::Comment, Verb::Share, Verb::Chat};

InteractionEvent ev(EventId id, const std::string& actor, Verb verb, const std::string& owner) {
  return {id, UserId{actor}, verb, "obj", UserId{owner}, {}};
}

SocialGraph graph_of(std::initializer_list<std::pair<const char*, const char*>> edges) {
  SocialGraph g;
  for (const auto& [a, b] : edges) {
    g.nodes.insert(UserId{a});
    g.nodes.insert(UserId{b});
    g.edges[{UserId{a}, UserId{b}}] = 1;
  }
  return g;
}

// Adjacency-matrix reference for the undirected-projection metrics.
struct MatrixMetrics {
  double centralization = 0;
  double undirected_density = 0;
  std::size_t components = 0;
};

MatrixMetrics matrix_metrics(const SocialGraph& g) {
  std::vector<UserId> nodes(g.nodes.begin(), g.nodes.end());
  const auto n = nodes.size();
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  auto pos = [&](const UserId& u) {
    return static_cast<std::size_t>(std::find(nodes.begin(), nodes.end(), u) - nodes.begin());
  };
  for (const auto& [e, w] : g.edges) {
    adj[pos(e.first)][pos(e.second)] = 1;
    adj[pos(e.second)][pos(e.first)] = 1;
  }
  MatrixMetrics m;
  std::vector<int> degree(n, 0);
  int edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) degree[i] += adj[i][j];
    edges += degree[i];
  }
  edges /= 2;
  if (n >= 2) m.undirected_density = edges / (n * (n - 1) / 2.0);
  if (n >= 3) {
    const int dmax = *std::max_element(degree.begin(), degree.end());
    int spread = 0;
    for (int d : degree) spread += dmax - d;
    m.centralization = spread / static_cast<double>((n - 1) * (n - 2));
  }
  std::vector<int> seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++m.components;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (std::size_t u = 0; u < n; ++u) {
        if (adj[v][u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
  }
  return m;
}

TEST(BuildGraph, LikeAndCommentAddUp) {
  const std::vector log{ev(1, "u1", Verb::Like, "u2"), ev(2, "u1", Verb::Comment, "u2")};
  const auto g = build_graph(log, kAllKinds);
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_EQ((g.edges.at({UserId{"u1"}, UserId{"u2"}})), 2u);
  EXPECT_EQ(g.nodes, (std::set<UserId>{UserId{"u1"}, UserId{"u2"}}));
}

TEST(BuildGraph, SelfInteractionsAndNonSocialVerbsAreExcluded) {
  const std::vector log{ev(1, "u", Verb::Like, "u"), ev(2, "u", Verb::Post, "v"),
                        InteractionEvent{3, UserId{"w"}, Verb::Register, "w", std::nullopt, {}}};
  const auto g = build_graph(log, kAllKinds);
  EXPECT_TRUE(g.edges.empty());
  EXPECT_TRUE(g.nodes.empty());
}

TEST(BuildGraph, EmptyKindSelectionHasNoEdges) {
  const std::vector log{ev(1, "u1", Verb::Like, "u2")};
  EXPECT_TRUE(build_graph(log, {}).edges.empty());
}

TEST(BuildGraph, KindSelectionFilters) {
  const std::vector log{ev(1, "a", Verb::Like, "b"), ev(2, "a", Verb::Chat, "c")};
  const auto g = build_graph(log, {Verb::Chat});
  ASSERT_EQ(g.edges.size(), 1u);
  EXPECT_TRUE(g.edges.contains({UserId{"a"}, UserId{"c"}}));
}

TEST(BuildGraph, WeightsEqualBruteForceTally) {
  std::mt19937_64 rng(3);
  const std::vector<Verb> verbs{kAllVerbs.begin(), kAllVerbs.end()};
  for (int round = 0; round < 50; ++round) {
    const auto log = testing::random_log(rng, {1 + rng() % 200, 2 + rng() % 15, std::chrono::hours{2}});
    std::set<Verb> kinds;
    for (auto v : kGraphVerbs) {
      if (rng() % 3) kinds.insert(v);
    }
    const auto g = build_graph(log, kinds);
    const auto brute = testing::brute_force_edges(log, kinds);
    ASSERT_EQ(g.edges, brute);
    for (const auto& [e, w] : g.edges) {
      EXPECT_GE(w, 1u);
      EXPECT_NE(e.first, e.second);
      EXPECT_TRUE(g.nodes.contains(e.first));
      EXPECT_TRUE(g.nodes.contains(e.second));
    }
    const auto m = graph_metrics(g);
    EXPECT_GE(m.density, 0.0);
    EXPECT_LE(m.density, 1.0);
    EXPECT_GE(m.degree_centralization, 0.0);
    EXPECT_LE(m.degree_centralization, 1.0);
    const auto ref = matrix_metrics(g);
    EXPECT_DOUBLE_EQ(m.degree_centralization, ref.centralization);
    EXPECT_DOUBLE_EQ(m.undirected_density, ref.undirected_density);
    EXPECT_EQ(m.weakly_connected_components, ref.components);
  }
}

TEST(GraphMetrics, Triangle) {
  const auto m = graph_metrics(graph_of({{"a", "b"}, {"b", "c"}, {"c", "a"}}));
  EXPECT_EQ(m.node_count, 3u);
  EXPECT_DOUBLE_EQ(m.undirected_density, 1.0);
  EXPECT_DOUBLE_EQ(m.density, 0.5);
  EXPECT_DOUBLE_EQ(m.degree_centralization, 0.0);
  EXPECT_EQ(m.weakly_connected_components, 1u);
}

TEST(GraphMetrics, MutualTriangleIsComplete) {
  const auto m = graph_metrics(
      graph_of({{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "b"}, {"c", "a"}, {"a", "c"}}));
  EXPECT_DOUBLE_EQ(m.density, 1.0);
  EXPECT_DOUBLE_EQ(m.degree_centralization, 0.0);
  EXPECT_EQ(m.degree_stats.at(UserId{"a"}), (DegreeStats{2, 2, 2}));
}

TEST(GraphMetrics, FourCycle) {
  const auto m = graph_metrics(graph_of({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}));
  EXPECT_DOUBLE_EQ(m.degree_centralization, 0.0);
  EXPECT_EQ(m.weakly_connected_components, 1u);
}

TEST(GraphMetrics, StarIsMaximallyCentral) {
  for (int leaves = 2; leaves <= 12; ++leaves) {
    SocialGraph g;
    g.nodes.insert(UserId{"hub"});
    for (int i = 0; i < leaves; ++i) {
      const UserId leaf{"leaf" + std::to_string(i)};
      g.nodes.insert(leaf);
      if (i % 2) {
        g.edges[{leaf, UserId{"hub"}}] = 1;
      } else {
        g.edges[{UserId{"hub"}, leaf}] = 3;
      }
    }
    EXPECT_DOUBLE_EQ(graph_metrics(g).degree_centralization, 1.0) << leaves;
  }
}

TEST(GraphMetrics, SmallAndDisconnectedGraphs) {
  EXPECT_EQ(graph_metrics({}).density, 0.0);
  EXPECT_EQ(graph_metrics({}).weakly_connected_components, 0u);
  const auto pair = graph_metrics(graph_of({{"a", "b"}}));
  EXPECT_DOUBLE_EQ(pair.density, 0.5);
  EXPECT_EQ(pair.degree_centralization, 0.0);
  const auto split = graph_metrics(graph_of({{"a", "b"}, {"c", "d"}}));
  EXPECT_EQ(split.weakly_connected_components, 2u);
}

TEST(InteractionKinds, ParseAndLabel) {
  EXPECT_EQ(parse_interaction_kinds({"chat", "like"}), (std::set<Verb>{Verb::Like, Verb::Chat}));
  EXPECT_CODE(parse_interaction_kinds({"post"}), ErrorCode::UnknownKind);
  EXPECT_CODE(parse_interaction_kinds({"poke"}), ErrorCode::UnknownKind);
  EXPECT_EQ(kinds_label(kAllKinds), "like,comment,share,chat");
  EXPECT_EQ(kinds_label({}), "");
}

TEST(InteractionSuccess, CountsReactionsOnThePost) {
  auto on = [](EventId id, Verb v, const std::string& post) {
    return InteractionEvent{id, UserId{"u" + std::to_string(id)}, v, post, UserId{"author"}, {}};
  };
  const std::vector log{on(1, Verb::Like, "p1"), on(2, Verb::Like, "p1"), on(3, Verb::Comment, "p1"),
                        on(4, Verb::Like, "p2"), on(5, Verb::Chat, "p1")};
  EXPECT_EQ(interaction_success("p1", log), 3u);
  EXPECT_EQ(interaction_success("p3", log), 0u);
  std::vector<InteractionEvent> shares;
  for (EventId i = 1; i <= 5; ++i) shares.push_back(on(i, Verb::Share, "p9"));
  EXPECT_EQ(interaction_success("p9", shares), 5u);
  EXPECT_EQ(interaction_success("p1", log, {2, 10, 1}), 2u * 2 + 10);
}

}  // namespace
}  // namespace agora::research
