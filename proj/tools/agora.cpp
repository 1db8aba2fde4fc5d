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

// agora: run the API server or work offline on exported event logs.

#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "agora/api/config.hpp"
#include "agora/api/server.hpp"
#include "agora/api/service.hpp"
#include "agora/common/crypto.hpp"
#include "agora/common/error.hpp"
#include "agora/gamification/engine.hpp"
#include "agora/gamification/progression.hpp"
#include "agora/research/export.hpp"
#include "agora/research/graph.hpp"
#include "agora/store/memory_store.hpp"
#include "agora/store/sqlite_store.hpp"

namespace {

using namespace agora;
using nlohmann::json;

agora::api::HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::set<Verb> kinds_from(const std::string& list) {
  std::vector<std::string> names;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) names.push_back(item);
  }
  if (names.empty()) return {research::kGraphVerbs.begin(), research::kGraphVerbs.end()};
  return research::parse_interaction_kinds(names);
}

int serve(const std::string& config_path) {
  std::optional<std::filesystem::path> path;
  if (!config_path.empty()) path = config_path;
  auto config = api::load_service_config(path);
  const bool generated = config.admin_secret.empty();
  if (generated) config.admin_secret = crypto::random_hex(16);

  std::unique_ptr<store::Store> store;
  if (config.storage_path == ":memory:") {
    store = std::make_unique<store::MemoryStore>();
  } else {
    store = std::make_unique<store::SqliteStore>(config.storage_path);
  }
  const SystemClock clock;
  api::ApiService service(config, *store, clock);
  api::HttpServer server(service);
  const int port = server.bind(config.listen_host, config.listen_port);
  if (port < 0) {
    std::cerr << "cannot bind " << config.listen_host << ":" << config.listen_port << "\n";
    return 1;
  }
  if (generated) std::cerr << "administrator " << config.admin_handle << " secret: " << config.admin_secret << "\n";
  std::cerr << "listening on http://" << config.listen_host << ":" << port << "\n";
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  server.listen();
  g_server = nullptr;
  return 0;
}

json state_json(const gamification::GamificationState& s, const gamification::GamificationConfig& config) {
  json medals = json::array();
  for (const auto& m : gamification::medals_of(s, config)) medals.push_back({{"index", m.index}, {"name", m.name}});
  json missions = json::object();
  for (const auto& [id, p] : s.mission_progress) {
    missions[id] = {{"count", p.count}, {"granted", p.granted}, {"window_start", format_iso8601(p.window_start)}};
  }
  return {{"user_id", s.user_id.str()}, {"total_xp", s.total_xp},        {"level", s.level},
          {"medals", medals},          {"missions", missions},          {"last_event_id", s.last_event_id}};
}

int replay_log(const std::string& input, const std::string& config_path, std::size_t top) {
  const auto config = config_path.empty() ? gamification::GamificationConfig{} : gamification::load_config(config_path);
  const auto events = research::parse_events(read_input(input));
  const auto states = gamification::replay(events, config);
  json users = json::array();
  for (const auto& [id, s] : states) users.push_back(state_json(s, config));
  json board = json::array();
  std::size_t rank = 0;
  for (const auto& e : gamification::leaderboard(states, top)) {
    board.push_back({{"rank", ++rank}, {"user_id", e.user_id.str()}, {"total_xp", e.total_xp}, {"level", e.level}});
  }
  std::cout << json{{"events", events.size()}, {"users", users}, {"leaderboard", board}}.dump(2) << "\n";
  return 0;
}

int graph(const std::string& input, const std::string& kinds_list, bool metrics_only) {
  const auto events = research::parse_events(read_input(input));
  const auto kinds = kinds_from(kinds_list);
  const auto g = research::build_graph(events, kinds);
  const EventId last = events.empty() ? 0 : events.back().event_id;
  if (metrics_only) {
    std::cout << research::metrics_json(research::graph_metrics(g), kinds, last).dump(2) << "\n";
  } else {
    std::cout << research::format_graph(g, kinds, last);
  }
  return 0;
}

int levels(std::uint64_t base_xp) {
  std::cout << "level\tthreshold\tincrement\n";
  for (int n = 1; n <= gamification::kLevelCap; ++n) {
    std::cout << n << "\t" << gamification::threshold(n, base_xp) << "\t"
              << gamification::level_increment(n, base_xp) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Agora community platform"};
  app.require_subcommand(1);

  std::string config_path;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  serve_cmd->add_option("-c,--config", config_path, "JSON service config")->check(CLI::ExistingFile);

  std::string input = "-", gamification_path;
  std::size_t top = 10;
  auto* replay_cmd = app.add_subcommand("replay", "Recompute gamification state from an events export");
  replay_cmd->add_option("events", input, "events JSONL file, or - for stdin");
  replay_cmd->add_option("-g,--gamification", gamification_path, "gamification config")->check(CLI::ExistingFile);
  replay_cmd->add_option("-n,--top", top, "leaderboard size");

  std::string kinds;
  bool metrics_only = false;
  auto* graph_cmd = app.add_subcommand("graph", "Build the interaction graph from an events export");
  graph_cmd->add_option("events", input, "events JSONL file, or - for stdin");
  graph_cmd->add_option("-k,--kinds", kinds, "comma list of like,comment,share,chat");
  graph_cmd->add_flag("-m,--metrics", metrics_only, "print metrics instead of the edge list");

  std::uint64_t base_xp = 10;
  auto* levels_cmd = app.add_subcommand("levels", "Print the level threshold table");
  levels_cmd->add_option("-b,--base-xp", base_xp, "base XP")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*serve_cmd) return serve(config_path);
    if (*replay_cmd) return replay_log(input, gamification_path, top);
    if (*graph_cmd) return graph(input, kinds, metrics_only);
    if (*levels_cmd) return levels(base_xp);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
