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

#include "agora/research/export.hpp"

#include <sstream>

#include "agora/common/crypto.hpp"

namespace agora::research {

using nlohmann::json;

namespace {

constexpr std::string_view kGrantKind = "grant";
constexpr std::string_view kEventsFormat = "agora.interaction_events";

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

bool TimeRange::contains(Timestamp ts) const {
  return (!from || ts >= *from) && (!to || ts < *to);
}

TimeRange parse_time_range(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos || text.find('/', slash + 1) != std::string_view::npos) {
    throw Error(ErrorCode::InvalidRange, std::string(text));
  }
  auto end = [&](std::string_view part) -> std::optional<Timestamp> {
    if (part.empty()) return std::nullopt;
    auto ts = parse_iso8601(part);
    if (!ts) throw Error(ErrorCode::InvalidRange, std::string(part));
    return ts;
  };
  TimeRange r{end(text.substr(0, slash)), end(text.substr(slash + 1))};
  if (r.from && r.to && *r.from > *r.to) throw Error(ErrorCode::InvalidRange, "from after to");
  return r;
}

std::string format_events(const std::vector<InteractionEvent>& events,
                          EventId snapshot_event_id) {
  std::string out = json{{"format", kEventsFormat},
                         {"version", 1},
                         {"snapshot_event_id", snapshot_event_id},
                         {"count", events.size()},
                         {"fields",
                          {"event_id", "occurred_at", "actor_id", "verb", "object_id",
                           "object_owner_id"}}}
                        .dump();
  out += '\n';
  for (const auto& e : events) {
    out += json(e).dump();
    out += '\n';
  }
  return out;
}

std::vector<InteractionEvent> parse_events(std::string_view text) {
  std::vector<InteractionEvent> out;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::BadRequest, "missing header");
  try {
    const auto header = json::parse(line);
    if (header.at("format") != kEventsFormat) throw Error(ErrorCode::BadRequest, "bad header");
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      out.push_back(json::parse(line).get<InteractionEvent>());
    }
    if (header.at("count").get<std::size_t>() != out.size()) {
      throw Error(ErrorCode::BadRequest, "record count does not match header");
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadRequest, e.what());
  }
  return out;
}

std::string format_users(const std::vector<User>& users) {
  std::string out = "user_id,handle,role,created_at,terms_version,terms_accepted_at\n";
  for (const auto& u : users) {
    out += csv_field(u.user_id.str()) + ',' + csv_field(u.handle) + ',' +
           std::string(to_string(u.role)) + ',' + format_iso8601(u.created_at) + ',' +
           csv_field(u.terms_version) + ',' + format_iso8601(u.terms_accepted_at) + '\n';
  }
  return out;
}

std::string format_graph(const SocialGraph& graph, const std::set<Verb>& kinds,
                         EventId snapshot_event_id) {
  std::string out = "# directed interaction graph, kinds=" + kinds_label(kinds) +
                    ", snapshot_event_id=" + std::to_string(snapshot_event_id) + "\n";
  for (const auto& [edge, weight] : graph.edges) {
    out += edge.first.str() + '\t' + edge.second.str() + '\t' + std::to_string(weight) + '\n';
  }
  return out;
}

json metrics_json(const GraphMetrics& m, const std::set<Verb>& kinds, EventId snapshot_event_id) {
  json degrees = json::object();
  for (const auto& [node, d] : m.degree_stats) {
    degrees[node.str()] = {{"in", d.in}, {"out", d.out}, {"total", d.total}};
  }
  return json{{"kinds", kinds_label(kinds)},
              {"snapshot_event_id", snapshot_event_id},
              {"graph", "directed"},
              {"projection", "undirected projection for total degree, centralization and components"},
              {"node_count", m.node_count},
              {"edge_count", m.edge_count},
              {"density", m.density},
              {"undirected_density", m.undirected_density},
              {"degree_centralization", m.degree_centralization},
              {"weakly_connected_components", m.weakly_connected_components},
              {"degree_stats", degrees}};
}

void to_json(json& j, const ResearcherGrant& g) {
  j = json{{"user_id", g.user_id},
           {"compromise_term_doc_hash", g.compromise_term_doc_hash},
           {"signed_at", timestamp_json(g.signed_at)},
           {"granted_by", g.granted_by},
           {"active", g.active}};
}

void from_json(const json& j, ResearcherGrant& g) {
  g.user_id = j.at("user_id").get<UserId>();
  g.compromise_term_doc_hash = j.at("compromise_term_doc_hash").get<std::string>();
  g.signed_at = timestamp_from_json(j.at("signed_at"));
  g.granted_by = j.at("granted_by").get<UserId>();
  g.active = j.at("active").get<bool>();
}

void ResearchService::require_admin(const UserId& caller) const {
  auto user = platform_.find_user(caller);
  if (!user || !user->administrator) throw Error(ErrorCode::NotAdministrator);
}

void ResearchService::require_grant(const UserId& caller) const {
  if (!has_active_grant(caller)) throw Error(ErrorCode::NotAuthorizedResearcher);
}

ResearcherGrant ResearchService::grant_researcher(const UserId& admin, const UserId& user,
                                                  const std::string& signed_term_doc) {
  require_admin(admin);
  if (signed_term_doc.empty()) throw Error(ErrorCode::EmptyTermDocument);
  platform_.get_user(user);
  ResearcherGrant g{user, crypto::sha256_hex(signed_term_doc), platform_.clock().now(), admin, true};
  store::WriteBatch batch;
  batch.puts.push_back({std::string(kGrantKind), user.str(), "", 0, json(g)});
  platform_.store().commit(batch);
  return g;
}

ResearcherGrant ResearchService::revoke_grant(const UserId& admin, const UserId& user) {
  require_admin(admin);
  auto g = grant_of(user);
  if (!g) throw Error(ErrorCode::NotAuthorizedResearcher, user.str());
  g->active = false;
  store::WriteBatch batch;
  batch.puts.push_back({std::string(kGrantKind), user.str(), "", 0, json(*g)});
  platform_.store().commit(batch);
  return *g;
}

std::optional<ResearcherGrant> ResearchService::grant_of(const UserId& user) const {
  auto d = platform_.store().get(kGrantKind, user.str());
  if (!d) return std::nullopt;
  return d->body.get<ResearcherGrant>();
}

bool ResearchService::has_active_grant(const UserId& user) const {
  auto g = grant_of(user);
  return g && g->active && !g->compromise_term_doc_hash.empty();
}

EventExport ResearchService::export_events(const UserId& caller,
                                           const std::optional<TimeRange>& range) const {
  require_grant(caller);
  const auto snap = platform_.store().snapshot();
  EventExport out{snap.max_event_id, platform_.store().events(0, snap.max_event_id)};
  if (range) {
    std::erase_if(out.events, [&](const auto& e) { return !range->contains(e.occurred_at); });
  }
  return out;
}

std::vector<User> ResearchService::export_users(const UserId& caller) const {
  require_grant(caller);
  const auto snap = platform_.store().snapshot();
  std::vector<User> out;
  for (const auto& d : platform_.store().list(kind::kUser)) {
    if (d.seq <= snap.max_seq) out.push_back(d.body.get<User>());
  }
  return out;
}

GraphExport ResearchService::export_graph(const UserId& caller, const std::set<Verb>& kinds) const {
  require_grant(caller);
  auto ledger = export_events(caller);
  return {ledger.snapshot_event_id, kinds, build_graph(ledger.events, kinds)};
}

GraphMetrics ResearchService::metrics(const UserId& caller, const std::set<Verb>& kinds) const {
  return graph_metrics(export_graph(caller, kinds).graph);
}

std::vector<surveys::SurveyResponse> ResearchService::export_survey_responses(
    const UserId& caller, const SurveyId& survey) const {
  require_grant(caller);
  surveys_.get_survey(survey);
  return surveys_.responses(survey);
}

std::uint64_t ResearchService::post_success(const UserId& caller, const PostId& post,
                                            const SuccessWeights& weights) const {
  require_grant(caller);
  if (!platform_.find_post(post)) throw Error(ErrorCode::UnknownPost, post.str());
  const auto ledger = export_events(caller);
  return interaction_success(post.str(), ledger.events, weights);
}

}  // namespace agora::research
