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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace agora::api {

/// Transport-independent request. Header names are lower-case.
struct Request {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::map<std::string, std::string> headers;
  std::string body;

  std::optional<std::string> query_param(const std::string& name) const;
  std::optional<std::string> header(const std::string& name) const;
};

struct Response {
  int status = 200;
  std::map<std::string, std::string> headers;
  std::string body;

  std::optional<std::string> header(const std::string& name) const;
};

using PathParams = std::map<std::string, std::string>;

/// Method + pattern routing. Patterns use `{name}` for one path segment.
template <typename Handler>
class Router {
 public:
  struct Route {
    std::string method;
    std::string pattern;
    bool requires_auth = true;
    Handler handler;
  };

  enum class Outcome { Matched, NoPath, WrongMethod };

  void add(std::string method, std::string pattern, bool requires_auth, Handler handler) {
    routes_.push_back({std::move(method), std::move(pattern), requires_auth, std::move(handler)});
  }

  Outcome match(std::string_view method, std::string_view path, const Route*& route,
                PathParams& params) const {
    bool path_seen = false;
    for (const auto& r : routes_) {
      PathParams p;
      if (!match_pattern(r.pattern, path, p)) continue;
      path_seen = true;
      if (r.method != method) continue;
      route = &r;
      params = std::move(p);
      return Outcome::Matched;
    }
    return path_seen ? Outcome::WrongMethod : Outcome::NoPath;
  }

  const std::vector<Route>& routes() const noexcept { return routes_; }

 private:
  static std::vector<std::string_view> segments(std::string_view path) {
    std::vector<std::string_view> out;
    while (!path.empty()) {
      if (path.front() == '/') {
        path.remove_prefix(1);
        continue;
      }
      const auto slash = path.find('/');
      out.push_back(path.substr(0, slash));
      if (slash == std::string_view::npos) break;
      path.remove_prefix(slash);
    }
    return out;
  }

  static bool match_pattern(std::string_view pattern, std::string_view path, PathParams& params) {
    const auto want = segments(pattern);
    const auto have = segments(path);
    if (want.size() != have.size()) return false;
    for (std::size_t i = 0; i < want.size(); ++i) {
      const auto w = want[i];
      if (w.size() > 2 && w.front() == '{' && w.back() == '}') {
        if (have[i].empty()) return false;
        params[std::string(w.substr(1, w.size() - 2))] = std::string(have[i]);
      } else if (w != have[i]) {
        return false;
      }
    }
    return true;
  }

  std::vector<Route> routes_;
};

}  // namespace agora::api
