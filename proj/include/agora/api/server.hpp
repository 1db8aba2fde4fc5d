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

#include <memory>
#include <string>

#include "agora/api/service.hpp"

namespace agora::api {

/// Binds an ApiService to a listening socket. Blocking; stop() from
/// another thread ends listen().
class HttpServer {
 public:
  explicit HttpServer(ApiService& service);
  ~HttpServer();

  /// Port 0 picks a free port; returns the bound port or -1.
  int bind(const std::string& host, int port);
  bool listen();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace agora::api
