// Copyright 2026 The Ludemic Authors
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

#ifndef LUDEMIC_SERVICE_SERVER_HPP_
#define LUDEMIC_SERVICE_SERVER_HPP_

#include <memory>
#include <string>

#include "ludemic/service/session.hpp"

namespace ludemic::service {

struct ServerOptions {
  std::string host = "127.0.0.1";
  // 0 picks a free port.
  int port = 8080;
  int threads = 8;
};

// HTTP front end over a SessionManager; see docs/api.md.
class Server {
 public:
  Server(SessionManager& sessions, ServerOptions options);
  ~Server();

  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Binds the listening socket. Throws LudemicError if the port is taken.
  void Bind();
  int port() const { return port_; }
  // Serves until Stop(); call Bind() first.
  void Run();
  // Safe to call from any thread.
  void Stop();

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
  ServerOptions options_;
  int port_ = -1;
};

}  // namespace ludemic::service

#endif  // LUDEMIC_SERVICE_SERVER_HPP_
