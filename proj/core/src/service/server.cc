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

#include "ludemic/service/server.hpp"

#include <mutex>

#include <httplib.h>

#include "ludemic/service/wire.hpp"

namespace ludemic::service {
namespace {

int StatusFor(const std::string& code) {
  if (code == "unknown-game" || code == "unknown-session") return 404;
  if (code == "wrong-turn") return 409;
  return 400;
}

void Send(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

}  // namespace

class Server::Impl {
 public:
  explicit Impl(SessionManager& sessions) : sessions_(sessions) {
    server_.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
    // httplib's defaults add SO_REUSEPORT, which lets a second server bind
    // the same port silently.
    server_.set_socket_options([](socket_t sock) {
      int yes = 1;
      setsockopt(sock, SOL_SOCKET, SO_REUSEADDR,
                 reinterpret_cast<const void*>(&yes), sizeof yes);
    });
    server_.Options(R"(/api/.*)", [](const httplib::Request&,
                                      httplib::Response& res) {
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
      res.status = 204;
    });
    server_.Get("/api/health", [this](const httplib::Request&,
                                      httplib::Response& res) {
      Send(res, 200, {{"status", "ok"}, {"sessions", sessions_.size()}});
    });
    server_.Get("/api/games", [this](const httplib::Request&,
                                     httplib::Response& res) {
      Handle(res, 200, [&] { return CatalogJson(sessions_.corpus()); });
    });
    server_.Post("/api/sessions", [this](const httplib::Request& req,
                                         httplib::Response& res) {
      Handle(res, 201, [&] {
        const SessionConfig config = ParseSessionConfig(ParseBody(req));
        const SessionView view = sessions_.Create(config);
        return Json{{"session", view.id},
                    {"geometry", GeometryJson(*view.game)},
                    {"state", StateJson(view)}};
      });
    });
    server_.Get(R"(/api/sessions/([^/]+))", [this](const httplib::Request& req,
                                                   httplib::Response& res) {
      Handle(res, 200, [&] {
        const SessionView view = sessions_.Get(req.matches[1]);
        return Json{{"session", view.id},
                    {"geometry", GeometryJson(*view.game)},
                    {"state", StateJson(view)}};
      });
    });
    server_.Post(R"(/api/sessions/([^/]+)/move)",
                 [this](const httplib::Request& req, httplib::Response& res) {
                   Handle(res, 200, [&] {
                     const Json body = ParseBody(req);
                     if (!body.is_object() || !body.contains("index") ||
                         !body["index"].is_number_integer()) {
                       throw ServiceError("bad-request",
                                          "\"index\" must be an integer");
                     }
                     const SessionView view = sessions_.SubmitMove(
                         req.matches[1], body["index"].get<int>());
                     return Json{{"session", view.id},
                                 {"state", StateJson(view)}};
                   });
                 });
    server_.Post(R"(/api/sessions/([^/]+)/ai)",
                 [this](const httplib::Request& req, httplib::Response& res) {
                   Handle(res, 200, [&] {
                     const SessionView view = sessions_.AiMove(req.matches[1]);
                     return Json{{"session", view.id},
                                 {"move", MoveJson(*view.game,
                                                   view.history.back())},
                                 {"state", StateJson(view)}};
                   });
                 });
  }

  httplib::Server& server() { return server_; }

  // Run and Stop agree under `mu` on whether listening starts, so a Stop
  // that races ahead of Run still takes effect.
  std::mutex mu;
  bool stopping = false;
  bool started = false;

 private:
  static Json ParseBody(const httplib::Request& req) {
    if (req.body.empty()) return Json::object();
    Json body = Json::parse(req.body, nullptr, false);
    if (body.is_discarded()) {
      throw ServiceError("bad-request", "request body is not valid JSON");
    }
    return body;
  }

  template <typename F>
  void Handle(httplib::Response& res, int status, F&& f) {
    try {
      Send(res, status, f());
    } catch (const ServiceError& e) {
      Send(res, StatusFor(e.code()), ErrorJson(e.code(), e.what()));
    } catch (const std::exception& e) {
      Send(res, 500, ErrorJson("internal", e.what()));
    }
  }

  SessionManager& sessions_;
  httplib::Server server_;
};

Server::Server(SessionManager& sessions, ServerOptions options)
    : impl_(std::make_unique<Impl>(sessions)), options_(std::move(options)) {
  impl_->server().new_task_queue = [threads = options_.threads] {
    return new httplib::ThreadPool(static_cast<std::size_t>(threads));
  };
}

Server::~Server() { Stop(); }

void Server::Bind() {
  auto& server = impl_->server();
  if (options_.port == 0) {
    port_ = server.bind_to_any_port(options_.host);
  } else {
    port_ = server.bind_to_port(options_.host, options_.port)
                ? options_.port
                : -1;
  }
  if (port_ < 0) {
    throw LudemicError("cannot listen on " + options_.host + ":" +
                       std::to_string(options_.port));
  }
}

void Server::Run() {
  if (port_ < 0) Bind();
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (impl_->stopping) return;
    impl_->started = true;
  }
  impl_->server().listen_after_bind();
}

void Server::Stop() {
  if (!impl_) return;
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    impl_->stopping = true;
    if (!impl_->started) return;
  }
  impl_->server().wait_until_ready();
  impl_->server().stop();
}

}  // namespace ludemic::service
