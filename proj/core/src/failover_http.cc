// Copyright 2026 The Photocomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <chrono>
#include <string>
#include <thread>

#include "httplib.h"
#include "photocomp/failover.h"

namespace photocomp {

HttpTransport::HttpTransport(std::string host, int port, int attempts)
    : host_(std::move(host)), port_(port), attempts_(attempts < 1 ? 1 : attempts) {}

nlohmann::json HttpTransport::round_trip(const nlohmann::json& request) {
  const std::string body = request.dump();
  std::string last_error = "no attempt made";
  for (int attempt = 0; attempt < attempts_; ++attempt) {
    if (attempt > 0) std::this_thread::sleep_for(std::chrono::milliseconds(50 * attempt));
    httplib::Client client(host_, port_);
    client.set_connection_timeout(2, 0);
    client.set_read_timeout(30, 0);
    auto result = client.Post("/api", body, "application/json");
    if (!result) {
      last_error = httplib::to_string(result.error());
      continue;
    }
    if (result->status != 200) {
      last_error = "HTTP status " + std::to_string(result->status);
      continue;
    }
    try {
      return nlohmann::json::parse(result->body);
    } catch (const nlohmann::json::parse_error& e) {
      last_error = e.what();
    }
  }
  throw ServiceUnreachable("processing service at " + host_ + ":" + std::to_string(port_) +
                           " unreachable after " + std::to_string(attempts_) + " attempt(s): " +
                           last_error);
}

struct HttpServer::Impl {
  explicit Impl(const ProcessingService& svc) : service(svc) {
    server.Post("/api", [this](const httplib::Request& req, httplib::Response& res) {
      res.set_content(service.handle(req.body), "application/json");
    });
  }
  const ProcessingService& service;
  httplib::Server server;
  std::atomic<bool> bound{false};
  std::atomic<bool> listened{false};
};

HttpServer::HttpServer(const ProcessingService& service)
    : impl_(std::make_unique<Impl>(service)) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  const int bound = port == 0 ? impl_->server.bind_to_any_port(host)
                              : (impl_->server.bind_to_port(host, port) ? port : -1);
  impl_->bound = bound > 0;
  return bound;
}

bool HttpServer::listen() {
  impl_->listened = true;
  return impl_->server.listen_after_bind();
}

void HttpServer::stop() {
  if (!impl_) return;
  if (impl_->bound && !impl_->listened.exchange(true)) {
    // httplib only releases a bound socket when its accept loop ends.
    std::thread loop([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    impl_->server.stop();
    loop.join();
    return;
  }
  impl_->server.stop();
}

bool HttpServer::running() const { return impl_->server.is_running(); }

}  // namespace photocomp
