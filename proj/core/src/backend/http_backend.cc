// Copyright 2026 The mspider Authors
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

#include "mspider/backend/http_backend.h"

#include <algorithm>
#include <cmath>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

namespace mspider::backend {
namespace {

using json = nlohmann::json;

json ParseBody(const std::string& body, const char* path) {
  try {
    json j = json::parse(body);
    if (!j.is_object()) throw BackendError(BackendError::Kind::kProtocol,
                                           std::string(path) + ": response is not an object");
    return j;
  } catch (const json::parse_error& e) {
    throw BackendError(BackendError::Kind::kProtocol,
                       std::string(path) + ": malformed response: " + e.what());
  }
}

}  // namespace

HttpOptions HttpOptions::FromAddress(const std::string& address) {
  std::string rest = address;
  if (rest.rfind("http://", 0) == 0) rest = rest.substr(7);
  while (!rest.empty() && rest.back() == '/') rest.pop_back();
  const auto colon = rest.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == rest.size()) {
    throw ConfigError("sidecar address '" + address + "' is not host:port");
  }
  HttpOptions out;
  out.host = rest.substr(0, colon);
  try {
    std::size_t used = 0;
    out.port = std::stoi(rest.substr(colon + 1), &used);
    if (used != rest.size() - colon - 1 || out.port <= 0 || out.port > 65535) throw 0;
  } catch (...) {
    throw ConfigError("sidecar address '" + address + "' has an invalid port");
  }
  return out;
}

HttpBackend::HttpBackend(HttpOptions options) : options_(std::move(options)) {
  if (options_.max_attempts < 1 || options_.max_in_flight < 1) {
    throw ConfigError("max_attempts and max_in_flight must be positive");
  }
}

HttpBackend::~HttpBackend() = default;

std::string HttpBackend::Send(const char* path, const std::string& body) const {
  std::string last_error;
  auto backoff = options_.initial_backoff;
  for (int attempt = 1; attempt <= options_.max_attempts; ++attempt) {
    {
      std::unique_lock lock(mu_);
      slot_free_.wait(lock, [&] { return in_flight_ < options_.max_in_flight; });
      ++in_flight_;
      ++attempts_;
    }
    httplib::Result res;
    {
      httplib::Client client(options_.host, options_.port);
      const auto secs = std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
      const auto usecs =
          std::chrono::duration_cast<std::chrono::microseconds>(options_.timeout - secs);
      client.set_connection_timeout(secs.count(), usecs.count());
      client.set_read_timeout(secs.count(), usecs.count());
      res = body.empty() ? client.Get(path) : client.Post(path, body, "application/json");
    }
    {
      std::lock_guard lock(mu_);
      --in_flight_;
    }
    slot_free_.notify_one();

    if (!res) {
      last_error = httplib::to_string(res.error());
    } else if (res->status == 200) {
      return res->body;
    } else if (res->status == 429 || res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status);
    } else {
      std::string code, message = res->body;
      try {
        const json j = json::parse(res->body);
        code = j.value("error", "");
        message = j.value("message", message);
      } catch (const json::exception&) {
      }
      const auto kind = code == "fixture_miss" ? BackendError::Kind::kFixtureMiss
                                               : BackendError::Kind::kRejected;
      throw BackendError(kind, std::string(path) + ": HTTP " +
                                   std::to_string(res->status) + ": " + message);
    }
    if (attempt < options_.max_attempts) {
      std::this_thread::sleep_for(backoff);
      backoff = std::min(options_.max_backoff,
                         std::chrono::milliseconds(static_cast<long long>(
                             static_cast<double>(backoff.count()) * options_.backoff_factor)));
    }
  }
  throw BackendError(BackendError::Kind::kUnavailable,
                     std::string(path) + ": giving up after " +
                         std::to_string(options_.max_attempts) + " attempts: " + last_error);
}

std::string HttpBackend::Translate(const TranslationRequest& request) {
  request.Validate();
  const json j = ParseBody(Send("/translate", RequestJson(request)), "/translate");
  auto it = j.find("text");
  if (it == j.end() || !it->is_string() || it->get<std::string>().empty()) {
    throw BackendError(BackendError::Kind::kProtocol,
                       "/translate: response lacks a non-empty 'text'");
  }
  return it->get<std::string>();
}

double HttpBackend::Entail(const EntailmentRequest& request) {
  request.Validate();
  const json j = ParseBody(Send("/nli", RequestJson(request)), "/nli");
  auto it = j.find("entail");
  if (it == j.end() || !it->is_number()) {
    throw BackendError(BackendError::Kind::kProtocol, "/nli: response lacks 'entail'");
  }
  return CheckScore(it->get<double>(), "/nli");
}

std::string HttpBackend::Health() const {
  const json j = ParseBody(Send("/healthz", ""), "/healthz");
  auto it = j.find("version");
  if (it == j.end() || !it->is_string()) {
    throw BackendError(BackendError::Kind::kProtocol, "/healthz: response lacks 'version'");
  }
  return it->get<std::string>();
}

std::string HttpBackend::Identity() const {
  {
    std::lock_guard lock(mu_);
    if (version_) return "sidecar@" + *version_;
  }
  std::string v = Health();
  std::lock_guard lock(mu_);
  if (!version_) version_ = std::move(v);
  return "sidecar@" + *version_;
}

long HttpBackend::attempts() const {
  std::lock_guard lock(mu_);
  return attempts_;
}

}  // namespace mspider::backend
