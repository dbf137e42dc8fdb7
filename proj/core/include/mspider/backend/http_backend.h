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

#ifndef MSPIDER_BACKEND_HTTP_BACKEND_H_
#define MSPIDER_BACKEND_HTTP_BACKEND_H_

#include <chrono>
#include <condition_variable>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "mspider/backend/backend.h"

namespace mspider::backend {

// Environment variable holding the sidecar address.
inline constexpr const char* kSidecarEnv = "MSPIDER_SIDECAR";

struct HttpOptions {
  std::string host = "127.0.0.1";
  int port = 8765;
  std::chrono::milliseconds timeout{30000};
  int max_attempts = 5;  // including the first
  std::chrono::milliseconds initial_backoff{200};
  double backoff_factor = 2.0;
  std::chrono::milliseconds max_backoff{5000};
  int max_in_flight = 8;

  // Accepts "host:port" or "http://host:port". Throws ConfigError.
  static HttpOptions FromAddress(const std::string& address);
};

// Client of the model sidecar:
//   POST /translate {text, src, tgt}        -> {text, backend_version}
//   POST /nli       {premise, hypothesis, lang} -> {entail, backend_version}
//   GET  /healthz                            -> {status, version}
// Errors are JSON bodies {"error": code, "message": ...}; code
// "fixture_miss" maps to BackendError::kFixtureMiss. Connection failures,
// 429 and 5xx are retried with exponential backoff.
class HttpBackend : public Backend {
 public:
  explicit HttpBackend(HttpOptions options);
  ~HttpBackend() override;

  std::string Translate(const TranslationRequest& request) override;
  double Entail(const EntailmentRequest& request) override;
  // "sidecar@<version>", fetched from /healthz on first use.
  std::string Identity() const override;

  // Version reported by /healthz. Throws BackendError.
  std::string Health() const;

  // Requests issued, including retries. For tests and reports.
  long attempts() const;

 private:
  // GET when body is empty. Returns the 200 response body.
  std::string Send(const char* path, const std::string& body) const;

  HttpOptions options_;
  mutable std::mutex mu_;
  mutable std::condition_variable slot_free_;
  mutable int in_flight_ = 0;
  mutable long attempts_ = 0;
  mutable std::optional<std::string> version_;
};

}  // namespace mspider::backend

#endif  // MSPIDER_BACKEND_HTTP_BACKEND_H_
