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

#ifndef MSPIDER_BACKEND_BACKEND_H_
#define MSPIDER_BACKEND_BACKEND_H_

#include <string>

#include "mspider/error.h"
#include "mspider/language.h"

namespace mspider::backend {

struct TranslationRequest {
  std::string text;
  Language source = Language::kEn;
  Language target = Language::kEn;

  // Throws ConfigError for empty text or source == target.
  void Validate() const;
  bool operator==(const TranslationRequest&) const = default;
};

struct EntailmentRequest {
  std::string premise;
  std::string hypothesis;
  Language language = Language::kEn;

  // Throws ConfigError when either text is empty.
  void Validate() const;
  bool operator==(const EntailmentRequest&) const = default;
};

class BackendError : public Error {
 public:
  enum class Kind {
    kUnavailable,  // transport failure or overload; worth retrying
    kFixtureMiss,  // the fixture table has no entry for the request
    kProtocol,     // malformed or out-of-range response
    kRejected,     // the service refused the request
  };

  BackendError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }
  bool retryable() const { return kind_ == Kind::kUnavailable; }

 private:
  Kind kind_;
};

const char* BackendErrorKindName(BackendError::Kind kind);

// Translation and entailment scoring. Implementations are safe for
// concurrent callers.
class Backend {
 public:
  virtual ~Backend() = default;

  // Non-empty translation of request.text.
  virtual std::string Translate(const TranslationRequest& request) = 0;
  // Probability in [0, 1] that premise entails hypothesis.
  virtual double Entail(const EntailmentRequest& request) = 0;
  // "<name>@<version>"; part of every cache key and manifest.
  virtual std::string Identity() const = 0;
};

// Canonical JSON bodies, also the wire format of the sidecar.
std::string RequestJson(const TranslationRequest& request);
std::string RequestJson(const EntailmentRequest& request);

// Stable digests of the canonical bodies, prefixed by the endpoint name.
std::string RequestDigest(const TranslationRequest& request);
std::string RequestDigest(const EntailmentRequest& request);

// Throws BackendError(kProtocol) unless 0 <= score <= 1.
double CheckScore(double score, const std::string& context);

}  // namespace mspider::backend

#endif  // MSPIDER_BACKEND_BACKEND_H_
