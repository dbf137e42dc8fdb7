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

#include "mspider/backend/backend.h"

#include <cmath>

#include <nlohmann/json.hpp>

#include "mspider/util/digest.h"

namespace mspider::backend {

void TranslationRequest::Validate() const {
  if (text.empty()) throw ConfigError("translation request with empty text");
  if (source == target) {
    throw ConfigError("translation request from '" + std::string(LanguageCode(source)) +
                      "' to itself");
  }
}

void EntailmentRequest::Validate() const {
  if (premise.empty() || hypothesis.empty()) {
    throw ConfigError("entailment request with an empty premise or hypothesis");
  }
}

const char* BackendErrorKindName(BackendError::Kind kind) {
  switch (kind) {
    case BackendError::Kind::kUnavailable: return "unavailable";
    case BackendError::Kind::kFixtureMiss: return "fixture_miss";
    case BackendError::Kind::kProtocol: return "protocol";
    case BackendError::Kind::kRejected: return "rejected";
  }
  return "unknown";
}

std::string RequestJson(const TranslationRequest& r) {
  return nlohmann::json{{"text", r.text},
                        {"src", LanguageCode(r.source)},
                        {"tgt", LanguageCode(r.target)}}
      .dump();
}

std::string RequestJson(const EntailmentRequest& r) {
  return nlohmann::json{{"premise", r.premise},
                        {"hypothesis", r.hypothesis},
                        {"lang", LanguageCode(r.language)}}
      .dump();
}

std::string RequestDigest(const TranslationRequest& r) {
  return Sha256Hex("translate\n" + RequestJson(r));
}

std::string RequestDigest(const EntailmentRequest& r) {
  return Sha256Hex("nli\n" + RequestJson(r));
}

double CheckScore(double score, const std::string& context) {
  if (!std::isfinite(score) || score < 0.0 || score > 1.0) {
    throw BackendError(BackendError::Kind::kProtocol,
                       context + ": entailment score " + std::to_string(score) +
                           " outside [0, 1]");
  }
  return score;
}

}  // namespace mspider::backend
