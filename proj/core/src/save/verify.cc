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

#include "mspider/save/verify.h"

#include <algorithm>

#include "mspider/error.h"
#include "mspider/unicode.h"

namespace mspider::save {

double Thresholds::For(Language lang) const {
  auto it = per_language.find(lang);
  return it == per_language.end() ? fallback : it->second;
}

void Thresholds::Validate() const {
  auto check = [](double t, const std::string& what) {
    if (!(t >= 0.0 && t <= 1.0)) {
      throw ConfigError("threshold for " + what + " must be in [0, 1], got " +
                        std::to_string(t));
    }
  };
  check(fallback, "the default");
  for (const auto& [lang, t] : per_language) check(t, std::string(LanguageCode(lang)));
}

std::string NormalizeCandidate(std::string_view text) {
  return unicode::Trim(unicode::Nfc(text));
}

std::string CandidateKey(std::string_view text) {
  return unicode::FoldForMatch(NormalizeCandidate(text));
}

Verdict VerifyPair(const SchemaItemRef& item, const std::string& candidate, Language lang,
                   backend::Backend& backend, const Thresholds& thresholds) {
  const std::string premise = RenderNliTemplate(item);
  const std::string hypothesis = RenderNliTemplate(item, candidate);
  Verdict v;
  try {
    v.forward = backend.Entail({premise, hypothesis, lang});
    v.backward = backend.Entail({hypothesis, premise, lang});
  } catch (const backend::BackendError& e) {
    v.outcome = Verdict::Outcome::kBackendError;
    v.error = e.what();
    return v;
  }
  v.outcome = std::min(v.forward, v.backward) >= thresholds.For(lang)
                  ? Verdict::Outcome::kAccepted
                  : Verdict::Outcome::kBelowThreshold;
  return v;
}

}  // namespace mspider::save
