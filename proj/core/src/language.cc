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

#include "mspider/language.h"

#include <algorithm>
#include <cctype>

#include "mspider/error.h"

namespace mspider {
namespace {

constexpr std::array<std::string_view, 11> kCodes = {
    "en", "de", "es", "fr", "ja", "zh", "vi", "ru", "pt", "nl", "sv"};

}  // namespace

std::string_view LanguageCode(Language lang) {
  return kCodes[static_cast<std::size_t>(lang)];
}

std::optional<Language> ParseLanguage(std::string_view code) {
  std::string lower(code);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (std::size_t i = 0; i < kCodes.size(); ++i) {
    if (kCodes[i] == lower) return static_cast<Language>(i);
  }
  return std::nullopt;
}

Language LanguageOrThrow(std::string_view code) {
  if (auto lang = ParseLanguage(code)) return *lang;
  throw ConfigError("unknown language code '" + std::string(code) + "'");
}

bool IsDatasetLanguage(Language lang) {
  return std::find(kDatasetLanguages.begin(), kDatasetLanguages.end(), lang) !=
         kDatasetLanguages.end();
}

}  // namespace mspider
