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

#ifndef MSPIDER_LANGUAGE_H_
#define MSPIDER_LANGUAGE_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace mspider {

// The seven dataset languages come first; the remaining four are only used
// as back-translation pivots.
enum class Language { kEn, kDe, kEs, kFr, kJa, kZh, kVi, kRu, kPt, kNl, kSv };

inline constexpr std::array<Language, 7> kDatasetLanguages = {
    Language::kEn, Language::kDe, Language::kEs, Language::kFr,
    Language::kJa, Language::kZh, Language::kVi};

inline constexpr std::array<Language, 11> kPivotLanguages = {
    Language::kEn, Language::kDe, Language::kEs, Language::kFr,
    Language::kJa, Language::kZh, Language::kVi, Language::kRu,
    Language::kPt, Language::kNl, Language::kSv};

// Lower-case ISO 639-1 code ("en", "zh", ...).
std::string_view LanguageCode(Language lang);

// Accepts codes case-insensitively. Returns nullopt for unknown codes.
std::optional<Language> ParseLanguage(std::string_view code);

// Throws ConfigError for unknown codes.
Language LanguageOrThrow(std::string_view code);

bool IsDatasetLanguage(Language lang);

// Chinese and Japanese questions are tokenized by characters.
inline bool IsCharacterLanguage(Language lang) {
  return lang == Language::kZh || lang == Language::kJa;
}

}  // namespace mspider

#endif  // MSPIDER_LANGUAGE_H_
