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

#include "mspider/save/backtranslate.h"

#include <algorithm>

#include "mspider/unicode.h"

namespace mspider::save {
namespace {

using backend::BackendError;
using backend::TranslationRequest;

std::u32string Lower(std::u32string s) {
  for (char32_t& c : s) c = unicode::SimpleLower(c);
  return s;
}

bool NeedsBoundary(const std::u32string& sep) {
  return std::none_of(sep.begin(), sep.end(), unicode::IsCjk);
}

bool Separating(char32_t c) {
  return unicode::IsWhiteSpace(c) || unicode::IsPunctuation(c);
}

// Positions of `sep` in `text`, both lower-cased.
std::vector<std::size_t> Find(const std::u32string& text, const std::u32string& sep) {
  std::vector<std::size_t> out;
  if (sep.empty()) return out;
  const bool bounded = NeedsBoundary(sep);
  for (std::size_t pos = text.find(sep); pos != std::u32string::npos;
       pos = text.find(sep, pos + 1)) {
    const std::size_t end = pos + sep.size();
    if (!bounded || ((pos == 0 || Separating(text[pos - 1])) &&
                     (end >= text.size() || Separating(text[end])))) {
      out.push_back(pos);
    }
  }
  return out;
}

std::size_t FirstParen(const std::u32string& text, std::size_t from) {
  const std::size_t a = text.find(U'(', from), b = text.find(U'（', from);
  return std::min(a, b);
}

std::optional<std::string> Clean(std::u32string_view s) {
  while (!s.empty() && Separating(s.front())) s.remove_prefix(1);
  while (!s.empty() && Separating(s.back())) s.remove_suffix(1);
  if (s.empty()) return std::nullopt;
  return unicode::Nfc(unicode::ToUtf8(s));
}

}  // namespace

std::optional<Separators> ProbeSeparators(backend::Backend& backend, Language lang) {
  Separators out;
  if (lang == Language::kEn) return out;
  out.head_final = IsCharacterLanguage(lang);
  try {
    out.of = unicode::Trim(backend.Translate(TranslationRequest{"of", Language::kEn, lang}));
    out.from = unicode::Trim(backend.Translate(TranslationRequest{"from", Language::kEn, lang}));
  } catch (const BackendError&) {
    return std::nullopt;
  }
  if (out.of.empty() || out.from.empty()) return std::nullopt;
  return out;
}

std::optional<std::string> ExtractCandidate(const std::string& translated,
                                            const SchemaItemRef& item,
                                            const Separators& separators) {
  const std::u32string text = unicode::ToUtf32(unicode::Nfc(translated));
  const std::u32string lower = Lower(text);
  const auto of = Find(lower, Lower(unicode::ToUtf32(separators.of)));
  const auto from = Find(lower, Lower(unicode::ToUtf32(separators.from)));
  const std::u32string_view view(text);

  if (item.is_table()) {
    std::size_t end = from.empty() ? FirstParen(text, 0) : from.front();
    if (end == std::u32string::npos) return std::nullopt;
    return Clean(view.substr(0, end));
  }
  if (of.empty()) return std::nullopt;
  if (!separators.head_final) return Clean(view.substr(0, of.front()));
  const std::size_t begin = of.back() + unicode::ToUtf32(separators.of).size();
  std::size_t end = FirstParen(text, begin);
  for (std::size_t f : from) {
    if (f >= begin) {
      end = std::min(end, f);
      break;
    }
  }
  if (end == std::u32string::npos) end = text.size();
  return Clean(view.substr(begin, end - begin));
}

CandidateSet BacktranslateItem(const SchemaItemRef& item, Language lang,
                               std::span<const Language> pivots, int rounds,
                               backend::Backend& backend,
                               const std::optional<Separators>& separators) {
  CandidateSet out;
  out.item = item;
  out.language = lang;
  const std::string start = RenderContextTemplate(item, separators.value_or(Separators{}));
  for (Language pivot : pivots) {
    if (pivot == lang) continue;
    std::string text = start;
    for (int round = 1; round <= rounds; ++round) {
      ++out.slots;
      std::string back;
      try {
        const std::string there = backend.Translate(TranslationRequest{text, lang, pivot});
        back = backend.Translate(TranslationRequest{there, pivot, lang});
      } catch (const BackendError&) {
        ++out.backend_failures;
        break;
      }
      std::optional<std::string> cand;
      if (separators) cand = ExtractCandidate(back, item, *separators);
      if (cand) {
        out.candidates.push_back(Candidate{*cand, Provenance{pivot, round, false}});
      } else {
        ++out.extraction_failures;
        try {
          const std::string there =
              backend.Translate(TranslationRequest{item.display_name, lang, pivot});
          const std::string bare = unicode::Trim(
              backend.Translate(TranslationRequest{there, pivot, lang}));
          if (!bare.empty()) {
            out.candidates.push_back(
                Candidate{unicode::Nfc(bare), Provenance{pivot, round, true}});
          }
        } catch (const BackendError&) {
          ++out.backend_failures;
        }
      }
      text = std::move(back);
    }
  }
  return out;
}

}  // namespace mspider::save
