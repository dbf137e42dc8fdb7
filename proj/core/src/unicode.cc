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

#include "mspider/unicode.h"

#include <unicode/brkiter.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/uscript.h>

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace mspider::unicode {
namespace {

const icu::Normalizer2& NfcInstance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC unavailable");
  return *nfc;
}

std::string ToStd(const icu::UnicodeString& s) {
  std::string out;
  s.toUTF8String(out);
  return out;
}

icu::UnicodeString FromStd(std::string_view text) {
  return icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
}

}  // namespace

std::string Nfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString out = NfcInstance().normalize(FromStd(text), status);
  if (U_FAILURE(status)) return std::string(text);
  return ToStd(out);
}

std::string CaseFold(std::string_view text) {
  icu::UnicodeString s = FromStd(text);
  s.foldCase(U_FOLD_CASE_DEFAULT);
  return ToStd(s);
}

std::string FoldForMatch(std::string_view text) {
  return Nfc(CaseFold(Nfc(text)));
}

bool IsWhiteSpace(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }

std::string Trim(std::string_view text) {
  std::u32string s = ToUtf32(text);
  auto first = std::find_if_not(s.begin(), s.end(), IsWhiteSpace);
  auto last = std::find_if_not(s.rbegin(), s.rend(), IsWhiteSpace).base();
  if (first >= last) return {};
  return ToUtf8(std::u32string_view(&*first, static_cast<std::size_t>(last - first)));
}

std::u32string ToUtf32(std::string_view text) {
  icu::UnicodeString s = FromStd(text);
  std::u32string out;
  out.reserve(static_cast<std::size_t>(s.length()));
  for (int32_t i = 0; i < s.length();) {
    UChar32 c = s.char32At(i);
    out.push_back(static_cast<char32_t>(c));
    i += U16_LENGTH(c);
  }
  return out;
}

std::string ToUtf8(std::u32string_view text) {
  icu::UnicodeString s = icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32*>(text.data()),
      static_cast<int32_t>(text.size()));
  return ToStd(s);
}

bool IsCjk(char32_t c) {
  UErrorCode status = U_ZERO_ERROR;
  UScriptCode script = uscript_getScript(static_cast<UChar32>(c), &status);
  if (U_FAILURE(status)) return false;
  if (script == USCRIPT_HAN || script == USCRIPT_HIRAGANA ||
      script == USCRIPT_KATAKANA) {
    return true;
  }
  // Prolonged sound mark and iteration marks are script "Common".
  return c == U'ー' || c == U'々' || c == U'ゝ' || c == U'ゞ' ||
         c == U'ヽ' || c == U'ヾ';
}

bool IsLetterOrDigit(char32_t c) {
  return u_isalnum(static_cast<UChar32>(c)) != 0;
}

bool IsPunctuation(char32_t c) { return u_ispunct(static_cast<UChar32>(c)) != 0; }

char32_t SimpleLower(char32_t c) {
  return static_cast<char32_t>(u_tolower(static_cast<UChar32>(c)));
}

std::vector<std::string> WordSegments(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  std::unique_ptr<icu::BreakIterator> it(
      icu::BreakIterator::createWordInstance(icu::Locale::getRoot(), status));
  if (U_FAILURE(status)) throw std::runtime_error("ICU word breaker unavailable");
  icu::UnicodeString s = FromStd(text);
  it->setText(s);
  std::vector<std::string> out;
  int32_t start = it->first();
  for (int32_t end = it->next(); end != icu::BreakIterator::DONE;
       start = end, end = it->next()) {
    icu::UnicodeString piece = s.tempSubStringBetween(start, end);
    bool keep = false;
    for (int32_t i = 0; i < piece.length();) {
      UChar32 c = piece.char32At(i);
      if (u_isalnum(c)) {
        keep = true;
        break;
      }
      i += U16_LENGTH(c);
    }
    if (keep) out.push_back(ToStd(piece));
  }
  return out;
}

std::size_t EditDistance(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
      diag = up;
    }
  }
  return row[b.size()];
}

}  // namespace mspider::unicode
