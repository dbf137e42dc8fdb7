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

#ifndef MSPIDER_UNICODE_H_
#define MSPIDER_UNICODE_H_

#include <string>
#include <string_view>
#include <vector>

namespace mspider::unicode {

// All functions take and return UTF-8. Invalid sequences are replaced with
// U+FFFD rather than rejected.

std::string Nfc(std::string_view text);
std::string CaseFold(std::string_view text);

// NFC, full case folding, then NFC again.
std::string FoldForMatch(std::string_view text);

// Trims Unicode white space at both ends.
std::string Trim(std::string_view text);

std::u32string ToUtf32(std::string_view text);
std::string ToUtf8(std::u32string_view text);

bool IsWhiteSpace(char32_t c);

// Han, Hiragana, Katakana and the CJK symbol/punctuation blocks that are
// written without spaces.
bool IsCjk(char32_t c);

bool IsLetterOrDigit(char32_t c);
bool IsPunctuation(char32_t c);
// Single code point lower-case mapping; keeps string lengths in UTF-32.
char32_t SimpleLower(char32_t c);

// Word-boundary segmentation (UAX #29) keeping only segments that contain a
// letter or digit.
std::vector<std::string> WordSegments(std::string_view text);

// Levenshtein distance over code points.
std::size_t EditDistance(std::u32string_view a, std::u32string_view b);

}  // namespace mspider::unicode

#endif  // MSPIDER_UNICODE_H_
