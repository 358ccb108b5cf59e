// Copyright 2026 The vietcs Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// UTF-8 helpers. Normalization and case mapping are delegated to ICU.

#ifndef VIETCS_TEXT_HPP_
#define VIETCS_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace vietcs::text {

std::u32string to_u32(std::string_view utf8);
std::string to_utf8(std::u32string_view codepoints);
std::string to_utf8(char32_t codepoint);

// Number of code points.
std::size_t length(std::string_view utf8);

std::string nfc(std::string_view utf8);
std::string nfd(std::string_view utf8);
std::string lowercase(std::string_view utf8);

bool is_letter(char32_t c);
bool is_digit(char32_t c);

std::vector<std::string> split_whitespace(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string_view trim(std::string_view s);

// Removes leading and trailing characters that are neither letters nor digits.
std::string strip_punctuation(std::string_view token);

// NFC, lowercase, punctuation-only tokens dropped, edge punctuation stripped.
std::vector<std::string> normalize_words(std::string_view sentence);

}  // namespace vietcs::text

#endif  // VIETCS_TEXT_HPP_
