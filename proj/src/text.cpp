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

#include "vietcs/text.hpp"

#include <cctype>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "vietcs/error.hpp"

namespace vietcs {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDataFile: return "DataFile";
    case ErrorCode::kUnknownToken: return "UnknownToken";
    case ErrorCode::kMalformedSyllable: return "MalformedSyllable";
    case ErrorCode::kMultipleToneMarks: return "MultipleToneMarks";
    case ErrorCode::kNotAVietnameseSyllable: return "NotAVietnameseSyllable";
    case ErrorCode::kIllegalCombination: return "IllegalCombination";
    case ErrorCode::kUnmappedGrapheme: return "UnmappedGrapheme";
    case ErrorCode::kOovEnglishWord: return "OOVEnglishWord";
    case ErrorCode::kUnsupportedSegment: return "UnsupportedSegment";
    case ErrorCode::kUnmappedCluster: return "UnmappedCluster";
    case ErrorCode::kUnmappedRime: return "UnmappedRime";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
  }
  return "Unknown";
}

namespace text {
namespace {

std::string normalize(std::string_view utf8, bool compose) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = compose ? icu::Normalizer2::getNFCInstance(status)
                                         : icu::Normalizer2::getNFDInstance(status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kInvalidArgument, "ICU normalizer unavailable");
  }
  icu::UnicodeString src = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  icu::UnicodeString dst = norm->normalize(src, status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kInvalidArgument, "normalization failed");
  }
  std::string out;
  dst.toUTF8String(out);
  return out;
}

}  // namespace

std::u32string to_u32(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  while (i < utf8.size()) {
    unsigned char c = static_cast<unsigned char>(utf8[i]);
    char32_t cp;
    int extra;
    if (c < 0x80) {
      cp = c;
      extra = 0;
    } else if ((c & 0xE0) == 0xC0) {
      cp = c & 0x1F;
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      cp = c & 0x0F;
      extra = 2;
    } else if ((c & 0xF8) == 0xF0) {
      cp = c & 0x07;
      extra = 3;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "invalid UTF-8 lead byte");
    }
    if (extra > 0 && i + extra >= utf8.size()) {
      throw Error(ErrorCode::kInvalidArgument, "truncated UTF-8 sequence");
    }
    for (int k = 1; k <= extra; ++k) {
      unsigned char cc = static_cast<unsigned char>(utf8[i + k]);
      if ((cc & 0xC0) != 0x80) {
        throw Error(ErrorCode::kInvalidArgument, "invalid UTF-8 continuation byte");
      }
      cp = (cp << 6) | (cc & 0x3F);
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string to_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string to_utf8(std::u32string_view codepoints) {
  std::string out;
  out.reserve(codepoints.size());
  for (char32_t cp : codepoints) out += to_utf8(cp);
  return out;
}

std::size_t length(std::string_view utf8) {
  std::size_t n = 0;
  for (char c : utf8) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::string nfc(std::string_view utf8) { return normalize(utf8, true); }
std::string nfd(std::string_view utf8) { return normalize(utf8, false); }

std::string lowercase(std::string_view utf8) {
  std::u32string cps = to_u32(utf8);
  for (char32_t& c : cps) c = static_cast<char32_t>(u_tolower(static_cast<UChar32>(c)));
  return to_utf8(cps);
}

bool is_letter(char32_t c) { return u_isalpha(static_cast<UChar32>(c)); }
bool is_digit(char32_t c) { return u_isdigit(static_cast<UChar32>(c)); }

std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      break;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string strip_punctuation(std::string_view token) {
  std::u32string cps = to_u32(token);
  // Combining marks count as part of a word so that decomposed input survives.
  auto keep = [](char32_t c) {
    return is_letter(c) || is_digit(c) || u_getCombiningClass(static_cast<UChar32>(c)) != 0;
  };
  std::size_t b = 0, e = cps.size();
  while (b < e && !keep(cps[b])) ++b;
  while (e > b && !keep(cps[e - 1])) --e;
  return to_utf8(std::u32string_view(cps).substr(b, e - b));
}

std::vector<std::string> normalize_words(std::string_view sentence) {
  std::vector<std::string> out;
  for (const std::string& tok : split_whitespace(nfc(sentence))) {
    std::string w = strip_punctuation(lowercase(tok));
    if (!w.empty()) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace text
}  // namespace vietcs
