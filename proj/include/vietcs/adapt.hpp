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

// English to Vietnamese phonetic adaptation over IPA transcriptions.

#ifndef VIETCS_ADAPT_HPP_
#define VIETCS_ADAPT_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vietcs/g2p.hpp"
#include "vietcs/phoneme.hpp"
#include "vietcs/syllable.hpp"

namespace vietcs {

struct IpaWord {
  std::string word;
  std::vector<std::string> segments;
};

// One English syllable: onset consonants and the rime (vowels plus coda).
struct EnglishSyllable {
  std::vector<std::string> prefix;
  std::vector<std::string> postfix;

  bool operator==(const EnglishSyllable&) const = default;
};

// Onset graphemes, one per Vietnamese syllable onset. "" is the empty onset,
// "+w" a glide realized as the o/u medial of the preceding onset.
struct OnsetChoice {
  std::vector<std::string> graphemes;
  int rank = 0;
};

// A rime without onset, tone included. Several pieces span several syllables.
struct RimePiece {
  std::string base;  // toneless graphemes, e.g. "et"
  Tone tone = Tone::kNgang;

  bool operator==(const RimePiece&) const = default;
};

struct RimeChoice {
  std::vector<RimePiece> pieces;
  int rank = 0;
};

struct VariantPronunciation {
  std::vector<OrthoSyllable> syllables;
  std::string text;  // composed syllables joined by spaces
  int rank = 0;
};

enum class RuleSide { kVowel, kConsonant, kCluster, kPrefix, kPostfix, kNucleus, kCoda };

struct AdaptationRule {
  RuleSide side = RuleSide::kPrefix;
  std::vector<std::string> pattern;  // "_" ends a closed-nucleus pattern
  std::string fragment;
  int rank = 0;
  std::string tag;
};

struct AdaptOptions {
  std::size_t max_variants = 8;
  bool grapheme_variant = true;
};

class EnglishAdapter {
 public:
  EnglishAdapter() = default;

  static EnglishAdapter load(const std::filesystem::path& path);
  static EnglishAdapter parse(std::string_view content);

  // Longest-match segmentation; stress and syllable marks are dropped.
  // Throws UnsupportedSegment.
  std::vector<std::string> tokenize_ipa(std::string_view ipa) const;

  std::vector<EnglishSyllable> split_ipa(const IpaWord& word) const;
  std::vector<OnsetChoice> map_prefix(const std::vector<std::string>& cluster) const;
  std::vector<RimeChoice> map_rime(const std::vector<std::string>& postfix) const;

  // Ranked, deduplicated spellings; ties ordered by text.
  std::vector<VariantPronunciation> adapt_word(const IpaWord& word, const Orthography& orthography,
                                               const AdaptOptions& options = {}) const;

  const std::vector<AdaptationRule>& rules() const { return rules_; }
  bool is_vowel(std::string_view segment) const;

 private:
  const std::map<std::vector<std::string>, std::vector<std::size_t>>& rows_of(RuleSide side) const;
  bool is_segment(std::string_view s) const;
  bool legal_onset(const std::vector<std::string>& cluster) const;
  bool mergeable(const std::vector<std::string>& vowels) const;
  std::vector<RimeChoice> compose_rime(const std::vector<std::string>& nucleus,
                                       const std::vector<std::string>& coda) const;
  std::vector<std::pair<std::vector<OrthoSyllable>, int>> realize(const EnglishSyllable& syl,
                                                                  const Orthography& orth) const;

  std::vector<AdaptationRule> rules_;
  std::set<std::string, std::less<>> vowels_;
  std::set<std::string, std::less<>> consonants_;
  std::set<std::vector<std::string>> clusters_;
  std::map<RuleSide, std::map<std::vector<std::string>, std::vector<std::size_t>>> index_;
  std::size_t longest_segment_ = 0;
};

// Splits a toneless rime into nucleus and coda graphemes.
std::optional<std::pair<std::string, std::string>> split_rime(std::string_view base,
                                                              const Orthography& orthography);

// Toned spelling of a rime piece, e.g. "ét"; the base itself when it does not split.
std::string rime_text(const RimePiece& piece, const Orthography& orthography);

// Builds the single syllable whose onsets are all the prefix graphemes, as in
// the phone-level listing of clusters ("p l" + "ây" -> "p l ə - 0 iz").
SyllablePhones cluster_phones(const OnsetChoice& onset, const RimePiece& rime,
                              const Orthography& orthography, const G2P& g2p);

// Grapheme-preserving segmentation of an English spelling into `count` legal
// toneless Vietnamese syllables, if one exists.
std::optional<std::vector<OrthoSyllable>> grapheme_syllables(std::string_view word,
                                                             std::size_t count,
                                                             const Orthography& orthography);

class PronouncingDictionary {
 public:
  static PronouncingDictionary load(const std::filesystem::path& path);
  static PronouncingDictionary parse(std::string_view content);

  std::optional<std::string> lookup(std::string_view word) const;
  const std::map<std::string, std::string, std::less<>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

}  // namespace vietcs

#endif  // VIETCS_ADAPT_HPP_
