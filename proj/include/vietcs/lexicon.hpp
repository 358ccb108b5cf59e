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

// Pronunciation lexicon: phone keys to surface words, plus sentence-level G2P.

#ifndef VIETCS_LEXICON_HPP_
#define VIETCS_LEXICON_HPP_

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

enum class Language { kVietnamese, kEnglish };

std::string_view language_code(Language language);  // "vi" / "en"
std::optional<Language> language_from_code(std::string_view code);

struct LexiconEntry {
  std::string word;  // surface form emitted by the decoder
  Language language = Language::kVietnamese;
  int variant = 0;   // pronunciation rank, 0 = primary
  std::string spelling;  // Vietnamese syllables the phones were derived from
  std::vector<SyllablePhones> phones;

  // Syllables serialized and joined with " . ".
  std::string key() const;
};

std::string phone_key(const std::vector<SyllablePhones>& syllables);

// Input to build_lexicon. Vietnamese words may leave `spellings` empty (the
// word is its own spelling); English words list their localized spellings in
// rank order.
struct WordSpec {
  std::string word;
  Language language = Language::kVietnamese;
  std::vector<std::string> spellings;
};

class Lexicon {
 public:
  // Adds an entry unless the same (word, language, key) is already present.
  void add(LexiconEntry entry);

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::vector<const LexiconEntry*> lookup(std::string_view key) const;
  std::vector<const LexiconEntry*> find_word(std::string_view word) const;
  std::vector<const LexiconEntry*> find_word(std::string_view word, Language language) const;

  // Orthographic syllables recorded under one serialized syllable.
  std::vector<std::string> syllables_for(std::string_view syllable_key) const;

  // Distinct phone keys, grouped by syllable count.
  const std::vector<std::string>& keys_of_length(std::size_t syllables) const;
  std::size_t max_syllables() const { return by_length_.empty() ? 0 : by_length_.size() - 1; }

  // TSV: word, lang, variant index, phone string, spelling.
  static Lexicon load(const std::filesystem::path& path, const PhonemeInventory& inventory);
  static Lexicon parse(std::string_view content, const PhonemeInventory& inventory);
  std::string serialize() const;
  void save(const std::filesystem::path& path) const;

 private:
  std::vector<std::size_t> lookup_indices(std::string_view key) const;

  std::vector<LexiconEntry> entries_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_key_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_word_;
  std::map<std::string, std::set<std::string>, std::less<>> syllables_;
  std::vector<std::vector<std::string>> by_length_;
};

// Phones of a space-separated run of Vietnamese syllables.
std::vector<SyllablePhones> spelling_to_phones(std::string_view spelling,
                                               const Orthography& orthography, const G2P& g2p);

// Throws with the offending word prepended to the message.
Lexicon build_lexicon(const std::vector<WordSpec>& words, const Orthography& orthography,
                      const G2P& g2p);

// Vietnamese syllables go through G2P; any other token must be an English
// lexicon word and contributes its rank-0 pronunciation. Throws OovEnglishWord.
PhoneSequence text_to_phones(std::string_view sentence, const Orthography& orthography,
                             const G2P& g2p, const Lexicon& lexicon);

}  // namespace vietcs

#endif  // VIETCS_LEXICON_HPP_
