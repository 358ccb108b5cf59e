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

#include "vietcs/lexicon.hpp"

#include <algorithm>
#include <sstream>

#include "tsv.hpp"
#include "vietcs/error.hpp"
#include "vietcs/text.hpp"

namespace vietcs {

std::string_view language_code(Language language) {
  return language == Language::kEnglish ? "en" : "vi";
}

std::optional<Language> language_from_code(std::string_view code) {
  if (code == "vi") return Language::kVietnamese;
  if (code == "en") return Language::kEnglish;
  return std::nullopt;
}

std::string phone_key(const std::vector<SyllablePhones>& syllables) {
  std::string out;
  for (std::size_t i = 0; i < syllables.size(); ++i) {
    if (i) out += " . ";
    out += serialize_syllable(syllables[i]);
  }
  return out;
}

std::string LexiconEntry::key() const { return phone_key(phones); }

void Lexicon::add(LexiconEntry entry) {
  if (entry.phones.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "lexicon entry '" + entry.word + "' has no phones");
  }
  const std::string key = entry.key();
  for (std::size_t i : lookup_indices(key)) {
    const LexiconEntry& e = entries_[i];
    if (e.word == entry.word && e.language == entry.language) return;
  }
  const std::size_t index = entries_.size();
  std::vector<std::string> spelled = text::split_whitespace(entry.spelling);
  if (spelled.size() == entry.phones.size()) {
    for (std::size_t i = 0; i < spelled.size(); ++i) {
      syllables_[serialize_syllable(entry.phones[i])].insert(spelled[i]);
    }
  }
  auto [it, inserted] = by_key_.try_emplace(key);
  it->second.push_back(index);
  if (inserted) {
    const std::size_t n = entry.phones.size();
    if (by_length_.size() <= n) by_length_.resize(n + 1);
    by_length_[n].push_back(key);
  }
  by_word_[entry.word].push_back(index);
  entries_.push_back(std::move(entry));
}

std::vector<std::size_t> Lexicon::lookup_indices(std::string_view key) const {
  auto it = by_key_.find(key);
  return it == by_key_.end() ? std::vector<std::size_t>{} : it->second;
}

std::vector<const LexiconEntry*> Lexicon::lookup(std::string_view key) const {
  std::vector<const LexiconEntry*> out;
  for (std::size_t i : lookup_indices(key)) out.push_back(&entries_[i]);
  return out;
}

std::vector<const LexiconEntry*> Lexicon::find_word(std::string_view word) const {
  std::vector<const LexiconEntry*> out;
  auto it = by_word_.find(word);
  if (it == by_word_.end()) return out;
  for (std::size_t i : it->second) out.push_back(&entries_[i]);
  std::stable_sort(out.begin(), out.end(), [](const LexiconEntry* a, const LexiconEntry* b) {
    return a->variant < b->variant;
  });
  return out;
}

std::vector<const LexiconEntry*> Lexicon::find_word(std::string_view word,
                                                    Language language) const {
  std::vector<const LexiconEntry*> out = find_word(word);
  std::erase_if(out, [&](const LexiconEntry* e) { return e->language != language; });
  return out;
}

std::vector<std::string> Lexicon::syllables_for(std::string_view syllable_key) const {
  auto it = syllables_.find(syllable_key);
  if (it == syllables_.end()) return {};
  return {it->second.begin(), it->second.end()};
}

const std::vector<std::string>& Lexicon::keys_of_length(std::size_t syllables) const {
  static const std::vector<std::string> kNone;
  return syllables < by_length_.size() ? by_length_[syllables] : kNone;
}

Lexicon Lexicon::load(const std::filesystem::path& path, const PhonemeInventory& inventory) {
  try {
    return parse(tsv::read_file(path), inventory);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

Lexicon Lexicon::parse(std::string_view content, const PhonemeInventory& inventory) {
  Lexicon lex;
  for (const tsv::Row& row : tsv::parse(content)) {
    const auto& f = row.fields;
    if (f.size() < 4) tsv::fail("lexicon", row, "expected word, lang, variant, phones");
    LexiconEntry e;
    e.word = f[0];
    auto lang = language_from_code(f[1]);
    if (!lang) tsv::fail("lexicon", row, "unknown language '" + f[1] + "'");
    e.language = *lang;
    try {
      e.variant = std::stoi(f[2]);
    } catch (const std::exception&) {
      tsv::fail("lexicon", row, "bad variant index '" + f[2] + "'");
    }
    if (e.variant < 0) tsv::fail("lexicon", row, "negative variant index");
    std::vector<std::string> parts;
    std::string_view rest = f[3];
    while (true) {
      std::size_t dot = rest.find(" . ");
      parts.emplace_back(rest.substr(0, dot));
      if (dot == std::string_view::npos) break;
      rest.remove_prefix(dot + 3);
    }
    try {
      for (const std::string& p : parts) e.phones.push_back(parse_syllable(p, inventory));
    } catch (const Error& err) {
      tsv::fail("lexicon", row, err.what());
    }
    if (f.size() > 4) e.spelling = f[4];
    lex.add(std::move(e));
  }
  return lex;
}

std::string Lexicon::serialize() const {
  std::ostringstream out;
  out << "# word\tlang\tvariant\tphones\tspelling\n";
  for (const LexiconEntry& e : entries_) {
    out << e.word << '\t' << language_code(e.language) << '\t' << e.variant << '\t' << e.key()
        << '\t' << (e.spelling.empty() ? "-" : e.spelling) << '\n';
  }
  return out.str();
}

void Lexicon::save(const std::filesystem::path& path) const { tsv::write_file(path, serialize()); }

std::vector<SyllablePhones> spelling_to_phones(std::string_view spelling,
                                               const Orthography& orthography, const G2P& g2p) {
  std::vector<SyllablePhones> out;
  for (const std::string& syl : text::split_whitespace(spelling)) {
    out.push_back(g2p.syllable_to_phones(orthography.decompose(syl)));
  }
  return out;
}

Lexicon build_lexicon(const std::vector<WordSpec>& words, const Orthography& orthography,
                      const G2P& g2p) {
  Lexicon lex;
  for (const WordSpec& w : words) {
    try {
      std::vector<std::string> spellings = w.spellings;
      if (spellings.empty()) {
        if (w.language == Language::kEnglish) {
          throw Error(ErrorCode::kInvalidArgument, "English word has no adapted variant");
        }
        spellings.push_back(w.word);
      }
      for (std::size_t rank = 0; rank < spellings.size(); ++rank) {
        LexiconEntry e;
        e.word = text::nfc(w.word);
        e.language = w.language;
        e.variant = static_cast<int>(rank);
        e.spelling = text::join(text::split_whitespace(text::lowercase(spellings[rank])), " ");
        e.phones = spelling_to_phones(e.spelling, orthography, g2p);
        lex.add(std::move(e));
      }
    } catch (const Error& e) {
      throw Error(e.code(), "word '" + w.word + "': " + e.what());
    }
  }
  return lex;
}

PhoneSequence text_to_phones(std::string_view sentence, const Orthography& orthography,
                             const G2P& g2p, const Lexicon& lexicon) {
  PhoneSequence seq;
  for (const std::string& word : text::normalize_words(sentence)) {
    if (auto s = orthography.try_decompose(word)) {
      seq.append_word({g2p.syllable_to_phones(*s)});
      continue;
    }
    auto found = lexicon.find_word(word, Language::kEnglish);
    if (found.empty()) throw Error(ErrorCode::kOovEnglishWord, word);
    seq.append_word(found.front()->phones);
  }
  return seq;
}

}  // namespace vietcs
