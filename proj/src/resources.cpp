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

#include "vietcs/resources.hpp"

#include <cstdlib>
#include <set>

#include "vietcs/error.hpp"
#include "vietcs/text.hpp"

#ifndef VIETCS_DEFAULT_DATA_DIR
#define VIETCS_DEFAULT_DATA_DIR "data"
#endif

namespace vietcs {

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("VIETCS_DATA_DIR"); env && *env) return env;
  return VIETCS_DEFAULT_DATA_DIR;
}

Resources Resources::load(const std::filesystem::path& dir, Dialect dialect) {
  Resources r;
  r.dir = dir;
  r.inventory = PhonemeInventory::load(dir / "inventory.tsv");
  r.orthography = Orthography::load(dir / "orthography.tsv");
  r.g2p = G2P::load(dir / "g2p.tsv", dialect);
  r.adapter = EnglishAdapter::load(dir / "en_rules.tsv");
  r.dictionary = PronouncingDictionary::load(dir / "en_dict.tsv");
  r.noise = ConfusionModel::load(dir / "noise_default.conf");
  for (const std::string& sym : r.g2p.output_symbols()) {
    if (!r.inventory.try_classify(sym)) {
      throw Error(ErrorCode::kDataFile, "g2p.tsv emits '" + sym + "', not in inventory.tsv");
    }
  }
  r.noise.validate(r.inventory);
  return r;
}

Resources Resources::load_default(Dialect dialect) { return load(default_data_dir(), dialect); }

std::vector<VariantPronunciation> Resources::adapt(std::string_view word,
                                                   const AdaptOptions& options) const {
  auto ipa = dictionary.lookup(word);
  if (!ipa) throw Error(ErrorCode::kOovEnglishWord, std::string(word));
  IpaWord w{text::lowercase(text::nfc(word)), adapter.tokenize_ipa(*ipa)};
  return adapter.adapt_word(w, orthography, options);
}

namespace {

WordSpec english_spec(const Resources& r, const std::string& word, const AdaptOptions& options) {
  WordSpec spec{word, Language::kEnglish, {}};
  for (const VariantPronunciation& v : r.adapt(word, options)) spec.spellings.push_back(v.text);
  return spec;
}

}  // namespace

Lexicon Resources::corpus_lexicon(const std::vector<std::string>& sentences,
                                  const AdaptOptions& options,
                                  std::vector<std::string>* unknown) const {
  std::vector<WordSpec> specs;
  std::set<std::string> seen;
  for (const std::string& sentence : sentences) {
    for (const std::string& word : text::normalize_words(sentence)) {
      if (!seen.insert(word).second) continue;
      if (orthography.try_decompose(word)) {
        specs.push_back({word, Language::kVietnamese, {}});
      } else if (dictionary.lookup(word)) {
        specs.push_back(english_spec(*this, word, options));
      } else if (unknown) {
        unknown->push_back(word);
      }
    }
  }
  return build_lexicon(specs, orthography, g2p);
}

Lexicon Resources::dictionary_lexicon(const AdaptOptions& options) const {
  std::vector<WordSpec> specs;
  for (const auto& [word, ipa] : dictionary.entries()) {
    if (orthography.try_decompose(word)) continue;
    specs.push_back(english_spec(*this, word, options));
  }
  return build_lexicon(specs, orthography, g2p);
}

}  // namespace vietcs
