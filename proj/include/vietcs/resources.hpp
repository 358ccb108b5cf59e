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

// Bundle of the data tables every pipeline stage needs.

#ifndef VIETCS_RESOURCES_HPP_
#define VIETCS_RESOURCES_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "vietcs/adapt.hpp"
#include "vietcs/g2p.hpp"
#include "vietcs/lexicon.hpp"
#include "vietcs/noise.hpp"
#include "vietcs/phoneme.hpp"
#include "vietcs/syllable.hpp"

namespace vietcs {

// $VIETCS_DATA_DIR if set, otherwise the directory fixed at build time.
std::filesystem::path default_data_dir();

struct Resources {
  std::filesystem::path dir;
  PhonemeInventory inventory;
  Orthography orthography;
  G2P g2p;
  EnglishAdapter adapter;
  PronouncingDictionary dictionary;
  ConfusionModel noise;

  // Loads inventory.tsv, orthography.tsv, g2p.tsv, en_rules.tsv, en_dict.tsv
  // and noise_default.conf from `dir`, and cross-checks them.
  static Resources load(const std::filesystem::path& dir, Dialect dialect = Dialect::kNorth);
  static Resources load_default(Dialect dialect = Dialect::kNorth);

  // Ranked localized spellings of an English word. Throws OovEnglishWord.
  std::vector<VariantPronunciation> adapt(std::string_view word,
                                          const AdaptOptions& options = {}) const;

  // Lexicon covering every word of `sentences`: Vietnamese syllables as
  // themselves, English words with their adapted variants. Words that are
  // neither are skipped and reported in `unknown` when given.
  Lexicon corpus_lexicon(const std::vector<std::string>& sentences,
                         const AdaptOptions& options = {},
                         std::vector<std::string>* unknown = nullptr) const;

  // Same, for every word of the pronouncing dictionary.
  Lexicon dictionary_lexicon(const AdaptOptions& options = {}) const;
};

}  // namespace vietcs

#endif  // VIETCS_RESOURCES_HPP_
