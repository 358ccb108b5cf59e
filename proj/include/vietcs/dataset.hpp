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

// Phone-to-text dataset construction from code-switched sentences.

#ifndef VIETCS_DATASET_HPP_
#define VIETCS_DATASET_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vietcs/lexicon.hpp"
#include "vietcs/phoneme.hpp"
#include "vietcs/resources.hpp"

namespace vietcs {

enum class VariantMode { kRank0, kExhaustive, kSampled };

std::string_view variant_mode_name(VariantMode mode);
std::optional<VariantMode> variant_mode_from_name(std::string_view name);

struct VariantPolicy {
  VariantMode mode = VariantMode::kRank0;
  std::size_t max_variants_per_sentence = 4;
  std::uint64_t seed = 0;

  void validate() const;  // throws InvalidArgument
};

struct CsRecord {
  std::string id;
  std::string reference;  // original sentence, English words intact
  std::string localized;  // English words replaced by Vietnamese spellings
  std::map<std::size_t, int> variant_choices;  // token position -> variant rank
  PhoneSequence phones;   // phones of `localized`

  bool operator==(const CsRecord&) const = default;
};

struct RejectedLine {
  std::size_t line_no = 0;  // 1-based
  std::string reason;
};

// Records for one sentence; ids are "<line>-<n>" with zero padding. Throws
// OovEnglishWord when an English token has no lexicon entry.
std::vector<CsRecord> localize_sentence(std::string_view sentence, const VariantPolicy& policy,
                                        const Resources& resources, const Lexicon& lexicon,
                                        std::size_t line_index = 0);

struct CorpusBuild {
  std::vector<CsRecord> records;
  std::vector<RejectedLine> rejects;
};

// Blank lines produce nothing. Line i is localized with seed policy.seed ^ i;
// output order follows input order for any `jobs`.
CorpusBuild build_p2t_corpus(const std::vector<std::string>& lines, const VariantPolicy& policy,
                             const Resources& resources, const Lexicon& lexicon,
                             std::size_t jobs = 1);

// One JSON object per line: id, reference, localized, phones, variant_choices.
std::string record_to_json(const CsRecord& record);
CsRecord record_from_json(std::string_view line, const PhonemeInventory& inventory);
std::string reject_to_json(const RejectedLine& reject);

// Reads a record file, skipping blank lines. Throws DataFile with the line number.
std::vector<CsRecord> parse_records(std::string_view content, const PhonemeInventory& inventory);

}  // namespace vietcs

#endif  // VIETCS_DATASET_HPP_
