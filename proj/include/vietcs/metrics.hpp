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

// Levenshtein alignment, WER and PER.

#ifndef VIETCS_METRICS_HPP_
#define VIETCS_METRICS_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vietcs/phoneme.hpp"

namespace vietcs {

enum class EditOp { kMatch, kSub, kIns, kDel };

std::string_view edit_op_name(EditOp op);

struct AlignedOp {
  EditOp op = EditOp::kMatch;
  std::size_t ref_pos = 0;  // index into ref; for Ins, the position it precedes
  std::size_t hyp_pos = 0;  // index into hyp; for Del, the position it precedes
};

struct AlignmentReport {
  std::size_t distance = 0;
  std::size_t ref_length = 0;
  std::size_t substitutions = 0;
  std::size_t insertions = 0;
  std::size_t deletions = 0;
  std::vector<AlignedOp> ops;

  // distance / max(1, ref_length)
  double rate() const;
};

// Unit-cost Levenshtein; among optimal paths prefers Match, then Sub, Del, Ins.
AlignmentReport edit_distance(const std::vector<std::string>& ref,
                              const std::vector<std::string>& hyp);

// Lowercase, NFC and punctuation stripping; optional so callers can score raw text.
struct TextNormalization {
  bool lowercase = true;
  bool strip_punctuation = true;
};

std::vector<std::string> normalize_for_scoring(std::string_view sentence,
                                               const TextNormalization& norm = {});

AlignmentReport word_alignment(std::string_view ref, std::string_view hyp,
                               const TextNormalization& norm = {});
double wer(std::string_view ref, std::string_view hyp, const TextNormalization& norm = {});
double per(const PhoneSequence& ref, const PhoneSequence& hyp);

struct CorpusReport {
  std::size_t pairs = 0;
  std::size_t ref_words = 0;
  std::size_t word_errors = 0;
  std::size_t word_substitutions = 0;
  std::size_t word_insertions = 0;
  std::size_t word_deletions = 0;
  std::size_t ref_phones = 0;
  std::size_t phone_errors = 0;
  bool has_phones = false;
  // (reference token, hypothesis token) -> count, over word substitutions.
  std::map<std::pair<std::string, std::string>, std::size_t> confusions;

  double wer() const;
  double per() const;

  // Most frequent substitutions, ties broken by token order.
  std::vector<std::pair<std::pair<std::string, std::string>, std::size_t>> top_confusions(
      std::size_t limit) const;

  // "key: value" lines.
  std::string to_text(std::size_t confusion_limit = 10) const;
  // One JSON object.
  std::string to_json(std::size_t confusion_limit = 10) const;
};

// Streaming accumulation; totals are pooled, so the order of calls is irrelevant.
class CorpusScorer {
 public:
  explicit CorpusScorer(TextNormalization norm = {}) : norm_(norm) {}

  void add_text(std::string_view ref, std::string_view hyp);
  void add_phones(const PhoneSequence& ref, const PhoneSequence& hyp);
  void merge(const CorpusReport& other);

  const CorpusReport& report() const { return report_; }

 private:
  TextNormalization norm_;
  CorpusReport report_;
};

CorpusReport corpus_report(const std::vector<std::pair<std::string, std::string>>& pairs,
                           const TextNormalization& norm = {});

}  // namespace vietcs

#endif  // VIETCS_METRICS_HPP_
