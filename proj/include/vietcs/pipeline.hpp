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

// End-to-end run: gold text -> phones -> noisy channel -> decoder -> scores.

#ifndef VIETCS_PIPELINE_HPP_
#define VIETCS_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vietcs/dataset.hpp"
#include "vietcs/decoder.hpp"
#include "vietcs/lexicon.hpp"
#include "vietcs/metrics.hpp"
#include "vietcs/ngram.hpp"
#include "vietcs/noise.hpp"
#include "vietcs/resources.hpp"

namespace vietcs {

struct PipelineConfig {
  VariantPolicy policy;
  ConfusionModel noise;
  DecodeConfig decode;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
};

struct PipelineRow {
  std::string id;
  std::string reference;
  std::string localized;
  std::string hypothesis;
  PhoneSequence gold;
  PhoneSequence noisy;
  CorruptionStats stats;
};

struct PipelineResult {
  std::vector<PipelineRow> rows;
  std::vector<RejectedLine> rejects;
  CorpusReport report;
};

// Seed of the noisy channel for the record at `index`.
std::uint64_t record_seed(std::uint64_t seed, std::size_t index);

// Normalized sentences (lowercase, no punctuation) for language-model training.
std::vector<std::string> lm_training_text(const std::vector<std::string>& lines);

PipelineResult run_pipeline(const std::vector<std::string>& lines, const Resources& resources,
                            const Lexicon& lexicon, const NGramModel& lm,
                            const PipelineConfig& config);

}  // namespace vietcs

#endif  // VIETCS_PIPELINE_HPP_
