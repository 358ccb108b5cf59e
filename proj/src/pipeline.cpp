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

#include "vietcs/pipeline.hpp"

#include "parallel.hpp"
#include "vietcs/text.hpp"

namespace vietcs {

std::uint64_t record_seed(std::uint64_t seed, std::size_t index) {
  return mix_seed(mix_seed(seed) ^ static_cast<std::uint64_t>(index));
}

std::vector<std::string> lm_training_text(const std::vector<std::string>& lines) {
  std::vector<std::string> out;
  for (const std::string& line : lines) {
    std::vector<std::string> words = text::normalize_words(line);
    if (!words.empty()) out.push_back(text::join(words, " "));
  }
  return out;
}

PipelineResult run_pipeline(const std::vector<std::string>& lines, const Resources& resources,
                            const Lexicon& lexicon, const NGramModel& lm,
                            const PipelineConfig& config) {
  config.noise.validate(resources.inventory);
  CorpusBuild built = build_p2t_corpus(lines, config.policy, resources, lexicon, config.jobs);
  Decoder decoder(lexicon, lm, resources.orthography, resources.g2p, config.decode);

  PipelineResult out;
  out.rejects = std::move(built.rejects);
  out.rows.resize(built.records.size());
  detail::parallel_for(built.records.size(), config.jobs, [&](std::size_t i) {
    const CsRecord& r = built.records[i];
    PipelineRow& row = out.rows[i];
    row.id = r.id;
    row.reference = r.reference;
    row.localized = r.localized;
    row.gold = r.phones;
    row.noisy = corrupt(r.phones, config.noise, resources.inventory, record_seed(config.seed, i),
                        &row.stats);
    row.hypothesis = decoder.decode(row.noisy).front().text;
  });
  CorpusScorer scorer;
  for (const PipelineRow& row : out.rows) {
    scorer.add_text(row.reference, row.hypothesis);
    scorer.add_phones(row.gold, row.noisy);
  }
  out.report = scorer.report();
  return out;
}

}  // namespace vietcs
