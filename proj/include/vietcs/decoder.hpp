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

// Lexicon-constrained beam search from syllable phones to words.

#ifndef VIETCS_DECODER_HPP_
#define VIETCS_DECODER_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "vietcs/g2p.hpp"
#include "vietcs/lexicon.hpp"
#include "vietcs/ngram.hpp"
#include "vietcs/phoneme.hpp"
#include "vietcs/syllable.hpp"

namespace vietcs {

struct DecodeConfig {
  std::size_t beam_width = 16;
  int fuzzy_k = 1;              // max token edits per syllable when matching keys
  double lm_weight = 1.0;
  double fuzzy_penalty = 5.0;   // per token edit
  double fallback_penalty = 10.0;  // per syllable spelled without the lexicon
  std::size_t max_span = 4;     // syllables per word candidate

  // Throws InvalidArgument.
  void validate() const;
};

struct DecodeHypothesis {
  std::size_t consumed = 0;
  std::vector<std::string> words;
  double score = 0.0;
  int edits = 0;
};

struct DecodeResult {
  std::string text;
  double score = 0.0;
  int edits = 0;
};

// One way to cover syllables [start, start + span): a lexicon word or, with
// `fallback` set, a spelled-out syllable.
struct WordCandidate {
  std::size_t start = 0;
  std::size_t span = 0;
  std::string word;
  int edits = 0;
  bool fallback = false;
};

// Holds references; the lexicon, model and tables must outlive the decoder.
class Decoder {
 public:
  Decoder(const Lexicon& lexicon, const NGramModel& lm, const Orthography& orthography,
          const G2P& g2p, DecodeConfig config = {});

  const DecodeConfig& config() const { return config_; }

  // Every candidate over the sequence, grouped by start position.
  std::vector<std::vector<WordCandidate>> candidates(const PhoneSequence& phones) const;

  // Score contribution of appending `c` after `history` (starting with <s>).
  double step_score(const WordCandidate& c, const std::vector<std::string>& history) const;
  double final_score(const std::vector<std::string>& history) const;

  // Ranked best-first; empty input yields a single ("", 0).
  std::vector<DecodeResult> decode(const PhoneSequence& phones) const;

 private:
  struct KeyForms {
    std::string key;
    std::vector<std::vector<std::string>> syllables;  // tokens per syllable
  };

  const Lexicon& lexicon_;
  const NGramModel& lm_;
  const Orthography& orthography_;
  const G2P& g2p_;
  DecodeConfig config_;
  std::vector<std::vector<KeyForms>> forms_by_length_;
};

// Order used for ranking: higher score, then fewer edits, then text.
bool better_result(const DecodeResult& a, const DecodeResult& b);

int token_edit_distance(const std::vector<std::string>& a, const std::vector<std::string>& b,
                        int limit);

struct DecodeInput {
  std::string id;
  PhoneSequence phones;
};

// Best hypothesis per input, in input order, on up to `jobs` threads.
std::vector<std::pair<std::string, std::string>> decode_corpus(
    const std::vector<DecodeInput>& inputs, const Decoder& decoder, std::size_t jobs = 1);

}  // namespace vietcs

#endif  // VIETCS_DECODER_HPP_
