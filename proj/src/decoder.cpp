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

#include "vietcs/decoder.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "parallel.hpp"
#include "vietcs/error.hpp"
#include "vietcs/text.hpp"

namespace vietcs {

void DecodeConfig::validate() const {
  if (beam_width < 1) throw Error(ErrorCode::kInvalidArgument, "beam_width must be >= 1");
  if (fuzzy_k < 0 || fuzzy_k > 2) throw Error(ErrorCode::kInvalidArgument, "fuzzy_k must be 0..2");
  if (!(lm_weight >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "lm_weight must be >= 0");
  if (!(fuzzy_penalty >= 0.0) || !(fallback_penalty >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "penalties must be >= 0");
  }
  if (max_span < 1) throw Error(ErrorCode::kInvalidArgument, "max_span must be >= 1");
}

int token_edit_distance(const std::vector<std::string>& a, const std::vector<std::string>& b,
                        int limit) {
  const int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
  if (std::abs(n - m) > limit) return limit + 1;
  std::vector<int> prev(m + 1), cur(m + 1);
  for (int j = 0; j <= m; ++j) prev[j] = j;
  for (int i = 1; i <= n; ++i) {
    cur[0] = i;
    int row_min = cur[0];
    for (int j = 1; j <= m; ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
      row_min = std::min(row_min, cur[j]);
    }
    if (row_min > limit) return limit + 1;
    std::swap(prev, cur);
  }
  return std::min(prev[m], limit + 1);
}

bool better_result(const DecodeResult& a, const DecodeResult& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.edits != b.edits) return a.edits < b.edits;
  return a.text < b.text;
}

Decoder::Decoder(const Lexicon& lexicon, const NGramModel& lm, const Orthography& orthography,
                 const G2P& g2p, DecodeConfig config)
    : lexicon_(lexicon), lm_(lm), orthography_(orthography), g2p_(g2p), config_(config) {
  config_.validate();
  forms_by_length_.resize(lexicon_.max_syllables() + 1);
  for (std::size_t len = 1; len < forms_by_length_.size(); ++len) {
    for (const std::string& key : lexicon_.keys_of_length(len)) {
      KeyForms f;
      f.key = key;
      for (const SyllablePhones& s : lexicon_.lookup(key).front()->phones) {
        f.syllables.push_back(s.tokens());
      }
      forms_by_length_[len].push_back(std::move(f));
    }
  }
}

std::vector<std::vector<WordCandidate>> Decoder::candidates(const PhoneSequence& phones) const {
  const std::size_t n = phones.syllables.size();
  std::vector<std::vector<std::string>> observed;
  observed.reserve(n);
  for (const SyllablePhones& s : phones.syllables) observed.push_back(s.tokens());

  std::vector<std::vector<WordCandidate>> out(n);
  for (std::size_t start = 0; start < n; ++start) {
    const std::size_t longest = std::min({config_.max_span, n - start, forms_by_length_.size() - 1});
    for (std::size_t span = 1; span <= longest; ++span) {
      for (const KeyForms& form : forms_by_length_[span]) {
        int edits = 0;
        for (std::size_t k = 0; k < span; ++k) {
          int d = token_edit_distance(form.syllables[k], observed[start + k], config_.fuzzy_k);
          if (d > config_.fuzzy_k) {
            edits = -1;
            break;
          }
          edits += d;
        }
        if (edits < 0) continue;
        std::set<std::string> words;
        for (const LexiconEntry* e : lexicon_.lookup(form.key)) {
          if (words.insert(e->word).second) {
            out[start].push_back(WordCandidate{start, span, e->word, edits, false});
          }
        }
      }
    }
    out[start].push_back(WordCandidate{start, 1, g2p_.render(phones.syllables[start], orthography_),
                                       0, true});
  }
  return out;
}

double Decoder::step_score(const WordCandidate& c, const std::vector<std::string>& history) const {
  if (c.fallback) {
    return config_.lm_weight * lm_.log_prob(kUnknownWord, history) - config_.fallback_penalty;
  }
  return config_.lm_weight * lm_.log_prob(c.word, history) - config_.fuzzy_penalty * c.edits;
}

double Decoder::final_score(const std::vector<std::string>& history) const {
  return config_.lm_weight * lm_.log_prob(kSentenceEnd, history);
}

std::vector<DecodeResult> Decoder::decode(const PhoneSequence& phones) const {
  const std::size_t n = phones.syllables.size();
  if (n == 0) return {DecodeResult{"", 0.0, 0}};
  const auto cands = candidates(phones);

  auto as_result = [](const DecodeHypothesis& h) {
    return DecodeResult{text::join(h.words, " "), h.score, h.edits};
  };
  auto prune = [&](std::vector<DecodeHypothesis>& beam) {
    std::vector<std::pair<DecodeResult, std::size_t>> keyed;
    for (std::size_t i = 0; i < beam.size(); ++i) keyed.emplace_back(as_result(beam[i]), i);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return better_result(a.first, b.first); });
    if (keyed.size() > config_.beam_width) keyed.resize(config_.beam_width);
    std::vector<DecodeHypothesis> kept;
    for (const auto& k : keyed) kept.push_back(std::move(beam[k.second]));
    beam = std::move(kept);
  };

  std::vector<std::vector<DecodeHypothesis>> beams(n + 1);
  beams[0].push_back(DecodeHypothesis{});
  std::vector<std::string> history;
  for (std::size_t pos = 0; pos < n; ++pos) {
    prune(beams[pos]);
    for (const DecodeHypothesis& h : beams[pos]) {
      history.assign(1, std::string(kSentenceStart));
      history.insert(history.end(), h.words.begin(), h.words.end());
      for (const WordCandidate& c : cands[pos]) {
        DecodeHypothesis next = h;
        next.consumed = pos + c.span;
        next.words.push_back(c.word);
        next.score += step_score(c, history);
        next.edits += c.edits;
        beams[next.consumed].push_back(std::move(next));
      }
    }
    beams[pos].clear();
  }
  std::vector<DecodeHypothesis>& final_beam = beams[n];
  for (DecodeHypothesis& h : final_beam) {
    history.assign(1, std::string(kSentenceStart));
    history.insert(history.end(), h.words.begin(), h.words.end());
    h.score += final_score(history);
  }
  prune(final_beam);
  // Different segmentations can spell the same text; keep its best score only.
  std::vector<DecodeResult> out;
  std::set<std::string> seen;
  for (const DecodeHypothesis& h : final_beam) {
    DecodeResult r = as_result(h);
    if (seen.insert(r.text).second) out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> decode_corpus(
    const std::vector<DecodeInput>& inputs, const Decoder& decoder, std::size_t jobs) {
  std::vector<std::pair<std::string, std::string>> out(inputs.size());
  detail::parallel_for(inputs.size(), jobs, [&](std::size_t i) {
    out[i] = {inputs[i].id, decoder.decode(inputs[i].phones).front().text};
  });
  return out;
}

}  // namespace vietcs
