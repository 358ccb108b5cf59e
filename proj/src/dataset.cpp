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

#include "vietcs/dataset.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <queue>
#include <random>
#include <set>

#include "parallel.hpp"
#include "vietcs/error.hpp"
#include "vietcs/noise.hpp"
#include "vietcs/text.hpp"

namespace vietcs {
namespace {

// Tuples beyond this count are sampled by rejection instead of enumerated.
constexpr std::size_t kEnumerateLimit = 4096;

using Tuple = std::vector<int>;

int tuple_sum(const Tuple& t) { return std::accumulate(t.begin(), t.end(), 0); }

// Best-first enumeration by (rank sum, tuple).
std::vector<Tuple> best_tuples(const std::vector<int>& sizes, std::size_t limit) {
  using Item = std::pair<int, Tuple>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> frontier;
  std::set<Tuple> seen;
  Tuple start(sizes.size(), 0);
  frontier.emplace(0, start);
  seen.insert(start);
  std::vector<Tuple> out;
  while (!frontier.empty() && out.size() < limit) {
    Tuple t = frontier.top().second;
    frontier.pop();
    out.push_back(t);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] + 1 >= sizes[i]) continue;
      Tuple next = t;
      ++next[i];
      if (seen.insert(next).second) frontier.emplace(tuple_sum(next), next);
    }
  }
  return out;
}

std::vector<Tuple> sampled_tuples(const std::vector<int>& sizes, std::size_t limit,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(mix_seed(seed));
  auto below = [&](std::size_t n) {
    return static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n));
  };
  double total = 1.0;
  for (int s : sizes) total *= s;
  std::vector<Tuple> out;
  if (total <= static_cast<double>(kEnumerateLimit)) {
    std::vector<Tuple> all = best_tuples(sizes, kEnumerateLimit);
    for (std::size_t i = 0; i < all.size() && out.size() < limit; ++i) {
      std::size_t j = i + below(all.size() - i);
      std::swap(all[i], all[j]);
      out.push_back(all[i]);
    }
    return out;
  }
  std::set<Tuple> seen;
  for (std::size_t attempt = 0; out.size() < limit && attempt < limit * 64; ++attempt) {
    Tuple t;
    for (int s : sizes) t.push_back(static_cast<int>(below(static_cast<std::size_t>(s))));
    if (seen.insert(t).second) out.push_back(std::move(t));
  }
  return out;
}

std::string record_id(std::size_t line, std::size_t n) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%06zu-%02zu", line, n);
  return buf;
}

}  // namespace

std::string_view variant_mode_name(VariantMode mode) {
  switch (mode) {
    case VariantMode::kRank0: return "rank0";
    case VariantMode::kExhaustive: return "exhaustive";
    case VariantMode::kSampled: return "sampled";
  }
  return "?";
}

std::optional<VariantMode> variant_mode_from_name(std::string_view name) {
  if (name == "rank0") return VariantMode::kRank0;
  if (name == "exhaustive") return VariantMode::kExhaustive;
  if (name == "sampled") return VariantMode::kSampled;
  return std::nullopt;
}

void VariantPolicy::validate() const {
  if (max_variants_per_sentence < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_variants_per_sentence must be >= 1");
  }
}

std::vector<CsRecord> localize_sentence(std::string_view sentence, const VariantPolicy& policy,
                                        const Resources& resources, const Lexicon& lexicon,
                                        std::size_t line_index) {
  policy.validate();
  const std::string reference(text::trim(text::nfc(sentence)));
  std::vector<std::string> tokens = text::split_whitespace(reference);

  struct EnglishSlot {
    std::size_t position;
    std::string prefix, suffix;
    std::vector<const LexiconEntry*> variants;
  };
  std::vector<EnglishSlot> slots;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::string lowered = text::lowercase(tokens[i]);
    std::string word = text::strip_punctuation(lowered);
    if (word.empty() || resources.orthography.try_decompose(word)) continue;
    auto variants = lexicon.find_word(word, Language::kEnglish);
    if (variants.empty()) throw Error(ErrorCode::kOovEnglishWord, word);
    std::size_t at = lowered.find(word);
    slots.push_back({i, lowered.substr(0, at), lowered.substr(at + word.size()), variants});
  }

  std::vector<int> sizes;
  for (const EnglishSlot& s : slots) sizes.push_back(static_cast<int>(s.variants.size()));
  std::vector<Tuple> tuples;
  switch (policy.mode) {
    case VariantMode::kRank0:
      tuples.push_back(Tuple(slots.size(), 0));
      break;
    case VariantMode::kExhaustive:
      tuples = best_tuples(sizes, policy.max_variants_per_sentence);
      break;
    case VariantMode::kSampled:
      tuples = sampled_tuples(sizes, policy.max_variants_per_sentence, policy.seed);
      break;
  }

  std::vector<CsRecord> out;
  for (const Tuple& t : tuples) {
    CsRecord r;
    r.id = record_id(line_index, out.size());
    r.reference = reference;
    std::vector<std::string> localized = tokens;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const LexiconEntry* e = slots[k].variants[static_cast<std::size_t>(t[k])];
      localized[slots[k].position] = slots[k].prefix + e->spelling + slots[k].suffix;
      r.variant_choices[slots[k].position] = e->variant;
    }
    r.localized = text::join(localized, " ");
    r.phones = text_to_phones(r.localized, resources.orthography, resources.g2p, lexicon);
    out.push_back(std::move(r));
  }
  return out;
}

CorpusBuild build_p2t_corpus(const std::vector<std::string>& lines, const VariantPolicy& policy,
                             const Resources& resources, const Lexicon& lexicon,
                             std::size_t jobs) {
  policy.validate();
  struct Slot {
    std::vector<CsRecord> records;
    std::optional<std::string> error;
  };
  std::vector<Slot> slots(lines.size());
  detail::parallel_for(lines.size(), jobs, [&](std::size_t i) {
    if (text::trim(lines[i]).empty()) return;
    VariantPolicy line_policy = policy;
    line_policy.seed = policy.seed ^ static_cast<std::uint64_t>(i);
    try {
      slots[i].records = localize_sentence(lines[i], line_policy, resources, lexicon, i);
    } catch (const Error& e) {
      slots[i].error = e.what();
    }
  });
  CorpusBuild out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].error) {
      out.rejects.push_back({i + 1, *slots[i].error});
      continue;
    }
    for (CsRecord& r : slots[i].records) out.records.push_back(std::move(r));
  }
  return out;
}

}  // namespace vietcs
