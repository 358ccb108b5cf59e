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

// Word n-gram language model with interpolated absolute discounting.

#ifndef VIETCS_NGRAM_HPP_
#define VIETCS_NGRAM_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace vietcs {

inline constexpr std::string_view kSentenceStart = "<s>";
inline constexpr std::string_view kSentenceEnd = "</s>";
inline constexpr std::string_view kUnknownWord = "<unk>";

class NGramModel {
 public:
  NGramModel() = default;

  // Sentences are whitespace-tokenized; each is padded with <s> and </s>.
  // Throws EmptyCorpus when no sentence has a token.
  static NGramModel train(const std::vector<std::string>& sentences, int order,
                          double discount = 0.75);

  int order() const { return order_; }
  double discount() const { return discount_; }

  // P(word | history); only the last order-1 history words matter. Unknown
  // words are scored as <unk>.
  double prob(std::string_view word, const std::vector<std::string>& history) const;
  double log_prob(std::string_view word, const std::vector<std::string>& history) const;

  bool in_vocabulary(std::string_view word) const;
  // Vocabulary without <s>, </s> and <unk>.
  std::vector<std::string> vocabulary() const;
  std::size_t vocabulary_size() const { return vocab_.size(); }

  // Count format: header lines "order N" and "discount D", then
  // "n<TAB>count<TAB>w1 w2 ...".
  static NGramModel load(const std::filesystem::path& path);
  static NGramModel parse(std::string_view content);
  std::string serialize() const;
  void save(const std::filesystem::path& path) const;

 private:
  using Gram = std::vector<std::string>;
  struct ContextStats {
    std::uint64_t total = 0;      // c(h .)
    std::uint64_t followers = 0;  // distinct w with c(h w) > 0
  };

  void add(const Gram& gram, std::uint64_t count);
  void finalize();
  double interpolated(std::string_view word, const Gram& context) const;

  int order_ = 0;
  double discount_ = 0.75;
  std::map<Gram, std::uint64_t> counts_;
  std::map<Gram, ContextStats> contexts_;
  std::set<std::string, std::less<>> vocab_;
  std::uint64_t unigram_total_ = 0;
};

}  // namespace vietcs

#endif  // VIETCS_NGRAM_HPP_
