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

#include "vietcs/ngram.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tsv.hpp"
#include "vietcs/error.hpp"
#include "vietcs/text.hpp"

namespace vietcs {
namespace {

constexpr double kProbabilityFloor = 1e-10;

}  // namespace

NGramModel NGramModel::train(const std::vector<std::string>& sentences, int order,
                             double discount) {
  if (order < 1 || order > 4) throw Error(ErrorCode::kInvalidArgument, "order must be 1..4");
  if (!(discount > 0.0 && discount < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "discount must lie in (0,1)");
  }
  NGramModel m;
  m.order_ = order;
  m.discount_ = discount;
  bool any = false;
  for (const std::string& sentence : sentences) {
    std::vector<std::string> words = text::split_whitespace(sentence);
    if (words.empty()) continue;
    any = true;
    Gram padded{std::string(kSentenceStart)};
    padded.insert(padded.end(), words.begin(), words.end());
    padded.emplace_back(kSentenceEnd);
    for (std::size_t i = 1; i < padded.size(); ++i) {
      for (std::size_t n = 1; n <= static_cast<std::size_t>(order) && n <= i + 1; ++n) {
        m.add(Gram(padded.begin() + (i + 1 - n), padded.begin() + i + 1), 1);
      }
    }
  }
  if (!any) throw Error(ErrorCode::kEmptyCorpus, "no tokens to train on");
  m.finalize();
  return m;
}

void NGramModel::add(const Gram& gram, std::uint64_t count) { counts_[gram] += count; }

void NGramModel::finalize() {
  contexts_.clear();
  vocab_.clear();
  unigram_total_ = 0;
  for (const auto& [gram, count] : counts_) {
    if (gram.size() == 1) {
      vocab_.insert(gram[0]);
      unigram_total_ += count;
    }
    Gram context(gram.begin(), gram.end() - 1);
    ContextStats& s = contexts_[context];
    s.total += count;
    s.followers += 1;
  }
}

double NGramModel::interpolated(std::string_view word, const Gram& context) const {
  const double d = discount_;
  if (context.empty()) {
    const double n = static_cast<double>(unigram_total_);
    const double v = static_cast<double>(vocab_.size());
    double c = 0.0;
    if (auto it = counts_.find(Gram{std::string(word)}); it != counts_.end()) c = it->second;
    return std::max(c - d, 0.0) / n + (d * v / n) / (v + 1.0);
  }
  const double lower = interpolated(word, Gram(context.begin() + 1, context.end()));
  auto ctx = contexts_.find(context);
  if (ctx == contexts_.end() || ctx->second.total == 0) return lower;
  Gram full = context;
  full.emplace_back(word);
  double c = 0.0;
  if (auto it = counts_.find(full); it != counts_.end()) c = it->second;
  const double total = static_cast<double>(ctx->second.total);
  return std::max(c - d, 0.0) / total +
         d * static_cast<double>(ctx->second.followers) / total * lower;
}

double NGramModel::prob(std::string_view word, const std::vector<std::string>& history) const {
  if (order_ == 0) throw Error(ErrorCode::kInvalidArgument, "language model is not trained");
  std::string w = in_vocabulary(word) ? std::string(word) : std::string(kUnknownWord);
  Gram context;
  const std::size_t keep = static_cast<std::size_t>(order_ - 1);
  const std::size_t from = history.size() > keep ? history.size() - keep : 0;
  for (std::size_t i = from; i < history.size(); ++i) {
    const std::string& h = history[i];
    context.push_back(h == kSentenceStart || in_vocabulary(h) ? h : std::string(kUnknownWord));
  }
  // Truncate at the last sentence start; nothing precedes it.
  for (std::size_t i = context.size(); i > 0; --i) {
    if (context[i - 1] == kSentenceStart) {
      context.erase(context.begin(), context.begin() + (i - 1));
      break;
    }
  }
  return interpolated(w, context);
}

double NGramModel::log_prob(std::string_view word, const std::vector<std::string>& history) const {
  return std::log(std::max(prob(word, history), kProbabilityFloor));
}

bool NGramModel::in_vocabulary(std::string_view word) const {
  return vocab_.find(word) != vocab_.end();
}

std::vector<std::string> NGramModel::vocabulary() const {
  std::vector<std::string> out;
  for (const std::string& w : vocab_) {
    if (w != kSentenceEnd && w != kUnknownWord) out.push_back(w);
  }
  return out;
}

NGramModel NGramModel::load(const std::filesystem::path& path) {
  try {
    return parse(tsv::read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

NGramModel NGramModel::parse(std::string_view content) {
  NGramModel m;
  bool have_order = false;
  for (const tsv::Row& row : tsv::parse(content)) {
    const auto& f = row.fields;
    if (f.size() == 1) {
      auto kv = text::split_whitespace(f[0]);
      if (kv.size() != 2) tsv::fail("lm", row, "expected 'order N' or 'discount D'");
      try {
        if (kv[0] == "order") {
          m.order_ = std::stoi(kv[1]);
          have_order = true;
        } else if (kv[0] == "discount") {
          m.discount_ = std::stod(kv[1]);
        } else {
          tsv::fail("lm", row, "unknown header '" + kv[0] + "'");
        }
      } catch (const std::logic_error&) {
        tsv::fail("lm", row, "bad header value '" + kv[1] + "'");
      }
      continue;
    }
    if (f.size() != 3) tsv::fail("lm", row, "expected n, count, words");
    Gram gram = text::split_whitespace(f[2]);
    std::uint64_t count = 0;
    try {
      if (std::stoul(f[0]) != gram.size()) tsv::fail("lm", row, "n does not match the words");
      count = std::stoull(f[1]);
    } catch (const std::logic_error&) {
      tsv::fail("lm", row, "bad number");
    }
    if (count == 0) tsv::fail("lm", row, "zero count");
    m.add(gram, count);
  }
  if (!have_order || m.order_ < 1 || m.order_ > 4) {
    throw Error(ErrorCode::kDataFile, "missing or invalid 'order' header");
  }
  if (!(m.discount_ > 0.0 && m.discount_ < 1.0)) {
    throw Error(ErrorCode::kDataFile, "discount must lie in (0,1)");
  }
  for (const auto& [gram, count] : m.counts_) {
    if (static_cast<int>(gram.size()) > m.order_) {
      throw Error(ErrorCode::kDataFile, "n-gram longer than the model order");
    }
  }
  m.finalize();
  if (m.unigram_total_ == 0) throw Error(ErrorCode::kEmptyCorpus, "no unigram counts");
  return m;
}

std::string NGramModel::serialize() const {
  std::ostringstream out;
  out.precision(17);
  out << "order " << order_ << "\ndiscount " << discount_ << "\n";
  for (int n = 1; n <= order_; ++n) {
    for (const auto& [gram, count] : counts_) {
      if (static_cast<int>(gram.size()) == n) {
        out << n << '\t' << count << '\t' << text::join(gram, " ") << '\n';
      }
    }
  }
  return out.str();
}

void NGramModel::save(const std::filesystem::path& path) const {
  tsv::write_file(path, serialize());
}

}  // namespace vietcs
