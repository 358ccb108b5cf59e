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

#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "vietcs/ngram.hpp"

namespace vietcs {
namespace {

TEST(NGram, UnigramHandValue) {
  // Tokens x and </s>: N = 2, V = 2. p(x) = 0.25/2 + (0.75*2/2)/3.
  NGramModel m = NGramModel::train({"x"}, 1);
  EXPECT_NEAR(m.prob("x", {}), 0.375, 1e-12);
  EXPECT_NEAR(m.prob("never-seen", {}), 0.25, 1e-12);
  EXPECT_NEAR(m.prob("</s>", {}), 0.375, 1e-12);
}

TEST(NGram, BigramHandValues) {
  NGramModel m = NGramModel::train({"a b a b"}, 2);
  // Unigram: a=2, b=2, </s>=1, N=5, V=3 -> p(a) = 1.25/5 + (0.75*3/5)/4 = 0.3625.
  // Context a: c(a b)=2, total 2, one follower.
  EXPECT_NEAR(m.prob("b", {"a"}), 0.625 + 0.375 * 0.3625, 1e-12);
  EXPECT_NEAR(m.prob("a", {"a"}), 0.375 * 0.3625, 1e-12);
  EXPECT_GT(m.prob("b", {"a"}), m.prob("a", {"a"}));
}

TEST(NGram, EmptyCorpus) {
  EXPECT_VCS_ERROR(NGramModel::train({}, 2), ErrorCode::kEmptyCorpus);
  EXPECT_VCS_ERROR(NGramModel::train({"", "   "}, 2), ErrorCode::kEmptyCorpus);
  EXPECT_VCS_ERROR(NGramModel::train({"a"}, 5), ErrorCode::kInvalidArgument);
}

TEST(NGram, NormalizesPerContext) {
  NGramModel m = NGramModel::train({"tôi thích cái list này", "cho tôi cái lít nước",
                                    "tôi thích video", "cái list của tôi"},
                                   3);
  std::vector<std::string> outcomes = m.vocabulary();
  outcomes.emplace_back(kSentenceEnd);
  outcomes.emplace_back(kUnknownWord);
  const std::vector<std::vector<std::string>> histories = {
      {}, {"<s>"}, {"tôi"}, {"tôi", "thích"}, {"cái", "list"}, {"zzz", "cái"}, {"zzz", "yyy"}};
  for (const auto& h : histories) {
    double total = 0;
    for (const auto& w : outcomes) total += m.prob(w, h);
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
}

TEST(NGram, BacksOffForUnseenContexts) {
  NGramModel m = NGramModel::train({"a b", "b c"}, 3);
  EXPECT_NEAR(m.prob("c", {"zzz", "qqq"}), m.prob("c", {}), 1e-12);
  EXPECT_GT(m.prob("c", {"b"}), m.prob("c", {}));
}

TEST(NGram, SentenceStartCutsHistory) {
  NGramModel m = NGramModel::train({"a b", "c a"}, 3);
  EXPECT_NEAR(m.prob("b", {"c", "<s>", "a"}), m.prob("b", {"<s>", "a"}), 1e-12);
}

TEST(NGram, LogProbFloor) {
  NGramModel m = NGramModel::train({"a"}, 1);
  EXPECT_TRUE(std::isfinite(m.log_prob("zzz", {})));
  EXPECT_NEAR(m.log_prob("a", {}), std::log(m.prob("a", {})), 1e-12);
}

TEST(NGram, SerializeRoundTrip) {
  NGramModel m = NGramModel::train({"tôi thích video", "video này hay"}, 3);
  NGramModel back = NGramModel::parse(m.serialize());
  EXPECT_EQ(back.serialize(), m.serialize());
  EXPECT_EQ(back.order(), 3);
  EXPECT_DOUBLE_EQ(back.prob("này", {"<s>", "video"}), m.prob("này", {"<s>", "video"}));
  EXPECT_VCS_ERROR(NGramModel::parse("1\t1\ta\n"), ErrorCode::kDataFile);
  EXPECT_VCS_ERROR(NGramModel::parse("order 2\n2\t1\ta\n"), ErrorCode::kDataFile);
}

}  // namespace
}  // namespace vietcs
