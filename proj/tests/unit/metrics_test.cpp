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

#include <algorithm>
#include <functional>
#include <random>

#include "support.hpp"
#include "vietcs/metrics.hpp"
#include "vietcs/text.hpp"

namespace vietcs {
namespace {

using testing::phones;

std::vector<std::string> words(const std::string& s) { return text::split_whitespace(s); }

std::size_t recursive_distance(const std::vector<std::string>& a, std::size_t i,
                               const std::vector<std::string>& b, std::size_t j) {
  if (i == a.size()) return b.size() - j;
  if (j == b.size()) return a.size() - i;
  std::size_t best = recursive_distance(a, i + 1, b, j + 1) + (a[i] == b[j] ? 0 : 1);
  best = std::min(best, recursive_distance(a, i + 1, b, j) + 1);
  best = std::min(best, recursive_distance(a, i, b, j + 1) + 1);
  return best;
}

TEST(EditDistance, Identity) {
  auto r = edit_distance(words("a b c"), words("a b c"));
  EXPECT_EQ(r.distance, 0u);
  EXPECT_EQ(r.rate(), 0.0);
}

TEST(EditDistance, CameraRow) {
  auto r = edit_distance(words("kiểm tra camera tòa nhà"), words("kiểm tra cả mẹ ra tòa nhà"));
  EXPECT_EQ(r.distance, 3u);
  EXPECT_EQ(r.substitutions, 1u);
  EXPECT_EQ(r.insertions, 2u);
  EXPECT_DOUBLE_EQ(r.rate(), 3.0 / 5.0);
}

TEST(EditDistance, ConcertRow) {
  EXPECT_DOUBLE_EQ(wer("đi dự concert", "đi giữ con sót"), 3.0 / 3.0);
}

TEST(EditDistance, AlignmentIsConsistent) {
  auto r = edit_distance(words("a b c d"), words("a x c e f"));
  std::size_t s = 0, i = 0, d = 0;
  for (const auto& op : r.ops) {
    s += op.op == EditOp::kSub;
    i += op.op == EditOp::kIns;
    d += op.op == EditOp::kDel;
  }
  EXPECT_EQ(r.distance, s + i + d);
  EXPECT_EQ(s, r.substitutions);
  EXPECT_EQ(i, r.insertions);
  EXPECT_EQ(d, r.deletions);
}

TEST(EditDistance, TiesPreferSubstitution) {
  auto r = edit_distance(words("a"), words("b"));
  ASSERT_EQ(r.ops.size(), 1u);
  EXPECT_EQ(r.ops[0].op, EditOp::kSub);
  auto r2 = edit_distance(words("a b"), words("b"));
  ASSERT_EQ(r2.ops.size(), 2u);
  EXPECT_EQ(r2.ops[0].op, EditOp::kDel);
  EXPECT_EQ(r2.ops[1].op, EditOp::kMatch);
}

TEST(EditDistance, ExhaustiveOracleSmall) {
  // Full sweep lives in the acceptance binary; lengths up to 4 here.
  std::vector<std::vector<std::string>> all{{}};
  for (std::size_t len = 1; len <= 4; ++len) {
    std::vector<std::vector<std::string>> next;
    for (const auto& s : all) {
      if (s.size() + 1 != len) continue;
      for (const char* c : {"a", "b", "c"}) {
        auto t = s;
        t.push_back(c);
        next.push_back(t);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
  }
  for (const auto& a : all) {
    for (const auto& b : all) {
      ASSERT_EQ(edit_distance(a, b).distance, recursive_distance(a, 0, b, 0));
    }
  }
}

TEST(EditDistance, MetricProperties) {
  std::mt19937_64 rng(3);
  auto random_seq = [&] {
    std::vector<std::string> s(rng() % 7);
    for (auto& t : s) t = std::string(1, static_cast<char>('a' + rng() % 3));
    return s;
  };
  for (int i = 0; i < 500; ++i) {
    auto a = random_seq(), b = random_seq(), c = random_seq();
    std::size_t ab = edit_distance(a, b).distance, ba = edit_distance(b, a).distance;
    EXPECT_EQ(ab, ba);
    EXPECT_LE(edit_distance(a, c).distance, ab + edit_distance(b, c).distance);
  }
}

TEST(Wer, EdgeCases) {
  EXPECT_DOUBLE_EQ(wer("một hai ba", ""), 1.0);
  EXPECT_DOUBLE_EQ(wer("", ""), 0.0);
  EXPECT_DOUBLE_EQ(wer("a", "a b c"), 2.0);
  EXPECT_DOUBLE_EQ(wer("Xem cái Video, này!", "xem cái video này"), 0.0);
  TextNormalization raw{false, false};
  EXPECT_DOUBLE_EQ(wer("Video", "video", raw), 1.0);
}

TEST(Per, CountsToneTokens) {
  EXPECT_DOUBLE_EQ(per(phones("ɛ - 4 tz"), phones("ɛ - 0 tz")), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(per(phones("t o - 0 iz"), phones("t o - 0 iz")), 0.0);
}

TEST(Corpus, PooledTotalsAndOrderInvariance) {
  std::vector<std::pair<std::string, std::string>> pairs = {
      {"a b c d", "a b c d"}, {"x y", "x z"}, {"p", ""}, {"m n o", "m n o q"}};
  CorpusReport fwd = corpus_report(pairs);
  std::reverse(pairs.begin(), pairs.end());
  CorpusReport rev = corpus_report(pairs);
  EXPECT_DOUBLE_EQ(fwd.wer(), 3.0 / 10.0);
  EXPECT_DOUBLE_EQ(fwd.wer(), rev.wer());
  EXPECT_EQ(fwd.to_text(), rev.to_text());
}

TEST(Corpus, SingletonEqualsPairRate) {
  CorpusReport r = corpus_report({{"đi dự concert", "đi giữ con sót"}});
  EXPECT_DOUBLE_EQ(r.wer(), wer("đi dự concert", "đi giữ con sót"));
}

TEST(Corpus, MergeIsAdditive) {
  std::vector<std::pair<std::string, std::string>> a = {{"a b", "a c"}, {"d", "d"}};
  std::vector<std::pair<std::string, std::string>> b = {{"e f g", "e"}, {"h", "i j"}};
  CorpusScorer merged;
  merged.merge(corpus_report(a));
  merged.merge(corpus_report(b));
  auto all = a;
  all.insert(all.end(), b.begin(), b.end());
  EXPECT_EQ(merged.report().to_json(), corpus_report(all).to_json());
}

TEST(Corpus, TopConfusionOnFixture) {
  // "list" misread as "lít" three times, other slips once each.
  std::vector<std::pair<std::string, std::string>> pairs = {
      {"cái list này", "cái lít này"}, {"list của tôi", "lít của tôi"},
      {"một list", "một lít"},         {"đi dự concert", "đi giữ concert"},
      {"xem video", "xem vi deo"},     {"tôi thích", "tôi thích"},
      {"cho tôi", "cho tui"},          {"hôm nay", "hôm nay"},
      {"trời đẹp", "trời đẹp"},        {"ok nhé", "ô kê nhé"}};
  CorpusReport r = corpus_report(pairs);
  auto top = r.top_confusions(1);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_EQ(top[0].first, (std::pair<std::string, std::string>{"list", "lít"}));
  EXPECT_EQ(top[0].second, 3u);
}

TEST(Corpus, ReportFormats) {
  CorpusReport r = corpus_report({{"a b", "a c"}});
  std::string t = r.to_text();
  EXPECT_NE(t.find("wer: 0.5"), std::string::npos) << t;
  EXPECT_NE(r.to_json().find("\"wer\":0.5"), std::string::npos) << r.to_json();
}

}  // namespace
}  // namespace vietcs
