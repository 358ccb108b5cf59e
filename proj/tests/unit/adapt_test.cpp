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
#include <set>

#include "support.hpp"
#include "vietcs/adapt.hpp"
#include "vietcs/text.hpp"

namespace vietcs {
namespace {

using testing::shipped;

const EnglishAdapter& adapter() { return shipped().adapter; }
const Orthography& orth() { return shipped().orthography; }

IpaWord ipa_word(const std::string& word) {
  auto ipa = shipped().dictionary.lookup(word);
  if (!ipa) throw std::runtime_error("no transcription for " + word);
  return {word, adapter().tokenize_ipa(*ipa)};
}

std::vector<std::string> texts(const std::vector<VariantPronunciation>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.text);
  return out;
}

std::vector<std::string> segs(const std::string& ipa) { return adapter().tokenize_ipa(ipa); }

TEST(SplitIpa, Examples) {
  auto play = adapter().split_ipa({"play", segs("pleɪ")});
  ASSERT_EQ(play.size(), 1u);
  EXPECT_EQ(play[0].prefix, (std::vector<std::string>{"p", "l"}));
  EXPECT_EQ(play[0].postfix, std::vector<std::string>{"eɪ"});

  auto zoo = adapter().split_ipa({"zoo", segs("zuː")});
  ASSERT_EQ(zoo.size(), 1u);
  EXPECT_EQ(zoo[0].prefix, std::vector<std::string>{"z"});
  EXPECT_EQ(zoo[0].postfix, std::vector<std::string>{"uː"});

  auto bare = adapter().split_ipa({"", segs("iː")});
  ASSERT_EQ(bare.size(), 1u);
  EXPECT_TRUE(bare[0].prefix.empty());
}

TEST(SplitIpa, MaximalOnsetAndDiphthongs) {
  auto video = adapter().split_ipa(ipa_word("video"));
  ASSERT_EQ(video.size(), 2u);
  EXPECT_EQ(video[0].prefix, std::vector<std::string>{"v"});
  EXPECT_EQ(video[1].prefix, std::vector<std::string>{"d"});
  EXPECT_EQ(adapter().tokenize_ipa("ɡəʊ"), (std::vector<std::string>{"g", "əʊ"}));
}

TEST(SplitIpa, Errors) {
  EXPECT_VCS_ERROR(adapter().split_ipa({"x", {}}), ErrorCode::kInvalidArgument);
  EXPECT_VCS_ERROR(adapter().tokenize_ipa("p#"), ErrorCode::kUnsupportedSegment);
  EXPECT_VCS_ERROR(adapter().split_ipa({"x", {"p", "t"}}), ErrorCode::kUnsupportedSegment);
}

TEST(MapPrefix, Examples) {
  EXPECT_EQ(adapter().map_prefix({"θ"}).at(0).graphemes, std::vector<std::string>{"th"});
  EXPECT_EQ(adapter().map_prefix({"ʃ"}).at(0).graphemes, std::vector<std::string>{"s"});
  EXPECT_EQ(adapter().map_prefix({"p", "l"}).at(0).graphemes,
            (std::vector<std::string>{"p", "l"}));
  EXPECT_EQ(adapter().map_prefix({"j"}).at(0).graphemes, std::vector<std::string>{"gi"});
  EXPECT_EQ(adapter().map_prefix({}).at(0).graphemes, std::vector<std::string>{""});
}

TEST(MapRime, Examples) {
  EXPECT_EQ(rime_text(adapter().map_rime({"əʊ"}).at(0).pieces.at(0), orth()), "âu");
  EXPECT_EQ(rime_text(adapter().map_rime({"ʌ", "ŋ"}).at(0).pieces.at(0), orth()), "ăng");
  EXPECT_EQ(rime_text(adapter().map_rime({"ɪ", "ŋ", "k"}).at(0).pieces.at(0), orth()), "in");
  EXPECT_EQ(rime_text(adapter().map_rime({"eɪ"}).at(0).pieces.at(0), orth()), "ây");
  EXPECT_EQ(rime_text(adapter().map_rime({"e", "t"}).at(0).pieces.at(0), orth()), "ét");
}

TEST(MapRime, RanksAreSortedFromZero) {
  for (const auto& pattern : std::vector<std::vector<std::string>>{{"eɪ"}, {"ɜː", "t"}, {"uː"}}) {
    auto choices = adapter().map_rime(pattern);
    ASSERT_FALSE(choices.empty());
    EXPECT_EQ(choices[0].rank, 0);
    for (std::size_t i = 1; i < choices.size(); ++i) {
      EXPECT_LE(choices[i - 1].rank, choices[i].rank);
    }
  }
}

// Composed rimes ending in a single voiceless stop take sắc; the table also
// carries fixed rows (ɪŋk, æmp) whose tone is set by the row itself.
TEST(MapRime, VoicelessStopCodaTakesSac) {
  std::set<std::vector<std::string>> fixed;
  for (const auto& r : adapter().rules()) {
    if (r.side == RuleSide::kPostfix) fixed.insert(r.pattern);
  }
  for (const auto& r : adapter().rules()) {
    if (r.side != RuleSide::kNucleus) continue;
    if (!r.pattern.empty() && r.pattern.back() == "_") {
      std::vector<std::string> nucleus(r.pattern.begin(), r.pattern.end() - 1);
      for (const char* stop : {"p", "t", "k"}) {
        std::vector<std::string> rime = nucleus;
        rime.push_back(stop);
        if (fixed.count(rime)) continue;
        std::vector<RimeChoice> choices;
        try {
          choices = adapter().map_rime(rime);
        } catch (const Error&) {
          continue;  // no coda row for this nucleus
        }
        const RimePiece& last = choices.at(0).pieces.back();
        EXPECT_EQ(last.tone, Tone::kSac) << text::join(rime, " ");
      }
    }
  }
  for (const auto& r : adapter().rules()) {
    if (r.side != RuleSide::kPostfix || r.pattern.size() < 2) continue;
    const std::string& coda = r.pattern.back();
    bool stop = coda == "p" || coda == "t" || coda == "k";
    bool cluster_coda = r.pattern.size() >= 3 && !adapter().is_vowel(r.pattern[r.pattern.size() - 2]);
    if (!stop || cluster_coda || r.rank != 0) continue;
    EXPECT_EQ(adapter().map_rime(r.pattern).at(0).pieces.back().tone, Tone::kSac)
        << text::join(r.pattern, " ");
  }
}

TEST(MapRime, Unmapped) {
  EXPECT_VCS_ERROR(adapter().map_rime({"ŋ"}), ErrorCode::kUnmappedRime);
}

TEST(AdaptWord, VideoVariants) {
  auto v = adapter().adapt_word(ipa_word("video"), orth());
  auto t = texts(v);
  ASSERT_GE(t.size(), 3u);
  EXPECT_EQ(t[0], "vi deo");
  EXPECT_NE(std::find(t.begin(), t.end(), "vi đêu"), t.end());
  EXPECT_NE(std::find(t.begin(), t.end(), "vi đê ô"), t.end());
}

TEST(AdaptWord, SingleSyllableAnchors) {
  EXPECT_EQ(texts(adapter().adapt_word(ipa_word("a"), orth())).at(0), "ây");
  EXPECT_EQ(texts(adapter().adapt_word(ipa_word("zoo"), orth())).at(0), "du");
  EXPECT_EQ(texts(adapter().adapt_word(ipa_word("list"), orth())).at(0), "lít");
  EXPECT_EQ(texts(adapter().adapt_word(ipa_word("play"), orth())).at(0), "pơ lây");
}

TEST(AdaptWord, RespectsMaxVariants) {
  AdaptOptions opts;
  opts.max_variants = 1;
  EXPECT_EQ(adapter().adapt_word(ipa_word("video"), orth(), opts).size(), 1u);
}

TEST(AdaptWord, WholeDictionaryIsLegalRankedAndDeterministic) {
  for (const auto& [word, ipa] : shipped().dictionary.entries()) {
    IpaWord w{word, adapter().tokenize_ipa(ipa)};
    auto first = adapter().adapt_word(w, orth());
    auto second = adapter().adapt_word(w, orth());
    ASSERT_FALSE(first.empty()) << word;
    EXPECT_EQ(first[0].rank, 0) << word;
    EXPECT_EQ(texts(first), texts(second)) << word;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < first.size(); ++i) {
      if (i) {
        EXPECT_LE(first[i - 1].rank, first[i].rank) << word;
      }
      EXPECT_TRUE(seen.insert(first[i].text).second) << word << " duplicates " << first[i].text;
      for (const auto& syl : first[i].syllables) {
        std::string spelled = orth().compose(syl);
        EXPECT_EQ(orth().decompose(spelled), syl) << word;
      }
    }
  }
}

TEST(AdaptWord, ClusterPhonesKeepBothOnsets) {
  OnsetChoice pl{{"p", "l"}, 0};
  RimePiece ay{"ây", Tone::kNgang};
  EXPECT_EQ(serialize_syllable(cluster_phones(pl, ay, orth(), shipped().g2p)), "p l ə - 0 iz");
}

TEST(AdaptWord, ResourcesRejectUnknownWords) {
  EXPECT_VCS_ERROR(shipped().adapt("qwertyuiop"), ErrorCode::kOovEnglishWord);
}

TEST(Rules, ParserValidatesSegments) {
  EXPECT_VCS_ERROR(EnglishAdapter::parse("prefix\tz\td\t0\t[x]\n"), ErrorCode::kUnsupportedSegment);
}

}  // namespace
}  // namespace vietcs
