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

#include <set>

#include "support.hpp"
#include "vietcs/dataset.hpp"
#include "vietcs/decoder.hpp"
#include "vietcs/pipeline.hpp"
#include "vietcs/text.hpp"

namespace vietcs {
namespace {

using testing::shipped;

Lexicon lexicon_for(const std::vector<std::string>& lines) {
  return shipped().corpus_lexicon(lines);
}

VariantPolicy policy(VariantMode mode, std::size_t cap = 4, std::uint64_t seed = 0) {
  VariantPolicy p;
  p.mode = mode;
  p.max_variants_per_sentence = cap;
  p.seed = seed;
  return p;
}

TEST(Localize, Rank0KeepsGraphemeSpelling) {
  std::string line = "xem cái video này";
  auto recs = localize_sentence(line, policy(VariantMode::kRank0), shipped(), lexicon_for({line}));
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].reference, line);
  EXPECT_EQ(recs[0].localized, "xem cái vi deo này");
  EXPECT_EQ(recs[0].variant_choices, (std::map<std::size_t, int>{{2, 0}}));
}

TEST(Localize, AllVietnamese) {
  std::string line = "hôm nay trời đẹp";
  auto recs = localize_sentence(line, policy(VariantMode::kExhaustive), shipped(),
                                lexicon_for({line}));
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].localized, line);
  EXPECT_TRUE(recs[0].variant_choices.empty());
}

TEST(Localize, ExhaustiveCoversVideoVariants) {
  auto recs = localize_sentence("video", policy(VariantMode::kExhaustive, 3), shipped(),
                                lexicon_for({"video"}));
  std::set<std::string> got;
  for (const auto& r : recs) got.insert(r.localized);
  EXPECT_EQ(got, (std::set<std::string>{"vi deo", "vi đêu", "vi đê ô"}));
}

TEST(Localize, PhonesMatchLocalizedText) {
  std::string line = "tối nay có party ở office nhé";
  Lexicon lex = lexicon_for({line});
  for (const auto& r : localize_sentence(line, policy(VariantMode::kExhaustive, 6), shipped(), lex)) {
    PhoneSequence expected;
    for (const auto& w : text::normalize_words(r.localized)) {
      expected.append_word(spelling_to_phones(w, shipped().orthography, shipped().g2p));
    }
    EXPECT_EQ(r.phones, expected) << r.localized;
    auto ref = text::split_whitespace(r.reference);
    for (std::size_t i = 0; i < ref.size(); ++i) {
      if (!r.variant_choices.count(i)) {
        EXPECT_NE(r.localized.find(ref[i]), std::string::npos);
      }
    }
  }
}

TEST(Localize, VariantCoverage) {
  Lexicon lex = lexicon_for({"video"});
  auto variants = shipped().adapt("video");
  auto recs = localize_sentence("video", policy(VariantMode::kExhaustive, 64), shipped(), lex);
  std::set<std::string> got;
  for (const auto& r : recs) got.insert(r.localized);
  for (const auto& v : variants) EXPECT_TRUE(got.count(v.text)) << v.text;
}

TEST(Localize, SampledIsSeededAndDistinct) {
  std::string line = "check email rồi update report";
  Lexicon lex = lexicon_for({line});
  auto a = localize_sentence(line, policy(VariantMode::kSampled, 3, 7), shipped(), lex);
  auto b = localize_sentence(line, policy(VariantMode::kSampled, 3, 7), shipped(), lex);
  EXPECT_EQ(a, b);
  ASSERT_EQ(a.size(), 3u);
  std::set<std::string> distinct;
  for (const auto& r : a) distinct.insert(r.localized);
  EXPECT_EQ(distinct.size(), 3u);
}

TEST(Localize, OovIsAnError) {
  Lexicon lex = lexicon_for({"tôi"});
  EXPECT_VCS_ERROR(localize_sentence("tôi qwertyuiop", policy(VariantMode::kRank0), shipped(), lex),
                   ErrorCode::kOovEnglishWord);
}

TEST(Policy, Validation) {
  EXPECT_VCS_ERROR(policy(VariantMode::kRank0, 0).validate(), ErrorCode::kInvalidArgument);
  EXPECT_EQ(variant_mode_from_name("sampled"), VariantMode::kSampled);
  EXPECT_FALSE(variant_mode_from_name("all").has_value());
}

TEST(Corpus, OrderRejectsAndParallelism) {
  std::vector<std::string> lines = {"xem cái video này", "", "tôi thích qwertyuiop",
                                    "check email đi", "hôm nay trời đẹp"};
  Lexicon lex = lexicon_for(lines);
  auto serial = build_p2t_corpus(lines, policy(VariantMode::kExhaustive, 2), shipped(), lex, 1);
  auto parallel = build_p2t_corpus(lines, policy(VariantMode::kExhaustive, 2), shipped(), lex, 4);
  EXPECT_EQ(serial.records, parallel.records);
  ASSERT_EQ(serial.rejects.size(), 1u);
  EXPECT_EQ(serial.rejects[0].line_no, 3u);
  EXPECT_NE(serial.rejects[0].reason.find("OOVEnglishWord"), std::string::npos);
  ASSERT_GE(serial.records.size(), 3u);
  EXPECT_EQ(serial.records.front().reference, "xem cái video này");
  EXPECT_EQ(serial.records.back().reference, "hôm nay trời đẹp");
  for (std::size_t i = 1; i < serial.records.size(); ++i) {
    EXPECT_LT(serial.records[i - 1].id, serial.records[i].id);
  }
}

TEST(Records, JsonRoundTrip) {
  Lexicon lex = lexicon_for({"xem cái video này"});
  auto recs = localize_sentence("xem cái video này", policy(VariantMode::kExhaustive, 3),
                                shipped(), lex);
  std::string content;
  for (const auto& r : recs) content += record_to_json(r) + "\n";
  EXPECT_EQ(parse_records(content, shipped().inventory), recs);
  EXPECT_EQ(record_to_json(recs[0]),
            "{\"id\":\"000000-00\",\"reference\":\"xem cái video này\",\"localized\":\"xem cái "
            "vi deo này\",\"phones\":\"s ɛ - 0 mz | k aː - 4 iz | v i - 0 | z ɛ - 0 uz | n a - 1 "
            "iz\",\"variant_choices\":{\"2\":0}}");
  EXPECT_EQ(reject_to_json({3, "OOVEnglishWord: x"}),
            "{\"line_no\":3,\"reason\":\"OOVEnglishWord: x\"}");
}

// An oracle lexicon with exactly the record's words decodes back to the reference.
TEST(Records, TargetPairingOnFixture) {
  std::vector<std::string> lines;
  const char* english[] = {"video", "email", "meeting", "laptop", "file", "check", "online",
                           "deadline", "coffee", "project"};
  const char* frames[] = {"tôi xem %s rồi", "gửi %s cho anh", "mai có %s không",
                          "%s này hay quá", "cho em cái %s", "chị đã %s chưa",
                          "bạn thích %s không", "hôm nay %s nhé", "đừng quên %s", "cái %s đâu"};
  for (const char* e : english) {
    for (const char* f : frames) {
      std::string s = f;
      s.replace(s.find("%s"), 2, e);
      lines.push_back(s);
    }
  }
  ASSERT_EQ(lines.size(), 100u);
  Lexicon full = lexicon_for(lines);
  auto built = build_p2t_corpus(lines, policy(VariantMode::kRank0), shipped(), full);
  ASSERT_TRUE(built.rejects.empty());
  for (const CsRecord& r : built.records) {
    Lexicon oracle = lexicon_for({r.reference});
    NGramModel lm = NGramModel::train({text::join(text::normalize_words(r.reference), " ")}, 3);
    Decoder d(oracle, lm, shipped().orthography, shipped().g2p);
    EXPECT_EQ(d.decode(r.phones).front().text,
              text::join(text::normalize_words(r.reference), " "));
  }
}

TEST(Pipeline, CleanRoundTripAndDeterminism) {
  std::vector<std::string> lines = {"xem cái video này", "tối nay có party ở office nhé",
                                    "cho tôi cái list"};
  Lexicon lex = lexicon_for(lines);
  NGramModel lm = NGramModel::train(lm_training_text(lines), 3);
  PipelineConfig cfg;
  cfg.noise = with_rates(shipped().noise, 0, 0, 0);
  auto res = run_pipeline(lines, shipped(), lex, lm, cfg);
  EXPECT_EQ(res.report.wer(), 0.0);
  EXPECT_EQ(res.report.per(), 0.0);
  EXPECT_EQ(res.rows.size(), 3u);

  cfg.noise = shipped().noise;
  cfg.seed = 5;
  auto a = run_pipeline(lines, shipped(), lex, lm, cfg);
  cfg.jobs = 3;
  auto b = run_pipeline(lines, shipped(), lex, lm, cfg);
  EXPECT_EQ(a.report.to_json(), b.report.to_json());
  for (std::size_t i = 0; i < a.rows.size(); ++i) EXPECT_EQ(a.rows[i].noisy, b.rows[i].noisy);
  EXPECT_NE(record_seed(5, 0), record_seed(5, 1));
}

}  // namespace
}  // namespace vietcs
