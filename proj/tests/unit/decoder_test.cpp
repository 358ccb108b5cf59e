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

#include <functional>
#include <random>

#include "support.hpp"
#include "vietcs/decoder.hpp"
#include "vietcs/lexicon.hpp"
#include "vietcs/text.hpp"

namespace vietcs {
namespace {

using testing::phones;
using testing::shipped;

const Orthography& orth() { return shipped().orthography; }
const G2P& g2p() { return shipped().g2p; }

Lexicon lit_list_lexicon() {
  return build_lexicon({{"cho", Language::kVietnamese, {}},
                        {"tôi", Language::kVietnamese, {}},
                        {"cái", Language::kVietnamese, {}},
                        {"một", Language::kVietnamese, {}},
                        {"lít", Language::kVietnamese, {}},
                        {"nước", Language::kVietnamese, {}},
                        {"list", Language::kEnglish, {"lít"}}},
                       orth(), g2p());
}

PhoneSequence to_phones(const std::string& text, const Lexicon& lex) {
  return text_to_phones(text, orth(), g2p(), lex);
}

TEST(EditDistance, Tokens) {
  EXPECT_EQ(token_edit_distance({"a", "b"}, {"a", "b"}, 2), 0);
  EXPECT_EQ(token_edit_distance({"a", "b"}, {"a", "c"}, 2), 1);
  EXPECT_EQ(token_edit_distance({"a"}, {"b", "c", "d"}, 5), 3);
  EXPECT_GT(token_edit_distance({"a"}, {"b", "c", "d"}, 1), 1);
}

TEST(Decoder, EmptyInput) {
  Lexicon lex = lit_list_lexicon();
  NGramModel lm = NGramModel::train({"cho tôi cái list"}, 2);
  Decoder d(lex, lm, orth(), g2p());
  auto out = d.decode(PhoneSequence{});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].text, "");
  EXPECT_EQ(out[0].score, 0.0);
}

TEST(Decoder, ContextPicksHomophone) {
  Lexicon lex = lit_list_lexicon();
  NGramModel lm =
      NGramModel::train({"cho tôi cái list", "cho tôi cái list", "cho tôi một lít nước",
                         "một lít nước", "cái list"},
                        3);
  Decoder d(lex, lm, orth(), g2p());
  EXPECT_EQ(d.decode(to_phones("cho tôi cái lít", lex)).front().text, "cho tôi cái list");
  EXPECT_EQ(d.decode(to_phones("một lít nước", lex)).front().text, "một lít nước");
}

TEST(Decoder, CleanVietnameseExact) {
  Lexicon lex = build_lexicon({{"hôm", Language::kVietnamese, {}},
                               {"nay", Language::kVietnamese, {}},
                               {"trời", Language::kVietnamese, {}},
                               {"đẹp", Language::kVietnamese, {}},
                               {"quá", Language::kVietnamese, {}}},
                              orth(), g2p());
  NGramModel lm = NGramModel::train({"hôm nay trời đẹp quá"}, 3);
  DecodeConfig cfg;
  cfg.fuzzy_k = 0;
  Decoder d(lex, lm, orth(), g2p(), cfg);
  auto out = d.decode(to_phones("hôm nay trời đẹp quá", lex));
  EXPECT_EQ(out.front().text, "hôm nay trời đẹp quá");
  EXPECT_TRUE(std::isfinite(out.front().score));
}

TEST(Decoder, FallbackKeepsDecodingTotal) {
  Lexicon lex = build_lexicon({{"tôi", Language::kVietnamese, {}}}, orth(), g2p());
  NGramModel lm = NGramModel::train({"tôi"}, 2);
  DecodeConfig cfg;
  cfg.fuzzy_k = 0;
  Decoder d(lex, lm, orth(), g2p(), cfg);
  auto out = d.decode(phones("t o - 0 iz | x ɔ - 2 | b ə - 4 tz"));
  EXPECT_EQ(out.front().text, "tôi khỏ bất");
}

TEST(Decoder, FuzzyMatchRepairsOneEdit) {
  Lexicon lex = lit_list_lexicon();
  NGramModel lm = NGramModel::train({"cho tôi cái list"}, 2);
  Decoder d(lex, lm, orth(), g2p());
  // Tone of "tôi" corrupted from 0 to 2.
  auto out = d.decode(phones("c ɔ - 0 | t o - 2 iz | k aː - 4 iz | l i - 4 tz"));
  EXPECT_EQ(out.front().text, "cho tôi cái list");
  EXPECT_EQ(out.front().edits, 1);
}

TEST(Decoder, MultiSyllableWords) {
  Lexicon lex = build_lexicon({{"xem", Language::kVietnamese, {}},
                               {"video", Language::kEnglish, {"vi deo", "vi đêu", "vi đê ô"}}},
                              orth(), g2p());
  NGramModel lm = NGramModel::train({"xem video"}, 2);
  Decoder d(lex, lm, orth(), g2p());
  for (const char* spelled : {"xem vi deo", "xem vi đêu", "xem vi đê ô"}) {
    PhoneSequence p;
    for (const auto& w : text::split_whitespace(spelled)) {
      p.append_word(spelling_to_phones(w, orth(), g2p()));
    }
    EXPECT_EQ(d.decode(p).front().text, "xem video") << spelled;
  }
}

TEST(Decoder, ResultsSortedAndBounded) {
  Lexicon lex = lit_list_lexicon();
  NGramModel lm = NGramModel::train({"cho tôi cái list"}, 2);
  DecodeConfig cfg;
  cfg.beam_width = 3;
  Decoder d(lex, lm, orth(), g2p(), cfg);
  auto out = d.decode(to_phones("cho tôi cái lít", lex));
  ASSERT_LE(out.size(), 3u);
  for (std::size_t i = 1; i < out.size(); ++i) EXPECT_FALSE(better_result(out[i], out[i - 1]));
}

TEST(Decoder, ConfigValidation) {
  DecodeConfig cfg;
  cfg.beam_width = 0;
  EXPECT_VCS_ERROR(cfg.validate(), ErrorCode::kInvalidArgument);
  cfg = {};
  cfg.fuzzy_k = 3;
  EXPECT_VCS_ERROR(cfg.validate(), ErrorCode::kInvalidArgument);
  cfg = {};
  cfg.lm_weight = -1;
  EXPECT_VCS_ERROR(cfg.validate(), ErrorCode::kInvalidArgument);
}

// Scores every path through the candidate lattice and keeps the best.
DecodeResult brute_force(const Decoder& d, const PhoneSequence& p) {
  auto cands = d.candidates(p);
  std::optional<DecodeResult> best;
  std::vector<std::string> words;
  std::function<void(std::size_t, double, int)> walk = [&](std::size_t pos, double score,
                                                           int edits) {
    std::vector<std::string> history{"<s>"};
    history.insert(history.end(), words.begin(), words.end());
    if (pos == p.size()) {
      DecodeResult r{text::join(words, " "), score + d.final_score(history), edits};
      if (!best || better_result(r, *best)) best = r;
      return;
    }
    for (const WordCandidate& c : cands[pos]) {
      words.push_back(c.word);
      walk(pos + c.span, score + d.step_score(c, history), edits + c.edits);
      words.pop_back();
    }
  };
  walk(0, 0.0, 0);
  return *best;
}

TEST(Decoder, MatchesExhaustiveOracle) {
  std::vector<OrthoSyllable> grid = orth().legal_grid();
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    // Ten words of one or two syllables drawn from a small syllable pool so
    // that spans, homophones and fuzzy matches all occur.
    std::vector<std::string> pool;
    for (int i = 0; i < 5; ++i) pool.push_back(orth().compose(grid[rng() % grid.size()]));
    std::vector<WordSpec> words;
    std::vector<std::string> corpus;
    for (int i = 0; i < 10; ++i) {
      std::string w = pool[rng() % pool.size()];
      if (rng() % 2) w += " " + pool[rng() % pool.size()];
      words.push_back({w, Language::kVietnamese, {}});
      corpus.push_back(w);
    }
    Lexicon lex = build_lexicon(words, orth(), g2p());
    NGramModel lm = NGramModel::train(corpus, 2);
    DecodeConfig cfg;
    cfg.beam_width = 100000;
    cfg.fuzzy_k = static_cast<int>(rng() % 2);
    Decoder d(lex, lm, orth(), g2p(), cfg);
    PhoneSequence p;
    std::size_t n = 1 + rng() % 4;
    for (std::size_t i = 0; i < n; ++i) {
      SyllablePhones s = g2p().syllable_to_phones(orth().decompose(pool[rng() % pool.size()]));
      if (rng() % 3 == 0) s.tone = *tone_from_index(static_cast<int>(rng() % 6));
      p.append_word({s});
    }
    DecodeResult expected = brute_force(d, p);
    DecodeResult got = d.decode(p).front();
    EXPECT_EQ(got.text, expected.text);
    EXPECT_NEAR(got.score, expected.score, 1e-9);
    EXPECT_EQ(got.edits, expected.edits);
  }
}

TEST(DecodeCorpus, OrderAndParallelism) {
  Lexicon lex = lit_list_lexicon();
  NGramModel lm = NGramModel::train({"cho tôi cái list", "một lít nước"}, 2);
  Decoder d(lex, lm, orth(), g2p());
  std::vector<DecodeInput> inputs = {{"a", to_phones("cho tôi", lex)},
                                     {"b", to_phones("một lít nước", lex)},
                                     {"c", to_phones("cái lít", lex)}};
  auto serial = decode_corpus(inputs, d, 1);
  auto parallel = decode_corpus(inputs, d, 3);
  ASSERT_EQ(serial.size(), 3u);
  EXPECT_EQ(serial, parallel);
  EXPECT_EQ(serial[0].first, "a");
  EXPECT_EQ(serial[1].second, "một lít nước");
  EXPECT_EQ(serial[2].first, "c");
}

}  // namespace
}  // namespace vietcs
