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

#include <cstdio>
#include <filesystem>
#include <string>

#include "vietcs/vietcs.h"

namespace {

struct Str {
  char* p = nullptr;
  ~Str() { vcs_string_free(p); }
  std::string s() const { return p ? p : ""; }
};

class CApi : public ::testing::Test {
 protected:
  void SetUp() override { ASSERT_EQ(vcs_context_open(nullptr, nullptr, &ctx_), VCS_OK); }
  void TearDown() override { vcs_context_close(ctx_); }
  vcs_context* ctx_ = nullptr;
};

TEST_F(CApi, VersionAndNames) {
  EXPECT_STRNE(vcs_version(), "");
  EXPECT_STREQ(vcs_status_name(VCS_OK), "ok");
  EXPECT_STREQ(vcs_status_name(VCS_ERR_OOV_ENGLISH_WORD), "OOVEnglishWord");
}

TEST_F(CApi, G2pAnchor) {
  Str out;
  ASSERT_EQ(vcs_g2p(ctx_, nullptr, "ây", &out.p), VCS_OK);
  EXPECT_EQ(out.s(), "ə - 0 iz");
}

TEST_F(CApi, AdaptVideo) {
  Str out;
  ASSERT_EQ(vcs_adapt(ctx_, "video", nullptr, 0, &out.p), VCS_OK);
  EXPECT_NE(out.s().find("\"vi deo\""), std::string::npos);
  EXPECT_NE(out.s().find("\"vi đêu\""), std::string::npos);
  EXPECT_NE(out.s().find("\"vi đê ô\""), std::string::npos);
}

TEST_F(CApi, ErrorsCarryMessages) {
  Str out;
  EXPECT_EQ(vcs_parse_phones(ctx_, "q a - 0", &out.p), VCS_ERR_UNKNOWN_TOKEN);
  EXPECT_EQ(out.p, nullptr);
  EXPECT_NE(std::string(vcs_last_error()).find("'q'"), std::string::npos);
  EXPECT_EQ(vcs_g2p(ctx_, nullptr, "tôi thích list", &out.p), VCS_ERR_OOV_ENGLISH_WORD);
  EXPECT_EQ(vcs_adapt(ctx_, "qwertyuiop", nullptr, 0, &out.p), VCS_ERR_OOV_ENGLISH_WORD);
  EXPECT_EQ(vcs_g2p(nullptr, nullptr, "a", &out.p), VCS_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(vcs_lm_train("", 3, nullptr), VCS_ERR_INVALID_ARGUMENT);
  vcs_lm* lm = nullptr;
  EXPECT_EQ(vcs_lm_train("\n\n", 3, &lm), VCS_ERR_EMPTY_CORPUS);
  EXPECT_EQ(lm, nullptr);
  vcs_context* bad = nullptr;
  EXPECT_EQ(vcs_context_open("/nonexistent/dir", nullptr, &bad), VCS_ERR_DATA_FILE);
  EXPECT_EQ(vcs_context_open(nullptr, "klingon", &bad), VCS_ERR_INVALID_ARGUMENT);
}

TEST_F(CApi, LexiconLmDecode) {
  const char* corpus = "cho tôi cái list\ncho tôi cái list\nmột lít nước\n";
  vcs_lexicon* lex = nullptr;
  vcs_lm* lm = nullptr;
  ASSERT_EQ(vcs_lexicon_build(ctx_, corpus, 0, 0, &lex), VCS_OK);
  ASSERT_EQ(vcs_lm_train(corpus, 3, &lm), VCS_OK);
  EXPECT_GT(vcs_lexicon_size(lex), 5u);
  double p = 0;
  ASSERT_EQ(vcs_lm_prob(lm, "list", "tôi cái", &p), VCS_OK);
  EXPECT_GT(p, 0.5);

  vcs_decode_config cfg = vcs_decode_config_default();
  Str out;
  ASSERT_EQ(vcs_decode(ctx_, lex, lm, &cfg, "c ɔ - 0 | t o - 0 iz | k aː - 4 iz | l i - 4 tz", 2,
                       &out.p),
            VCS_OK);
  EXPECT_EQ(out.s().rfind("[{\"text\":\"cho tôi cái list\"", 0), 0u) << out.s();

  auto dir = std::filesystem::temp_directory_path() / "vietcs_capi_test";
  std::filesystem::create_directories(dir);
  std::string lex_path = (dir / "lex.tsv").string(), lm_path = (dir / "lm.txt").string();
  ASSERT_EQ(vcs_lexicon_save(lex, lex_path.c_str()), VCS_OK);
  ASSERT_EQ(vcs_lm_save(lm, lm_path.c_str()), VCS_OK);
  vcs_lexicon* lex2 = nullptr;
  vcs_lm* lm2 = nullptr;
  ASSERT_EQ(vcs_lexicon_load(ctx_, lex_path.c_str(), &lex2), VCS_OK);
  ASSERT_EQ(vcs_lm_load(lm_path.c_str(), &lm2), VCS_OK);
  EXPECT_EQ(vcs_lexicon_size(lex2), vcs_lexicon_size(lex));
  double p2 = 0;
  ASSERT_EQ(vcs_lm_prob(lm2, "list", "tôi cái", &p2), VCS_OK);
  EXPECT_DOUBLE_EQ(p, p2);
  vcs_lexicon_free(lex2);
  vcs_lm_free(lm2);
  std::filesystem::remove_all(dir);
  vcs_lexicon_free(lex);
  vcs_lm_free(lm);
}

TEST_F(CApi, DatasetCorruptDecodeEval) {
  const char* corpus = "xem cái video này\ntôi thích qwertyuiop\n";
  vcs_lexicon* lex = nullptr;
  ASSERT_EQ(vcs_lexicon_build(ctx_, "xem cái video này", 0, 0, &lex), VCS_OK);
  vcs_policy policy = vcs_policy_default();
  policy.mode = VCS_VARIANTS_EXHAUSTIVE;
  policy.max_variants_per_sentence = 3;
  Str records, rejects;
  ASSERT_EQ(vcs_build_dataset(ctx_, lex, corpus, &policy, 2, &records.p, &rejects.p), VCS_OK);
  EXPECT_NE(records.s().find("vi đê ô"), std::string::npos);
  EXPECT_NE(rejects.s().find("\"line_no\":2"), std::string::npos);

  vcs_noise* noise = nullptr;
  ASSERT_EQ(vcs_noise_default(ctx_, &noise), VCS_OK);
  double s = 0, i = 0, d = 0;
  ASSERT_EQ(vcs_noise_get_rates(noise, &s, &i, &d), VCS_OK);
  EXPECT_DOUBLE_EQ(s, 0.08);
  EXPECT_EQ(vcs_noise_set_rates(noise, 0.9, 0.9, 0), VCS_ERR_INVALID_ARGUMENT);
  ASSERT_EQ(vcs_noise_set_rates(noise, 0, 0, 0), VCS_OK);
  Str noisy;
  ASSERT_EQ(vcs_corrupt_records(ctx_, noise, records.s().c_str(), 1, &noisy.p), VCS_OK);
  EXPECT_EQ(noisy.s(), records.s());

  vcs_lm* lm = nullptr;
  ASSERT_EQ(vcs_lm_train("xem cái video này", 3, &lm), VCS_OK);
  vcs_decode_config cfg = vcs_decode_config_default();
  Str hyps;
  ASSERT_EQ(vcs_decode_records(ctx_, lex, lm, &cfg, records.s().c_str(), 2, &hyps.p), VCS_OK);
  EXPECT_EQ(hyps.s(),
            "000000-00\txem cái video này\n000000-01\txem cái video này\n"
            "000000-02\txem cái video này\n");
  Str report;
  ASSERT_EQ(vcs_eval(records.s().c_str(), hyps.s().c_str(), 0, &report.p), VCS_OK);
  EXPECT_NE(report.s().find("wer: 0"), std::string::npos) << report.s();
  EXPECT_EQ(vcs_eval("a\nb\n", "a\n", 0, &report.p), VCS_ERR_INVALID_ARGUMENT);

  Str pipe_report;
  ASSERT_EQ(vcs_pipeline(ctx_, nullptr, nullptr, "xem cái video này\n", &policy, noise, &cfg, 0, 1,
                         1, &pipe_report.p, nullptr),
            VCS_OK);
  EXPECT_NE(pipe_report.s().find("\"wer\":0"), std::string::npos) << pipe_report.s();
  vcs_noise_free(noise);
  vcs_lm_free(lm);
  vcs_lexicon_free(lex);
}

}  // namespace
