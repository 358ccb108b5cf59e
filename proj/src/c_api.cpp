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

#include "vietcs/vietcs.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vietcs/adapt.hpp"
#include "vietcs/dataset.hpp"
#include "vietcs/decoder.hpp"
#include "vietcs/error.hpp"
#include "vietcs/lexicon.hpp"
#include "vietcs/metrics.hpp"
#include "vietcs/ngram.hpp"
#include "vietcs/noise.hpp"
#include "vietcs/pipeline.hpp"
#include "vietcs/resources.hpp"
#include "vietcs/text.hpp"

struct vcs_context {
  vietcs::Resources resources;
};
struct vcs_lexicon {
  vietcs::Lexicon lexicon;
};
struct vcs_lm {
  vietcs::NGramModel model;
};
struct vcs_noise {
  vietcs::ConfusionModel model;
};

namespace {

using json = nlohmann::ordered_json;

thread_local std::string g_last_error;

vcs_status fail(vcs_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
vcs_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    body();
    return VCS_OK;
  } catch (const vietcs::Error& e) {
    return fail(static_cast<vcs_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(VCS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(VCS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(VCS_ERR_INTERNAL, "unknown exception");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw vietcs::Error(vietcs::ErrorCode::kInvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

std::vector<std::string> lines_of(const char* content) {
  std::vector<std::string> out;
  std::istringstream in{std::string(content)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(std::move(line));
  }
  return out;
}

vietcs::VariantPolicy to_policy(const vcs_policy* p) {
  vietcs::VariantPolicy out;
  if (!p) return out;
  switch (p->mode) {
    case VCS_VARIANTS_RANK0: out.mode = vietcs::VariantMode::kRank0; break;
    case VCS_VARIANTS_EXHAUSTIVE: out.mode = vietcs::VariantMode::kExhaustive; break;
    case VCS_VARIANTS_SAMPLED: out.mode = vietcs::VariantMode::kSampled; break;
    default: require(false, "unknown variant mode");
  }
  out.max_variants_per_sentence = p->max_variants_per_sentence;
  out.seed = p->seed;
  return out;
}

vietcs::DecodeConfig to_decode_config(const vcs_decode_config* c) {
  vietcs::DecodeConfig out;
  if (!c) return out;
  out.beam_width = c->beam_width;
  out.fuzzy_k = c->fuzzy_k;
  out.lm_weight = c->lm_weight;
  out.fuzzy_penalty = c->fuzzy_penalty;
  out.fallback_penalty = c->fallback_penalty;
  out.max_span = c->max_span;
  return out;
}

vietcs::AdaptOptions adapt_options(size_t max_variants) {
  vietcs::AdaptOptions opts;
  if (max_variants > 0) opts.max_variants = max_variants;
  return opts;
}

std::string joined_records(const std::vector<vietcs::CsRecord>& records) {
  std::string out;
  for (const auto& r : records) out += vietcs::record_to_json(r) + "\n";
  return out;
}

// Text of one line of an evaluation file.
std::string eval_text(const std::string& line) {
  std::string_view body = vietcs::text::trim(line);
  if (!body.empty() && body.front() == '{') {
    try {
      return json::parse(body).at("reference").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw vietcs::Error(vietcs::ErrorCode::kDataFile, std::string("bad record: ") + e.what());
    }
  }
  std::size_t tab = line.find('\t');
  return tab == std::string::npos ? line : line.substr(tab + 1);
}

}  // namespace

extern "C" {

const char* vcs_version(void) { return "0.1.0"; }

const char* vcs_last_error(void) { return g_last_error.c_str(); }

const char* vcs_status_name(vcs_status status) {
  switch (status) {
    case VCS_OK: return "ok";
    case VCS_ERR_IO: return "io";
    case VCS_ERR_INTERNAL: return "internal";
    default: break;
  }
  std::string_view name = vietcs::error_code_name(static_cast<vietcs::ErrorCode>(status));
  return name.data();
}

void vcs_string_free(char* s) { std::free(s); }

vcs_policy vcs_policy_default(void) {
  vietcs::VariantPolicy p;
  return vcs_policy{VCS_VARIANTS_RANK0, p.max_variants_per_sentence, p.seed};
}

vcs_decode_config vcs_decode_config_default(void) {
  vietcs::DecodeConfig c;
  return vcs_decode_config{c.beam_width,    c.fuzzy_k,          c.lm_weight,
                           c.fuzzy_penalty, c.fallback_penalty, c.max_span};
}

vcs_status vcs_context_open(const char* data_dir, const char* dialect, vcs_context** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    *out = nullptr;
    vietcs::Dialect d = vietcs::Dialect::kNorth;
    if (dialect) {
      auto parsed = vietcs::dialect_from_name(dialect);
      require(parsed.has_value(), "unknown dialect");
      d = *parsed;
    }
    auto ctx = std::make_unique<vcs_context>();
    ctx->resources = data_dir ? vietcs::Resources::load(data_dir, d)
                              : vietcs::Resources::load_default(d);
    *out = ctx.release();
  });
}

void vcs_context_close(vcs_context* ctx) { delete ctx; }

vcs_status vcs_parse_phones(const vcs_context* ctx, const char* phones, char** out) {
  return guarded([&] {
    require(ctx && phones && out, "null argument");
    auto seq = vietcs::parse_phone_sequence(phones, ctx->resources.inventory);
    vietcs::validate(seq, ctx->resources.inventory);
    *out = dup_string(vietcs::serialize_phone_sequence(seq));
  });
}

vcs_status vcs_analyze(const vcs_context* ctx, const char* text, char** out_json) {
  return guarded([&] {
    require(ctx && text && out_json, "null argument");
    const auto& r = ctx->resources;
    json arr = json::array();
    for (const std::string& tok : vietcs::text::split_whitespace(text)) {
      json j;
      j["token"] = tok;
      std::string word = vietcs::text::strip_punctuation(vietcs::text::lowercase(tok));
      try {
        vietcs::OrthoSyllable s = r.orthography.decompose(word);
        j["onset"] = s.onset;
        j["medial"] = s.medial;
        j["nucleus"] = s.nucleus;
        j["coda"] = s.coda;
        j["tone"] = vietcs::tone_index(s.tone);
        j["tone_name"] = std::string(vietcs::tone_name(s.tone));
        j["phones"] = vietcs::serialize_syllable(r.g2p.syllable_to_phones(s));
      } catch (const vietcs::Error& e) {
        j["error"] = std::string(vietcs::error_code_name(e.code()));
        j["message"] = e.what();
      }
      arr.push_back(std::move(j));
    }
    *out_json = dup_string(arr.dump());
  });
}

vcs_status vcs_g2p(const vcs_context* ctx, const vcs_lexicon* lex, const char* text,
                   char** out_phones) {
  return guarded([&] {
    require(ctx && text && out_phones, "null argument");
    static const vietcs::Lexicon kEmpty;
    const auto& r = ctx->resources;
    auto seq = vietcs::text_to_phones(text, r.orthography, r.g2p, lex ? lex->lexicon : kEmpty);
    *out_phones = dup_string(vietcs::serialize_phone_sequence(seq));
  });
}

vcs_status vcs_adapt(const vcs_context* ctx, const char* word, const char* ipa,
                     size_t max_variants, char** out_json) {
  return guarded([&] {
    require(ctx && word && out_json, "null argument");
    const auto& r = ctx->resources;
    std::vector<vietcs::VariantPronunciation> variants;
    if (ipa) {
      vietcs::IpaWord w{vietcs::text::lowercase(word), r.adapter.tokenize_ipa(ipa)};
      variants = r.adapter.adapt_word(w, r.orthography, adapt_options(max_variants));
    } else {
      variants = r.adapt(word, adapt_options(max_variants));
    }
    json arr = json::array();
    for (const auto& v : variants) {
      std::vector<vietcs::SyllablePhones> phones;
      for (const auto& s : v.syllables) phones.push_back(r.g2p.syllable_to_phones(s));
      arr.push_back({{"text", v.text}, {"rank", v.rank}, {"phones", vietcs::phone_key(phones)}});
    }
    *out_json = dup_string(arr.dump());
  });
}

vcs_status vcs_lexicon_build(const vcs_context* ctx, const char* corpus, int include_dictionary,
                             size_t max_variants, vcs_lexicon** out) {
  return guarded([&] {
    require(ctx && out, "null argument");
    *out = nullptr;
    const auto& r = ctx->resources;
    auto lex = std::make_unique<vcs_lexicon>();
    std::vector<std::string> lines = corpus ? lines_of(corpus) : std::vector<std::string>{};
    lex->lexicon = r.corpus_lexicon(lines, adapt_options(max_variants));
    if (include_dictionary) {
      vietcs::Lexicon dict = r.dictionary_lexicon(adapt_options(max_variants));
      for (const auto& e : dict.entries()) lex->lexicon.add(e);
    }
    *out = lex.release();
  });
}

vcs_status vcs_lexicon_load(const vcs_context* ctx, const char* path, vcs_lexicon** out) {
  return guarded([&] {
    require(ctx && path && out, "null argument");
    *out = nullptr;
    auto lex = std::make_unique<vcs_lexicon>();
    lex->lexicon = vietcs::Lexicon::load(path, ctx->resources.inventory);
    *out = lex.release();
  });
}

vcs_status vcs_lexicon_save(const vcs_lexicon* lex, const char* path) {
  return guarded([&] {
    require(lex && path, "null argument");
    lex->lexicon.save(path);
  });
}

size_t vcs_lexicon_size(const vcs_lexicon* lex) { return lex ? lex->lexicon.size() : 0; }

void vcs_lexicon_free(vcs_lexicon* lex) { delete lex; }

vcs_status vcs_lm_train(const char* corpus, int order, vcs_lm** out) {
  return guarded([&] {
    require(corpus && out, "null argument");
    *out = nullptr;
    auto lm = std::make_unique<vcs_lm>();
    lm->model = vietcs::NGramModel::train(vietcs::lm_training_text(lines_of(corpus)), order);
    *out = lm.release();
  });
}

vcs_status vcs_lm_load(const char* path, vcs_lm** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = nullptr;
    auto lm = std::make_unique<vcs_lm>();
    lm->model = vietcs::NGramModel::load(path);
    *out = lm.release();
  });
}

vcs_status vcs_lm_save(const vcs_lm* lm, const char* path) {
  return guarded([&] {
    require(lm && path, "null argument");
    lm->model.save(path);
  });
}

vcs_status vcs_lm_prob(const vcs_lm* lm, const char* word, const char* history, double* out) {
  return guarded([&] {
    require(lm && word && out, "null argument");
    std::vector<std::string> h{std::string(vietcs::kSentenceStart)};
    if (history) {
      for (std::string& w : vietcs::text::split_whitespace(history)) h.push_back(std::move(w));
    }
    *out = lm->model.prob(word, h);
  });
}

void vcs_lm_free(vcs_lm* lm) { delete lm; }

vcs_status vcs_noise_default(const vcs_context* ctx, vcs_noise** out) {
  return guarded([&] {
    require(ctx && out, "null argument");
    *out = new vcs_noise{ctx->resources.noise};
  });
}

vcs_status vcs_noise_load(const vcs_context* ctx, const char* path, vcs_noise** out) {
  return guarded([&] {
    require(ctx && path && out, "null argument");
    *out = nullptr;
    auto model = vietcs::ConfusionModel::load(path);
    model.validate(ctx->resources.inventory);
    *out = new vcs_noise{std::move(model)};
  });
}

vcs_status vcs_noise_set_rates(vcs_noise* noise, double sub, double ins, double del) {
  return guarded([&] {
    require(noise != nullptr, "null argument");
    auto updated = vietcs::with_rates(noise->model, sub, ins, del);
    require(sub >= 0 && ins >= 0 && del >= 0 && sub <= 1 && ins <= 1 && del <= 1 &&
                sub + ins + del <= 1.0 + 1e-12,
            "noise rates must lie in [0,1] and sum to at most 1");
    noise->model = std::move(updated);
  });
}

vcs_status vcs_noise_get_rates(const vcs_noise* noise, double* sub, double* ins, double* del) {
  return guarded([&] {
    require(noise && sub && ins && del, "null argument");
    *sub = noise->model.sub_rate;
    *ins = noise->model.ins_rate;
    *del = noise->model.del_rate;
  });
}

void vcs_noise_free(vcs_noise* noise) { delete noise; }

vcs_status vcs_localize(const vcs_context* ctx, const vcs_lexicon* lex, const char* sentence,
                        const vcs_policy* policy, char** out_jsonl) {
  return guarded([&] {
    require(ctx && lex && sentence && out_jsonl, "null argument");
    auto records = vietcs::localize_sentence(sentence, to_policy(policy), ctx->resources,
                                             lex->lexicon);
    *out_jsonl = dup_string(joined_records(records));
  });
}

vcs_status vcs_build_dataset(const vcs_context* ctx, const vcs_lexicon* lex, const char* corpus,
                             const vcs_policy* policy, size_t jobs, char** out_records,
                             char** out_rejects) {
  return guarded([&] {
    require(ctx && lex && corpus && out_records, "null argument");
    auto built = vietcs::build_p2t_corpus(lines_of(corpus), to_policy(policy), ctx->resources,
                                          lex->lexicon, jobs);
    std::string rejects;
    for (const auto& r : built.rejects) rejects += vietcs::reject_to_json(r) + "\n";
    char* records = dup_string(joined_records(built.records));
    if (out_rejects) {
      try {
        *out_rejects = dup_string(rejects);
      } catch (...) {
        std::free(records);
        throw;
      }
    }
    *out_records = records;
  });
}

vcs_status vcs_corrupt(const vcs_context* ctx, const vcs_noise* noise, const char* phones,
                       uint64_t seed, char** out_phones) {
  return guarded([&] {
    require(ctx && noise && phones && out_phones, "null argument");
    const auto& inv = ctx->resources.inventory;
    vietcs::PhoneSequence seq;
    if (!vietcs::text::trim(phones).empty()) seq = vietcs::parse_phone_sequence(phones, inv);
    auto noisy = vietcs::corrupt(seq, noise->model, inv, seed);
    *out_phones = dup_string(vietcs::serialize_phone_sequence(noisy));
  });
}

vcs_status vcs_corrupt_records(const vcs_context* ctx, const vcs_noise* noise, const char* records,
                               uint64_t seed, char** out_records) {
  return guarded([&] {
    require(ctx && noise && records && out_records, "null argument");
    const auto& inv = ctx->resources.inventory;
    auto parsed = vietcs::parse_records(records, inv);
    for (std::size_t i = 0; i < parsed.size(); ++i) {
      parsed[i].phones =
          vietcs::corrupt(parsed[i].phones, noise->model, inv, vietcs::record_seed(seed, i));
    }
    *out_records = dup_string(joined_records(parsed));
  });
}

vcs_status vcs_decode(const vcs_context* ctx, const vcs_lexicon* lex, const vcs_lm* lm,
                      const vcs_decode_config* cfg, const char* phones, size_t nbest,
                      char** out_json) {
  return guarded([&] {
    require(ctx && lex && lm && phones && out_json, "null argument");
    const auto& r = ctx->resources;
    vietcs::PhoneSequence seq;
    if (!vietcs::text::trim(phones).empty()) seq = vietcs::parse_phone_sequence(phones, r.inventory);
    vietcs::Decoder decoder(lex->lexicon, lm->model, r.orthography, r.g2p, to_decode_config(cfg));
    auto results = decoder.decode(seq);
    if (nbest > 0 && results.size() > nbest) results.resize(nbest);
    json arr = json::array();
    for (const auto& res : results) {
      arr.push_back({{"text", res.text}, {"score", res.score}, {"edits", res.edits}});
    }
    *out_json = dup_string(arr.dump());
  });
}

vcs_status vcs_decode_records(const vcs_context* ctx, const vcs_lexicon* lex, const vcs_lm* lm,
                              const vcs_decode_config* cfg, const char* records, size_t jobs,
                              char** out_tsv) {
  return guarded([&] {
    require(ctx && lex && lm && records && out_tsv, "null argument");
    const auto& r = ctx->resources;
    std::vector<vietcs::DecodeInput> inputs;
    for (auto& rec : vietcs::parse_records(records, r.inventory)) {
      inputs.push_back({rec.id, std::move(rec.phones)});
    }
    vietcs::Decoder decoder(lex->lexicon, lm->model, r.orthography, r.g2p, to_decode_config(cfg));
    std::string out;
    for (const auto& [id, hyp] : vietcs::decode_corpus(inputs, decoder, jobs)) {
      out += id + "\t" + hyp + "\n";
    }
    *out_tsv = dup_string(out);
  });
}

vcs_status vcs_eval(const char* refs, const char* hyps, int as_json, char** out_report) {
  return guarded([&] {
    require(refs && hyps && out_report, "null argument");
    std::vector<std::string> r = lines_of(refs), h = lines_of(hyps);
    if (r.size() != h.size()) {
      throw vietcs::Error(vietcs::ErrorCode::kInvalidArgument,
                          "reference has " + std::to_string(r.size()) + " lines, hypothesis " +
                              std::to_string(h.size()));
    }
    vietcs::CorpusScorer scorer;
    for (std::size_t i = 0; i < r.size(); ++i) scorer.add_text(eval_text(r[i]), eval_text(h[i]));
    *out_report = dup_string(as_json ? scorer.report().to_json() + "\n" : scorer.report().to_text());
  });
}

vcs_status vcs_pipeline(const vcs_context* ctx, const vcs_lexicon* lex, const vcs_lm* lm,
                        const char* corpus, const vcs_policy* policy, const vcs_noise* noise,
                        const vcs_decode_config* cfg, uint64_t seed, size_t jobs, int as_json,
                        char** out_report, char** out_rows) {
  return guarded([&] {
    require(ctx && corpus && out_report, "null argument");
    const auto& r = ctx->resources;
    std::vector<std::string> lines = lines_of(corpus);
    vietcs::Lexicon own_lex;
    if (!lex) own_lex = r.corpus_lexicon(lines);
    vietcs::NGramModel own_lm;
    if (!lm) own_lm = vietcs::NGramModel::train(vietcs::lm_training_text(lines), 3);

    vietcs::PipelineConfig config;
    config.policy = to_policy(policy);
    config.noise = noise ? noise->model : r.noise;
    config.decode = to_decode_config(cfg);
    config.seed = seed;
    config.jobs = jobs;
    auto result = vietcs::run_pipeline(lines, r, lex ? lex->lexicon : own_lex,
                                       lm ? lm->model : own_lm, config);

    std::string report;
    if (as_json) {
      auto j = nlohmann::ordered_json::parse(result.report.to_json());
      j["rejects"] = nlohmann::ordered_json::array();
      for (const auto& rej : result.rejects) {
        j["rejects"].push_back({{"line_no", rej.line_no}, {"reason", rej.reason}});
      }
      report = j.dump() + "\n";
    } else {
      report = result.report.to_text();
      for (const auto& rej : result.rejects) {
        report += "rejected: line " + std::to_string(rej.line_no) + " " + rej.reason + "\n";
      }
    }
    char* report_out = dup_string(report);
    if (out_rows) {
      std::string rows;
      for (const auto& row : result.rows) {
        json j;
        j["id"] = row.id;
        j["reference"] = row.reference;
        j["localized"] = row.localized;
        j["hypothesis"] = row.hypothesis;
        j["gold"] = vietcs::serialize_phone_sequence(row.gold);
        j["noisy"] = vietcs::serialize_phone_sequence(row.noisy);
        j["substitutions"] = row.stats.substitutions;
        j["insertions"] = row.stats.insertions;
        j["deletions"] = row.stats.deletions;
        rows += j.dump() + "\n";
      }
      try {
        *out_rows = dup_string(rows);
      } catch (...) {
        std::free(report_out);
        throw;
      }
    }
    *out_report = report_out;
  });
}

}  // extern "C"
