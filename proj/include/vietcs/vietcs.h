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

/* C interface to the vietcs library.
 *
 * Every function returns a vcs_status. On failure, vcs_last_error() gives a
 * message for the calling thread. Strings returned through char** outputs are
 * owned by the caller and released with vcs_string_free. Handles are opaque
 * and released with their matching *_free / *_close function. */

#ifndef VIETCS_VIETCS_H_
#define VIETCS_VIETCS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(VIETCS_BUILDING_LIBRARY)
#define VCS_API __declspec(dllexport)
#else
#define VCS_API __declspec(dllimport)
#endif
#else
#define VCS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vcs_status {
  VCS_OK = 0,
  VCS_ERR_INVALID_ARGUMENT = 1,
  VCS_ERR_DATA_FILE = 2,
  VCS_ERR_UNKNOWN_TOKEN = 10,
  VCS_ERR_MALFORMED_SYLLABLE = 11,
  VCS_ERR_MULTIPLE_TONE_MARKS = 12,
  VCS_ERR_NOT_A_VIETNAMESE_SYLLABLE = 13,
  VCS_ERR_ILLEGAL_COMBINATION = 14,
  VCS_ERR_UNMAPPED_GRAPHEME = 15,
  VCS_ERR_OOV_ENGLISH_WORD = 16,
  VCS_ERR_UNSUPPORTED_SEGMENT = 17,
  VCS_ERR_UNMAPPED_CLUSTER = 18,
  VCS_ERR_UNMAPPED_RIME = 19,
  VCS_ERR_EMPTY_CORPUS = 20,
  VCS_ERR_IO = 30,
  VCS_ERR_INTERNAL = 99
} vcs_status;

typedef struct vcs_context vcs_context; /* data tables */
typedef struct vcs_lexicon vcs_lexicon;
typedef struct vcs_lm vcs_lm;
typedef struct vcs_noise vcs_noise;

typedef enum vcs_variant_mode {
  VCS_VARIANTS_RANK0 = 0,
  VCS_VARIANTS_EXHAUSTIVE = 1,
  VCS_VARIANTS_SAMPLED = 2
} vcs_variant_mode;

typedef struct vcs_policy {
  vcs_variant_mode mode;
  size_t max_variants_per_sentence;
  uint64_t seed;
} vcs_policy;

typedef struct vcs_decode_config {
  size_t beam_width;
  int fuzzy_k;
  double lm_weight;
  double fuzzy_penalty;
  double fallback_penalty;
  size_t max_span;
} vcs_decode_config;

VCS_API const char* vcs_version(void);
VCS_API const char* vcs_last_error(void);
VCS_API const char* vcs_status_name(vcs_status status);
VCS_API void vcs_string_free(char* s);

VCS_API vcs_policy vcs_policy_default(void);
VCS_API vcs_decode_config vcs_decode_config_default(void);

/* data_dir may be NULL for the built-in location; dialect is "north" (NULL)
 * or "north-strict". */
VCS_API vcs_status vcs_context_open(const char* data_dir, const char* dialect, vcs_context** out);
VCS_API void vcs_context_close(vcs_context* ctx);

/* Canonical form of a phone string ("ə - 0 iz . ..."). */
VCS_API vcs_status vcs_parse_phones(const vcs_context* ctx, const char* phones, char** out);

/* JSON array describing each whitespace token: onset, medial, nucleus, coda,
 * tone, or an error for tokens that are not Vietnamese syllables. */
VCS_API vcs_status vcs_analyze(const vcs_context* ctx, const char* text, char** out_json);

/* Phones of a sentence. English words need a lexicon (may be NULL otherwise). */
VCS_API vcs_status vcs_g2p(const vcs_context* ctx, const vcs_lexicon* lex, const char* text,
                           char** out_phones);

/* JSON array of {"text","rank","phones"}. ipa may be NULL to use the
 * pronouncing dictionary; max_variants 0 means the default. */
VCS_API vcs_status vcs_adapt(const vcs_context* ctx, const char* word, const char* ipa,
                             size_t max_variants, char** out_json);

/* Lexicon over every word of `corpus` (newline-separated sentences), plus the
 * whole pronouncing dictionary when include_dictionary is non-zero. */
VCS_API vcs_status vcs_lexicon_build(const vcs_context* ctx, const char* corpus,
                                     int include_dictionary, size_t max_variants,
                                     vcs_lexicon** out);
VCS_API vcs_status vcs_lexicon_load(const vcs_context* ctx, const char* path, vcs_lexicon** out);
VCS_API vcs_status vcs_lexicon_save(const vcs_lexicon* lex, const char* path);
VCS_API size_t vcs_lexicon_size(const vcs_lexicon* lex);
VCS_API void vcs_lexicon_free(vcs_lexicon* lex);

/* Trains on newline-separated sentences (normalized before counting). */
VCS_API vcs_status vcs_lm_train(const char* corpus, int order, vcs_lm** out);
VCS_API vcs_status vcs_lm_load(const char* path, vcs_lm** out);
VCS_API vcs_status vcs_lm_save(const vcs_lm* lm, const char* path);
/* history is space-separated, most recent word last. */
VCS_API vcs_status vcs_lm_prob(const vcs_lm* lm, const char* word, const char* history,
                               double* out);
VCS_API void vcs_lm_free(vcs_lm* lm);

VCS_API vcs_status vcs_noise_default(const vcs_context* ctx, vcs_noise** out);
VCS_API vcs_status vcs_noise_load(const vcs_context* ctx, const char* path, vcs_noise** out);
VCS_API vcs_status vcs_noise_set_rates(vcs_noise* noise, double sub, double ins, double del);
VCS_API vcs_status vcs_noise_get_rates(const vcs_noise* noise, double* sub, double* ins,
                                       double* del);
VCS_API void vcs_noise_free(vcs_noise* noise);

/* Records as JSON lines. */
VCS_API vcs_status vcs_localize(const vcs_context* ctx, const vcs_lexicon* lex,
                                const char* sentence, const vcs_policy* policy, char** out_jsonl);
VCS_API vcs_status vcs_build_dataset(const vcs_context* ctx, const vcs_lexicon* lex,
                                     const char* corpus, const vcs_policy* policy, size_t jobs,
                                     char** out_records, char** out_rejects);

VCS_API vcs_status vcs_corrupt(const vcs_context* ctx, const vcs_noise* noise, const char* phones,
                               uint64_t seed, char** out_phones);
/* Replaces the phones of each record; record i uses a seed derived from (seed, i). */
VCS_API vcs_status vcs_corrupt_records(const vcs_context* ctx, const vcs_noise* noise,
                                       const char* records, uint64_t seed, char** out_records);

/* JSON array of the n best {"text","score","edits"}. */
VCS_API vcs_status vcs_decode(const vcs_context* ctx, const vcs_lexicon* lex, const vcs_lm* lm,
                              const vcs_decode_config* cfg, const char* phones, size_t nbest,
                              char** out_json);
/* "id<TAB>hypothesis" lines, one per record, in input order. */
VCS_API vcs_status vcs_decode_records(const vcs_context* ctx, const vcs_lexicon* lex,
                                      const vcs_lm* lm, const vcs_decode_config* cfg,
                                      const char* records, size_t jobs, char** out_tsv);

/* Scores line-aligned references and hypotheses. Lines may be plain text,
 * "id<TAB>text", or JSON records (the reference field is used). */
VCS_API vcs_status vcs_eval(const char* refs, const char* hyps, int as_json, char** out_report);

/* End to end on newline-separated gold sentences. lex and lm may be NULL to
 * build them from the input itself. out_rows (optional) receives one JSON
 * object per record. */
VCS_API vcs_status vcs_pipeline(const vcs_context* ctx, const vcs_lexicon* lex, const vcs_lm* lm,
                                const char* corpus, const vcs_policy* policy,
                                const vcs_noise* noise, const vcs_decode_config* cfg,
                                uint64_t seed, size_t jobs, int as_json, char** out_report,
                                char** out_rows);

#ifdef __cplusplus
}
#endif

#endif /* VIETCS_VIETCS_H_ */
