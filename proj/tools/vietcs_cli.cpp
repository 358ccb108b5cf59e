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

// vietcs command-line front end. Every subcommand is a thin shell over the C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vietcs/vietcs.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

// Raised for data problems; carries the message printed before exiting with 2.
struct DataError {
  std::string message;
};

struct UsageError {
  std::string message;
};

void check(vcs_status status, const std::string& what) {
  if (status == VCS_OK) return;
  std::string msg = what + ": " + vcs_last_error();
  if (status == VCS_ERR_INVALID_ARGUMENT) throw UsageError{msg};
  throw DataError{msg};
}

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { vcs_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(ptr); }
};

using Context = Handle<vcs_context, vcs_context_close>;
using LexiconHandle = Handle<vcs_lexicon, vcs_lexicon_free>;
using LmHandle = Handle<vcs_lm, vcs_lm_free>;
using NoiseHandle = Handle<vcs_noise, vcs_noise_free>;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError{"cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError{"cannot write '" + path + "'"};
  out << content;
}

struct Globals {
  std::string data_dir;
  std::string dialect = "north";
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::string output;
};

struct PolicyFlags {
  std::string mode = "rank0";
  std::size_t max_variants = 4;
};

struct NoiseFlags {
  std::string profile;
  std::optional<double> sub, ins, del;
};

struct DecodeFlags {
  vcs_decode_config cfg = vcs_decode_config_default();
};

struct ModelFlags {
  std::string lexicon;
  std::string lm;
  std::string corpus;  // builds both when given
  int order = 3;
  std::size_t adapt_variants = 0;
};

void open_context(const Globals& g, Context& ctx) {
  check(vcs_context_open(g.data_dir.empty() ? nullptr : g.data_dir.c_str(), g.dialect.c_str(),
                         &ctx.ptr),
        "loading data tables");
}

vcs_policy make_policy(const PolicyFlags& p, const Globals& g) {
  vcs_policy out = vcs_policy_default();
  if (p.mode == "rank0") out.mode = VCS_VARIANTS_RANK0;
  else if (p.mode == "exhaustive") out.mode = VCS_VARIANTS_EXHAUSTIVE;
  else if (p.mode == "sampled") out.mode = VCS_VARIANTS_SAMPLED;
  else throw UsageError{"unknown variant mode '" + p.mode + "'"};
  out.max_variants_per_sentence = p.max_variants;
  out.seed = g.seed;
  return out;
}

void load_noise(const Context& ctx, const NoiseFlags& n, NoiseHandle& noise) {
  if (n.profile.empty()) {
    check(vcs_noise_default(ctx.ptr, &noise.ptr), "default noise profile");
  } else {
    check(vcs_noise_load(ctx.ptr, n.profile.c_str(), &noise.ptr), "noise profile");
  }
  if (n.sub || n.ins || n.del) {
    double sub = 0, ins = 0, del = 0;
    check(vcs_noise_get_rates(noise.ptr, &sub, &ins, &del), "noise rates");
    check(vcs_noise_set_rates(noise.ptr, n.sub.value_or(sub), n.ins.value_or(ins),
                              n.del.value_or(del)),
          "noise rates");
  }
}

void load_models(const Context& ctx, const ModelFlags& m, LexiconHandle& lex, LmHandle& lm) {
  if (!m.corpus.empty()) {
    std::string corpus = read_file(m.corpus);
    if (m.lexicon.empty()) {
      check(vcs_lexicon_build(ctx.ptr, corpus.c_str(), 0, m.adapt_variants, &lex.ptr), "lexicon");
    }
    if (m.lm.empty()) check(vcs_lm_train(corpus.c_str(), m.order, &lm.ptr), "language model");
  }
  if (!m.lexicon.empty()) check(vcs_lexicon_load(ctx.ptr, m.lexicon.c_str(), &lex.ptr), "lexicon");
  if (!m.lm.empty()) check(vcs_lm_load(m.lm.c_str(), &lm.ptr), "language model");
  if (!lex.ptr || !lm.ptr) throw UsageError{"need --lexicon and --lm, or --corpus"};
}

void add_policy_flags(CLI::App* sub, PolicyFlags& p) {
  sub->add_option("--mode", p.mode, "Variant policy: rank0, exhaustive or sampled")
      ->check(CLI::IsMember({"rank0", "exhaustive", "sampled"}));
  sub->add_option("--max-variants", p.max_variants, "Records per sentence at most")
      ->check(CLI::PositiveNumber);
}

void add_noise_flags(CLI::App* sub, NoiseFlags& n) {
  sub->add_option("--noise-profile", n.profile, "Noise profile file")->check(CLI::ExistingFile);
  sub->add_option("--sub-rate", n.sub, "Substitution rate per phone")->check(CLI::Range(0.0, 1.0));
  sub->add_option("--ins-rate", n.ins, "Insertion rate per phone")->check(CLI::Range(0.0, 1.0));
  sub->add_option("--del-rate", n.del, "Deletion rate per phone")->check(CLI::Range(0.0, 1.0));
}

void add_decode_flags(CLI::App* sub, DecodeFlags& d) {
  sub->add_option("--beam", d.cfg.beam_width, "Beam width")->check(CLI::PositiveNumber);
  sub->add_option("--fuzzy-k", d.cfg.fuzzy_k, "Token edits allowed per syllable")
      ->check(CLI::Range(0, 2));
  sub->add_option("--lm-weight", d.cfg.lm_weight, "Language model weight")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--fuzzy-penalty", d.cfg.fuzzy_penalty, "Score penalty per token edit")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--fallback-penalty", d.cfg.fallback_penalty,
                  "Score penalty per syllable spelled without the lexicon")
      ->check(CLI::NonNegativeNumber);
}

void add_model_flags(CLI::App* sub, ModelFlags& m) {
  sub->add_option("--lexicon", m.lexicon, "Lexicon TSV")->check(CLI::ExistingFile);
  sub->add_option("--lm", m.lm, "Language model counts file")->check(CLI::ExistingFile);
  sub->add_option("--corpus", m.corpus, "Text corpus to build the lexicon and model from")
      ->check(CLI::ExistingFile);
  sub->add_option("--order", m.order, "Model order when training")->check(CLI::Range(1, 4));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vietnamese-English code-switching phone toolkit"};
  app.set_version_flag("--version", std::string(vcs_version()));
  app.set_config("--config", "", "Key-value config file; flags override it");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--data-dir", g.data_dir, "Directory with the data tables")
      ->check(CLI::ExistingDirectory);
  app.add_option("--dialect", g.dialect, "north or north-strict")
      ->check(CLI::IsMember({"north", "north-strict"}));
  app.add_option("--seed", g.seed, "Seed for every random choice");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", g.output, "Output file (default stdout)");

  // parse
  std::string parse_text;
  bool parse_ortho = false;
  auto* parse = app.add_subcommand("parse", "Validate and canonicalize a phone string");
  parse->add_option("text", parse_text, "Phone string, or text with --ortho")->required();
  parse->add_flag("--ortho", parse_ortho, "Analyze Vietnamese syllables instead");

  // g2p
  std::string g2p_text, g2p_input, g2p_lexicon;
  auto* g2p = app.add_subcommand("g2p", "Convert text to phones");
  g2p->add_option("text", g2p_text, "Sentence (or use --input)");
  g2p->add_option("--input", g2p_input, "One sentence per line")->check(CLI::ExistingFile);
  g2p->add_option("--lexicon", g2p_lexicon, "Lexicon for English words")->check(CLI::ExistingFile);

  // adapt
  std::string adapt_word, adapt_ipa;
  std::size_t adapt_max = 0;
  bool adapt_json = false;
  auto* adapt = app.add_subcommand("adapt", "Vietnamese spellings of an English word");
  adapt->add_option("word", adapt_word, "English word")->required();
  adapt->add_option("--ipa", adapt_ipa, "IPA transcription (default: pronouncing dictionary)");
  adapt->add_option("--max-variants", adapt_max, "Variants at most");
  adapt->add_flag("--json", adapt_json, "JSON output");

  // localize
  std::string loc_sentence, loc_lexicon;
  PolicyFlags loc_policy;
  auto* localize = app.add_subcommand("localize", "Replace English words by Vietnamese spellings");
  localize->add_option("sentence", loc_sentence, "Code-switched sentence")->required();
  localize->add_option("--lexicon", loc_lexicon, "Lexicon TSV")->check(CLI::ExistingFile);
  add_policy_flags(localize, loc_policy);

  // build-dataset
  std::string ds_input, ds_rejects, ds_lexicon;
  PolicyFlags ds_policy;
  auto* dataset = app.add_subcommand("build-dataset", "Phone-to-text records from a corpus");
  dataset->add_option("--input", ds_input, "One sentence per line")->required()
      ->check(CLI::ExistingFile);
  dataset->add_option("--rejects", ds_rejects, "Where to write rejected lines");
  dataset->add_option("--lexicon", ds_lexicon, "Lexicon TSV")->check(CLI::ExistingFile);
  add_policy_flags(dataset, ds_policy);

  // corrupt
  std::string cor_input, cor_phones;
  NoiseFlags cor_noise;
  auto* corrupt = app.add_subcommand("corrupt", "Pass phones through the noisy channel");
  corrupt->add_option("--input", cor_input, "Record file")->check(CLI::ExistingFile);
  corrupt->add_option("--phones", cor_phones, "A single phone string");
  add_noise_flags(corrupt, cor_noise);

  // decode
  std::string dec_input, dec_phones;
  std::size_t dec_nbest = 1;
  ModelFlags dec_models;
  DecodeFlags dec_flags;
  auto* decode = app.add_subcommand("decode", "Phones to text");
  decode->add_option("--input", dec_input, "Record file")->check(CLI::ExistingFile);
  decode->add_option("--phones", dec_phones, "A single phone string");
  decode->add_option("--nbest", dec_nbest, "Hypotheses to print with --phones");
  add_model_flags(decode, dec_models);
  add_decode_flags(decode, dec_flags);

  // eval
  std::string ev_ref, ev_hyp;
  bool ev_json = false;
  auto* eval = app.add_subcommand("eval", "Word error rate of hypotheses");
  eval->add_option("--ref", ev_ref, "References")->required()->check(CLI::ExistingFile);
  eval->add_option("--hyp", ev_hyp, "Hypotheses")->required()->check(CLI::ExistingFile);
  eval->add_flag("--json", ev_json, "JSON output");

  // pipeline
  std::string pl_input, pl_rows;
  bool pl_json = false;
  PolicyFlags pl_policy;
  NoiseFlags pl_noise;
  DecodeFlags pl_decode;
  ModelFlags pl_models;
  auto* pipeline = app.add_subcommand("pipeline", "Text to phones to noise to text, scored");
  pipeline->add_option("--input", pl_input, "Gold sentences")->required()
      ->check(CLI::ExistingFile);
  pipeline->add_option("--rows", pl_rows, "Per-record details as JSON lines");
  pipeline->add_flag("--json", pl_json, "JSON report");
  add_policy_flags(pipeline, pl_policy);
  add_noise_flags(pipeline, pl_noise);
  add_decode_flags(pipeline, pl_decode);
  pipeline->add_option("--lexicon", pl_models.lexicon, "Lexicon TSV")->check(CLI::ExistingFile);
  pipeline->add_option("--lm", pl_models.lm, "Language model counts file")
      ->check(CLI::ExistingFile);

  // lexicon
  std::string lx_input;
  bool lx_dictionary = false;
  std::size_t lx_variants = 0;
  auto* lexicon = app.add_subcommand("lexicon", "Build a lexicon TSV");
  lexicon->add_option("--input", lx_input, "Corpus whose words to cover")->check(CLI::ExistingFile);
  lexicon->add_flag("--dictionary", lx_dictionary, "Also cover the pronouncing dictionary");
  lexicon->add_option("--max-variants", lx_variants, "Spellings per English word at most");

  // train-lm
  std::string lm_input;
  int lm_order = 3;
  auto* train_lm = app.add_subcommand("train-lm", "Train an n-gram model");
  train_lm->add_option("--input", lm_input, "Corpus")->required()->check(CLI::ExistingFile);
  train_lm->add_option("--order", lm_order, "Model order")->check(CLI::Range(1, 4));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Context ctx;
    if (!train_lm->parsed() && !eval->parsed()) open_context(g, ctx);

    if (parse->parsed()) {
      OwnedString out;
      if (parse_ortho) {
        check(vcs_analyze(ctx.ptr, parse_text.c_str(), &out.ptr), "parse");
      } else {
        check(vcs_parse_phones(ctx.ptr, parse_text.c_str(), &out.ptr), "parse");
      }
      write_output(g.output, out.str() + "\n");
    } else if (g2p->parsed()) {
      LexiconHandle lex;
      if (!g2p_lexicon.empty()) {
        check(vcs_lexicon_load(ctx.ptr, g2p_lexicon.c_str(), &lex.ptr), "lexicon");
      } else {
        check(vcs_lexicon_build(ctx.ptr, "", 1, 0, &lex.ptr), "lexicon");
      }
      std::string input = g2p_input.empty() ? g2p_text : read_file(g2p_input);
      if (g2p_input.empty() && g2p_text.empty()) throw UsageError{"give a sentence or --input"};
      std::istringstream lines(input);
      std::string result;
      for (std::string line; std::getline(lines, line);) {
        OwnedString out;
        check(vcs_g2p(ctx.ptr, lex.ptr, line.c_str(), &out.ptr), "g2p");
        result += out.str() + "\n";
      }
      write_output(g.output, result);
    } else if (adapt->parsed()) {
      OwnedString out;
      check(vcs_adapt(ctx.ptr, adapt_word.c_str(), adapt_ipa.empty() ? nullptr : adapt_ipa.c_str(),
                      adapt_max, &out.ptr),
            "adapt");
      if (adapt_json) {
        write_output(g.output, out.str() + "\n");
      } else {
        std::string result;
        for (const auto& v : nlohmann::json::parse(out.str())) {
          result += std::to_string(v.at("rank").get<int>()) + "\t" +
                    v.at("text").get<std::string>() + "\t" + v.at("phones").get<std::string>() +
                    "\n";
        }
        write_output(g.output, result);
      }
    } else if (localize->parsed()) {
      LexiconHandle lex;
      if (!loc_lexicon.empty()) {
        check(vcs_lexicon_load(ctx.ptr, loc_lexicon.c_str(), &lex.ptr), "lexicon");
      } else {
        check(vcs_lexicon_build(ctx.ptr, loc_sentence.c_str(), 0, 0, &lex.ptr), "lexicon");
      }
      vcs_policy policy = make_policy(loc_policy, g);
      OwnedString out;
      check(vcs_localize(ctx.ptr, lex.ptr, loc_sentence.c_str(), &policy, &out.ptr), "localize");
      write_output(g.output, out.str());
    } else if (dataset->parsed()) {
      std::string corpus = read_file(ds_input);
      LexiconHandle lex;
      if (!ds_lexicon.empty()) {
        check(vcs_lexicon_load(ctx.ptr, ds_lexicon.c_str(), &lex.ptr), "lexicon");
      } else {
        check(vcs_lexicon_build(ctx.ptr, corpus.c_str(), 0, 0, &lex.ptr), "lexicon");
      }
      vcs_policy policy = make_policy(ds_policy, g);
      OwnedString records, rejects;
      check(vcs_build_dataset(ctx.ptr, lex.ptr, corpus.c_str(), &policy, g.jobs, &records.ptr,
                              &rejects.ptr),
            "build-dataset");
      write_output(g.output, records.str());
      if (!ds_rejects.empty()) write_output(ds_rejects, rejects.str());
      else if (!rejects.str().empty()) std::cerr << rejects.str();
    } else if (corrupt->parsed()) {
      if (cor_input.empty() == cor_phones.empty()) throw UsageError{"give --input or --phones"};
      NoiseHandle noise;
      load_noise(ctx, cor_noise, noise);
      OwnedString out;
      if (!cor_phones.empty()) {
        check(vcs_corrupt(ctx.ptr, noise.ptr, cor_phones.c_str(), g.seed, &out.ptr), "corrupt");
        write_output(g.output, out.str() + "\n");
      } else {
        std::string records = read_file(cor_input);
        check(vcs_corrupt_records(ctx.ptr, noise.ptr, records.c_str(), g.seed, &out.ptr),
              "corrupt");
        write_output(g.output, out.str());
      }
    } else if (decode->parsed()) {
      if (dec_input.empty() == dec_phones.empty()) throw UsageError{"give --input or --phones"};
      LexiconHandle lex;
      LmHandle lm;
      load_models(ctx, dec_models, lex, lm);
      OwnedString out;
      if (!dec_phones.empty()) {
        check(vcs_decode(ctx.ptr, lex.ptr, lm.ptr, &dec_flags.cfg, dec_phones.c_str(), dec_nbest,
                         &out.ptr),
              "decode");
        write_output(g.output, out.str() + "\n");
      } else {
        std::string records = read_file(dec_input);
        check(vcs_decode_records(ctx.ptr, lex.ptr, lm.ptr, &dec_flags.cfg, records.c_str(), g.jobs,
                                 &out.ptr),
              "decode");
        write_output(g.output, out.str());
      }
    } else if (eval->parsed()) {
      std::string refs = read_file(ev_ref), hyps = read_file(ev_hyp);
      OwnedString out;
      check(vcs_eval(refs.c_str(), hyps.c_str(), ev_json ? 1 : 0, &out.ptr), "eval");
      write_output(g.output, out.str());
    } else if (pipeline->parsed()) {
      std::string corpus = read_file(pl_input);
      LexiconHandle lex;
      LmHandle lm;
      if (!pl_models.lexicon.empty()) {
        check(vcs_lexicon_load(ctx.ptr, pl_models.lexicon.c_str(), &lex.ptr), "lexicon");
      }
      if (!pl_models.lm.empty()) check(vcs_lm_load(pl_models.lm.c_str(), &lm.ptr), "lm");
      NoiseHandle noise;
      load_noise(ctx, pl_noise, noise);
      vcs_policy policy = make_policy(pl_policy, g);
      OwnedString report, rows;
      check(vcs_pipeline(ctx.ptr, lex.ptr, lm.ptr, corpus.c_str(), &policy, noise.ptr,
                         &pl_decode.cfg, g.seed, g.jobs, pl_json ? 1 : 0, &report.ptr,
                         pl_rows.empty() ? nullptr : &rows.ptr),
            "pipeline");
      write_output(g.output, report.str());
      if (!pl_rows.empty()) write_output(pl_rows, rows.str());
    } else if (lexicon->parsed()) {
      if (lx_input.empty() && !lx_dictionary) throw UsageError{"give --input and/or --dictionary"};
      std::string corpus = lx_input.empty() ? std::string() : read_file(lx_input);
      LexiconHandle lex;
      check(vcs_lexicon_build(ctx.ptr, corpus.c_str(), lx_dictionary ? 1 : 0, lx_variants,
                              &lex.ptr),
            "lexicon");
      if (g.output.empty() || g.output == "-") throw UsageError{"lexicon needs -o FILE"};
      check(vcs_lexicon_save(lex.ptr, g.output.c_str()), "lexicon");
    } else if (train_lm->parsed()) {
      std::string corpus = read_file(lm_input);
      LmHandle lm;
      check(vcs_lm_train(corpus.c_str(), lm_order, &lm.ptr), "train-lm");
      if (g.output.empty() || g.output == "-") throw UsageError{"train-lm needs -o FILE"};
      check(vcs_lm_save(lm.ptr, g.output.c_str()), "train-lm");
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitData;
  }
  return kExitOk;
}
