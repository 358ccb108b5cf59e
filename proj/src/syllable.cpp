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

#include "vietcs/syllable.hpp"

#include <algorithm>

#include "tsv.hpp"
#include "vietcs/error.hpp"
#include "vietcs/text.hpp"

namespace vietcs {
namespace {

// Combining marks that carry tone, indexed by Tone.
constexpr char32_t kToneMarks[] = {0, 0x0300, 0x0309, 0x0303, 0x0301, 0x0323};

std::optional<Tone> tone_of_mark(char32_t c) {
  for (int i = 1; i < kToneCount; ++i) {
    if (kToneMarks[i] == c) return static_cast<Tone>(i);
  }
  return std::nullopt;
}

const std::u32string kVowels = U"aăâeêioôơuưy";
const std::u32string kConsonants = U"bcdđghklmnpqrstvx";
const std::u32string kFrontVowels = U"ieêy";

bool is_vowel(char32_t c) { return kVowels.find(c) != std::u32string::npos; }
bool is_alphabet(char32_t c) { return is_vowel(c) || kConsonants.find(c) != std::u32string::npos; }

bool is_checked(std::string_view coda) {
  return coda == "p" || coda == "t" || coda == "c" || coda == "ch";
}

// Position of the tone-bearing letter inside a nucleus.
std::size_t mark_index(std::u32string_view nucleus) {
  if (nucleus.size() < 2) return 0;
  if (nucleus == U"iê" || nucleus == U"yê" || nucleus == U"uô" || nucleus == U"ươ") return 1;
  return 0;
}

std::string field_or_empty(const std::string& f) { return f == "-" ? std::string() : f; }

}  // namespace

ToneSplit strip_tone(std::string_view syllable) {
  std::u32string cps = text::to_u32(text::nfd(syllable));
  ToneSplit out;
  std::u32string base;
  int marks = 0;
  for (char32_t c : cps) {
    if (auto t = tone_of_mark(c)) {
      out.tone = *t;
      ++marks;
    } else {
      base.push_back(c);
    }
  }
  if (marks > 1) {
    throw Error(ErrorCode::kMultipleToneMarks, "'" + std::string(syllable) + "'");
  }
  out.base = text::nfc(text::to_utf8(base));
  return out;
}

std::string_view token_class_name(TokenClassKind kind) {
  switch (kind) {
    case TokenClassKind::kVietnamese: return "vi";
    case TokenClassKind::kEnglish: return "en";
    case TokenClassKind::kOther: return "other";
  }
  return "?";
}

Orthography Orthography::load(const std::filesystem::path& path) {
  try {
    return parse(tsv::read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

Orthography Orthography::parse(std::string_view content) {
  Orthography o;
  for (const tsv::Row& row : tsv::parse(content)) {
    const auto& f = row.fields;
    const std::string& kind = f[0];
    if (kind == "onset") {
      if (f.size() < 4) tsv::fail("orthography", row, "onset needs grapheme, context, medial");
      OnsetRule rule;
      if (f[2] == "any") rule.context = Context::kAny;
      else if (f[2] == "front") rule.context = Context::kFront;
      else if (f[2] == "back") rule.context = Context::kBack;
      else if (f[2] == "gi") rule.context = Context::kGi;
      else if (f[2] == "qu") rule.context = Context::kQu;
      else tsv::fail("orthography", row, "unknown context '" + f[2] + "'");
      rule.medial = f[3] == "yes";
      std::string g = field_or_empty(f[1]);
      o.onsets_[g] = rule;
      o.onset_order_.push_back(g);
    } else if (kind == "medial") {
      if (f.size() < 3) tsv::fail("orthography", row, "medial needs grapheme and nuclei");
      for (auto& n : text::split(f[2], ',')) o.medials_[f[1]].insert(n);
    } else if (kind == "nucleus") {
      if (f.size() < 4) tsv::fail("orthography", row, "nucleus needs grapheme, codas, requires");
      NucleusRule rule;
      for (auto& c : text::split(f[2], ',')) rule.codas.push_back(field_or_empty(c));
      if (f[3] != "-") {
        for (auto& alt : text::split(f[3], '|')) {
          auto colon = alt.find(':');
          if (colon == std::string::npos) tsv::fail("orthography", row, "bad requirement '" + alt + "'");
          Requirement req;
          std::string key = alt.substr(0, colon);
          if (key == "onset") req.medial_alt = false;
          else if (key == "medial") req.medial_alt = true;
          else tsv::fail("orthography", row, "bad requirement key '" + key + "'");
          for (auto& v : text::split(alt.substr(colon + 1), ',')) req.values.insert(v);
          rule.requires_any.push_back(std::move(req));
        }
      }
      if (!o.nuclei_.count(f[1])) o.nucleus_order_.push_back(f[1]);
      o.nuclei_[f[1]].push_back(std::move(rule));
    } else if (kind == "qu-nuclei") {
      for (auto& n : text::split(f.at(1), ',')) o.qu_nuclei_.insert(n);
    } else if (kind == "gi-excluded") {
      for (auto& n : text::split(f.at(1), ',')) o.gi_excluded_.insert(n);
    } else if (kind == "respell") {
      o.respell_.push_back(text::split(f.at(1), ','));
    } else {
      tsv::fail("orthography", row, "unknown row kind '" + kind + "'");
    }
  }
  if (o.onsets_.empty() || o.nuclei_.empty()) {
    throw Error(ErrorCode::kDataFile, "orthography table lists no onsets or nuclei");
  }
  return o;
}

const Orthography::NucleusRule* Orthography::find_rule(std::string_view nucleus,
                                                       std::string_view coda) const {
  auto it = nuclei_.find(nucleus);
  if (it == nuclei_.end()) return nullptr;
  for (const NucleusRule& r : it->second) {
    if (std::find(r.codas.begin(), r.codas.end(), coda) != r.codas.end()) return &r;
  }
  return nullptr;
}

bool Orthography::requirement_met(const NucleusRule& rule, const OrthoSyllable& s) const {
  if (rule.requires_any.empty()) return true;
  for (const Requirement& req : rule.requires_any) {
    if (req.medial_alt) {
      if (!s.medial.empty() && req.values.count(s.medial)) return true;
    } else if (s.medial.empty()) {
      if (s.onset.empty() ? req.values.count("-") > 0
                          : (req.values.count(s.onset) > 0 || req.values.count("consonant") > 0)) {
        return true;
      }
    }
  }
  return false;
}

bool Orthography::context_fits(const OnsetRule& rule, const OrthoSyllable& s) const {
  std::u32string next = text::to_u32(s.medial.empty() ? s.nucleus : s.medial);
  bool front = !next.empty() && kFrontVowels.find(next[0]) != std::u32string::npos;
  switch (rule.context) {
    case Context::kAny: return true;
    case Context::kFront: return front;
    case Context::kBack: return !front;
    case Context::kGi:
      return s.medial.empty() && !gi_excluded_.count(s.nucleus) &&
             !gi_excluded_.count(s.nucleus + "+" + s.coda);
    case Context::kQu: return s.medial.empty() && qu_nuclei_.count(s.nucleus) > 0;
  }
  return false;
}

bool Orthography::is_legal(const OrthoSyllable& s) const {
  auto onset = onsets_.find(s.onset);
  if (onset == onsets_.end()) return false;
  const NucleusRule* rule = find_rule(s.nucleus, s.coda);
  if (!rule) return false;
  if (is_checked(s.coda) && s.tone != Tone::kSac && s.tone != Tone::kNang) return false;
  if (!s.medial.empty()) {
    auto m = medials_.find(s.medial);
    if (m == medials_.end() || !m->second.count(s.nucleus) || !onset->second.medial) return false;
  }
  return context_fits(onset->second, s) && requirement_met(*rule, s);
}

std::optional<OrthoSyllable> Orthography::try_decompose(std::string_view syllable) const {
  ToneSplit split = strip_tone(text::lowercase(text::nfc(syllable)));
  std::u32string letters = text::to_u32(split.base);
  if (letters.empty()) return std::nullopt;
  for (char32_t c : letters) {
    if (!is_alphabet(c)) return std::nullopt;
  }

  OrthoSyllable out;
  out.raw = std::string(syllable);
  out.tone = split.tone;

  // Maximal munch over onset graphemes.
  std::size_t onset_len = 0;
  for (const auto& [g, rule] : onsets_) {
    std::u32string g32 = text::to_u32(g);
    if (g32.size() > onset_len && letters.compare(0, g32.size(), g32) == 0) {
      onset_len = g32.size();
      out.onset = g;
    }
  }
  std::u32string rest = letters.substr(onset_len);
  if (out.onset == "gi" && (rest.empty() || !is_vowel(rest[0]) || rest[0] == U'ê')) {
    rest.insert(rest.begin(), U'i');
  }
  if (rest.empty() || !is_vowel(rest[0])) return std::nullopt;

  if (out.onset != "qu" && rest.size() >= 2) {
    if (rest[0] == U'o' && std::u32string_view(U"aăe").find(rest[1]) != std::u32string::npos) {
      out.medial = "o";
    } else if (rest[0] == U'u' && std::u32string_view(U"âêyơ").find(rest[1]) != std::u32string::npos) {
      out.medial = "u";
    }
    if (!out.medial.empty()) rest.erase(0, 1);
  }

  static const std::vector<std::u32string> kCodas = {U"ch", U"ng", U"nh", U"c", U"m", U"n",
                                                     U"p",  U"t",  U"i",  U"y", U"u", U"o", U""};
  for (const std::u32string& coda : kCodas) {
    if (coda.size() >= rest.size()) continue;
    if (rest.compare(rest.size() - coda.size(), coda.size(), coda) != 0) continue;
    OrthoSyllable cand = out;
    cand.nucleus = text::to_utf8(std::u32string_view(rest).substr(0, rest.size() - coda.size()));
    cand.coda = text::to_utf8(coda);
    if (is_legal(cand)) return cand;
  }
  return std::nullopt;
}

OrthoSyllable Orthography::decompose(std::string_view syllable) const {
  auto s = try_decompose(syllable);
  if (!s) throw Error(ErrorCode::kNotAVietnameseSyllable, "'" + std::string(syllable) + "'");
  return *s;
}

std::string Orthography::compose(const OrthoSyllable& s) const {
  if (!is_legal(s)) {
    throw Error(ErrorCode::kIllegalCombination,
                "onset '" + s.onset + "' medial '" + s.medial + "' nucleus '" + s.nucleus +
                    "' coda '" + s.coda + "' tone " + std::to_string(tone_index(s.tone)));
  }
  return spell_syllable(s);
}

std::string spell_syllable(const OrthoSyllable& s) {
  std::u32string onset = text::to_u32(s.onset);
  std::u32string nucleus = text::to_u32(s.nucleus);
  std::u32string letters = onset + text::to_u32(s.medial);
  std::size_t mark = letters.size() + mark_index(nucleus);
  if (s.onset == "gi" && !nucleus.empty() && nucleus[0] == U'i') {
    // gi shares its i with the nucleus.
    nucleus.erase(0, 1);
    mark -= 1;
  }
  letters += nucleus;
  letters += text::to_u32(s.coda);

  std::u32string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    out += text::to_u32(text::nfd(text::to_utf8(letters[i])));
    if (i == mark && s.tone != Tone::kNgang) out.push_back(kToneMarks[tone_index(s.tone)]);
  }
  return text::nfc(text::to_utf8(out));
}

std::vector<OrthoSyllable> Orthography::legal_grid() const {
  std::vector<OrthoSyllable> out;
  for (const std::string& onset : onset_order_) {
    for (const char* medial : {"", "o", "u"}) {
      for (const std::string& nucleus : nucleus_order_) {
        for (const NucleusRule& rule : nuclei_.at(nucleus)) {
          for (const std::string& coda : rule.codas) {
            for (int t = 0; t < kToneCount; ++t) {
              OrthoSyllable s;
              s.onset = onset;
              s.medial = medial;
              s.nucleus = nucleus;
              s.coda = coda;
              s.tone = static_cast<Tone>(t);
              if (is_legal(s)) out.push_back(std::move(s));
            }
          }
        }
      }
    }
  }
  return out;
}

std::optional<std::string> Orthography::fit_onset(std::string_view onset, std::string_view medial,
                                                  std::string_view nucleus) const {
  std::vector<std::string> candidates{std::string(onset)};
  for (const auto& group : respell_) {
    if (std::find(group.begin(), group.end(), onset) != group.end()) {
      candidates = group;
      break;
    }
  }
  OrthoSyllable probe;
  probe.medial = std::string(medial);
  probe.nucleus = std::string(nucleus);
  for (const std::string& c : candidates) {
    auto it = onsets_.find(c);
    if (it == onsets_.end()) continue;
    probe.onset = c;
    if (context_fits(it->second, probe)) return c;
  }
  return std::nullopt;
}

std::optional<std::string> Orthography::medial_for(std::string_view nucleus) const {
  for (const auto& [medial, nuclei] : medials_) {
    if (nuclei.count(std::string(nucleus))) return medial;
  }
  return std::nullopt;
}

std::vector<std::string> Orthography::codas_for(std::string_view nucleus) const {
  std::vector<std::string> out;
  auto it = nuclei_.find(nucleus);
  if (it == nuclei_.end()) return out;
  for (const NucleusRule& r : it->second) out.insert(out.end(), r.codas.begin(), r.codas.end());
  return out;
}

std::vector<TokenClass> Orthography::classify_tokens(std::string_view sentence) const {
  std::vector<TokenClass> out;
  for (std::string& tok : text::split_whitespace(text::nfc(sentence))) {
    std::string word = text::strip_punctuation(tok);
    TokenClassKind cls = TokenClassKind::kOther;
    if (!word.empty()) {
      std::u32string cps = text::to_u32(word);
      bool letters_only = std::all_of(cps.begin(), cps.end(), [](char32_t c) {
        return text::is_letter(c) || (c >= 0x0300 && c <= 0x036F);
      });
      if (letters_only) {
        bool vi = false;
        try {
          vi = try_decompose(word).has_value();
        } catch (const Error&) {
          vi = false;  // several tone marks
        }
        cls = vi ? TokenClassKind::kVietnamese : TokenClassKind::kEnglish;
      }
    }
    out.push_back({std::move(tok), cls});
  }
  return out;
}

}  // namespace vietcs
