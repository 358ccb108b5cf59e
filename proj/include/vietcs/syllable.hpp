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

// Vietnamese orthographic syllables: tone extraction, decomposition into
// onset / medial / nucleus / coda graphemes, and the inverse composition.

#ifndef VIETCS_SYLLABLE_HPP_
#define VIETCS_SYLLABLE_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vietcs/phoneme.hpp"

namespace vietcs {

// Graphemes are lowercase NFC without tone marks; empty strings mean "absent".
struct OrthoSyllable {
  std::string raw;  // input as given to decompose(); ignored by ==
  std::string onset;
  std::string medial;  // "", "o" or "u"
  std::string nucleus;
  std::string coda;
  Tone tone = Tone::kNgang;

  bool operator==(const OrthoSyllable& o) const {
    return onset == o.onset && medial == o.medial && nucleus == o.nucleus && coda == o.coda &&
           tone == o.tone;
  }
};

struct ToneSplit {
  std::string base;
  Tone tone = Tone::kNgang;
};

// Accepts precomposed or combining tone marks. Vowel-quality marks (â ă ê ô ơ ư)
// and đ are kept. Throws MultipleToneMarks.
ToneSplit strip_tone(std::string_view syllable);

// Spells a syllable with the tone mark on its main vowel, without checking
// legality. Orthography::compose is the checked form.
std::string spell_syllable(const OrthoSyllable& s);

enum class TokenClassKind { kVietnamese, kEnglish, kOther };

std::string_view token_class_name(TokenClassKind kind);

struct TokenClass {
  std::string token;
  TokenClassKind cls;
};

class Orthography {
 public:
  Orthography() = default;

  static Orthography load(const std::filesystem::path& path);
  static Orthography parse(std::string_view content);

  // Throws NotAVietnameseSyllable (or MultipleToneMarks).
  OrthoSyllable decompose(std::string_view syllable) const;
  std::optional<OrthoSyllable> try_decompose(std::string_view syllable) const;

  // Places the tone mark on the main vowel: the vowel carrying a quality mark if
  // any, the first vowel of ia/ua/ưa/ya, the second of iê/yê/uô/ươ. Medials and
  // glide codas are never marked. Throws IllegalCombination.
  std::string compose(const OrthoSyllable& s) const;

  bool is_legal(const OrthoSyllable& s) const;

  // Every legal onset x medial x rime x tone combination, in table order.
  std::vector<OrthoSyllable> legal_grid() const;

  // Respells an onset (c/k, g/gh, ng/ngh) for the vowel that follows it.
  std::optional<std::string> fit_onset(std::string_view onset, std::string_view medial,
                                       std::string_view nucleus) const;

  // Medial letter ("o"/"u") that spells a w glide before `nucleus`.
  std::optional<std::string> medial_for(std::string_view nucleus) const;

  // Whitespace tokens labelled Vietnamese (decomposes), English (letters only)
  // or Other (punctuation, digits, mixed).
  std::vector<TokenClass> classify_tokens(std::string_view sentence) const;

  const std::vector<std::string>& onsets() const { return onset_order_; }
  const std::vector<std::string>& nuclei() const { return nucleus_order_; }
  std::vector<std::string> codas_for(std::string_view nucleus) const;

 private:
  enum class Context { kAny, kFront, kBack, kGi, kQu };
  struct OnsetRule {
    Context context = Context::kAny;
    bool medial = false;
  };
  struct Requirement {
    bool medial_alt = false;  // false: onset:LIST, true: medial:LIST
    std::set<std::string> values;
  };
  struct NucleusRule {
    std::vector<std::string> codas;  // "" is the open rime
    std::vector<Requirement> requires_any;  // empty = unconstrained
  };

  const NucleusRule* find_rule(std::string_view nucleus, std::string_view coda) const;
  bool requirement_met(const NucleusRule& rule, const OrthoSyllable& s) const;
  bool context_fits(const OnsetRule& rule, const OrthoSyllable& s) const;

  std::map<std::string, OnsetRule, std::less<>> onsets_;
  std::vector<std::string> onset_order_;
  std::map<std::string, std::set<std::string>, std::less<>> medials_;
  std::map<std::string, std::vector<NucleusRule>, std::less<>> nuclei_;
  std::vector<std::string> nucleus_order_;
  std::set<std::string, std::less<>> qu_nuclei_;
  std::set<std::string, std::less<>> gi_excluded_;
  std::vector<std::vector<std::string>> respell_;
};

}  // namespace vietcs

#endif  // VIETCS_SYLLABLE_HPP_
