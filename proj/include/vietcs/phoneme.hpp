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

// Extended Vietnamese phoneme inventory and the phone-string grammar.
//
// A syllable serializes as `onset* nucleus - tone [coda]`, e.g. "tʰ i - 0 nz".
// Syllables of one word are joined by " . ", words by " | ":
//
//   "s ɛ - 0 mz | v i - 0 . z ɛ - 0 uz"
//
// Coda symbols end in "z" so they can never be mistaken for an onset.

#ifndef VIETCS_PHONEME_HPP_
#define VIETCS_PHONEME_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vietcs {

// Index order follows the traditional dictionary order; 0 and 4 are fixed by
// ngang (no mark) and sắc (acute).
enum class Tone : std::uint8_t {
  kNgang = 0,
  kHuyen = 1,
  kHoi = 2,
  kNga = 3,
  kSac = 4,
  kNang = 5,
};

inline constexpr int kToneCount = 6;

std::string_view tone_name(Tone tone);
std::optional<Tone> tone_from_index(int index);
inline int tone_index(Tone tone) { return static_cast<int>(tone); }

enum class TokenKind { kOnset, kNucleus, kToneMark, kCoda };

std::string_view token_kind_name(TokenKind kind);

struct PhoneToken {
  TokenKind kind;
  std::string symbol;

  bool operator==(const PhoneToken&) const = default;
};

struct SyllablePhones {
  std::vector<std::string> onsets;  // 0..2 entries
  std::string nucleus;
  Tone tone = Tone::kNgang;
  std::optional<std::string> coda;

  // Flat token list used for phone error rates: onsets, nucleus, tone digit, coda.
  std::vector<std::string> tokens() const;

  bool operator==(const SyllablePhones&) const = default;
};

struct PhoneSequence {
  std::vector<SyllablePhones> syllables;
  // Index of the first syllable of every word; strictly increasing, starts at 0.
  std::vector<std::size_t> word_boundaries;

  bool empty() const { return syllables.empty(); }
  std::size_t size() const { return syllables.size(); }

  // Appends the syllables as one new word.
  void append_word(const std::vector<SyllablePhones>& word);

  // Every PER token of every syllable, in order.
  std::vector<std::string> tokens() const;

  bool operator==(const PhoneSequence&) const = default;
};

class PhonemeInventory {
 public:
  PhonemeInventory() = default;

  static PhonemeInventory load(const std::filesystem::path& path);
  static PhonemeInventory parse(std::string_view content);

  // Throws Error(kUnknownToken) for symbols outside the inventory.
  TokenKind classify(std::string_view symbol) const;
  std::optional<TokenKind> try_classify(std::string_view symbol) const;

  const std::vector<std::string>& symbols(TokenKind kind) const;

  // All symbols in file order, tones included.
  const std::vector<std::string>& all_symbols() const { return ordered_; }

 private:
  std::map<std::string, TokenKind, std::less<>> kinds_;
  std::vector<std::string> ordered_;
  std::vector<std::string> onsets_, nuclei_, tones_, codas_;
};

// Throws UnknownToken(symbol, position) or MalformedSyllable.
PhoneSequence parse_phone_sequence(std::string_view text, const PhonemeInventory& inventory);
SyllablePhones parse_syllable(std::string_view text, const PhonemeInventory& inventory);

std::string serialize_phone_sequence(const PhoneSequence& seq);
std::string serialize_syllable(const SyllablePhones& syllable);

// Validates grammar and inventory membership of an in-memory sequence.
void validate(const PhoneSequence& seq, const PhonemeInventory& inventory);

TokenKind classify_token(std::string_view symbol, const PhonemeInventory& inventory);

}  // namespace vietcs

#endif  // VIETCS_PHONEME_HPP_
