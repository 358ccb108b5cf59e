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

#include "vietcs/phoneme.hpp"

#include "tsv.hpp"
#include "vietcs/error.hpp"
#include "vietcs/text.hpp"

namespace vietcs {
namespace {

constexpr std::string_view kToneSeparator = "-";
constexpr std::string_view kSyllableSeparator = ".";
constexpr std::string_view kWordSeparator = "|";

bool has_coda_shape(std::string_view symbol) {
  return text::length(symbol) >= 2 && symbol.back() == 'z';
}

struct Group {
  std::vector<std::pair<std::string, std::size_t>> tokens;  // symbol, position
  bool word_start = false;
};

SyllablePhones parse_group(const Group& group, const PhonemeInventory& inventory) {
  if (group.tokens.empty()) {
    throw Error(ErrorCode::kMalformedSyllable, "empty syllable");
  }
  SyllablePhones out;
  std::size_t i = 0;
  const auto& toks = group.tokens;
  auto kind_at = [&](std::size_t k) -> std::optional<TokenKind> {
    if (toks[k].first == kToneSeparator) return std::nullopt;
    auto kind = inventory.try_classify(toks[k].first);
    if (!kind) {
      throw Error(ErrorCode::kUnknownToken,
                  "'" + toks[k].first + "' at position " + std::to_string(toks[k].second));
    }
    return kind;
  };

  while (i < toks.size()) {
    auto kind = kind_at(i);
    if (!kind || *kind != TokenKind::kOnset) break;
    out.onsets.push_back(toks[i].first);
    ++i;
  }
  if (out.onsets.size() > 2) {
    throw Error(ErrorCode::kMalformedSyllable, "more than two onsets before position " +
                                                   std::to_string(toks[i - 1].second));
  }
  if (i >= toks.size()) {
    throw Error(ErrorCode::kMalformedSyllable, "missing nucleus");
  }
  auto kind = kind_at(i);
  if (!kind || *kind != TokenKind::kNucleus) {
    std::string what = kind && *kind == TokenKind::kCoda ? "coda before nucleus" : "missing nucleus";
    throw Error(ErrorCode::kMalformedSyllable,
                what + " at position " + std::to_string(toks[i].second));
  }
  out.nucleus = toks[i].first;
  ++i;
  if (i >= toks.size() || toks[i].first != kToneSeparator) {
    throw Error(ErrorCode::kMalformedSyllable, "missing tone after nucleus '" + out.nucleus + "'");
  }
  ++i;
  if (i >= toks.size()) {
    throw Error(ErrorCode::kMalformedSyllable, "missing tone after '-'");
  }
  kind = kind_at(i);
  if (!kind || *kind != TokenKind::kToneMark) {
    throw Error(ErrorCode::kMalformedSyllable,
                "expected tone at position " + std::to_string(toks[i].second));
  }
  out.tone = *tone_from_index(toks[i].first[0] - '0');
  ++i;
  if (i < toks.size()) {
    kind = kind_at(i);
    if (!kind || *kind != TokenKind::kCoda) {
      throw Error(ErrorCode::kMalformedSyllable,
                  "unexpected token at position " + std::to_string(toks[i].second));
    }
    out.coda = toks[i].first;
    ++i;
  }
  if (i < toks.size()) {
    throw Error(ErrorCode::kMalformedSyllable,
                "trailing token at position " + std::to_string(toks[i].second));
  }
  return out;
}

}  // namespace

std::string_view tone_name(Tone tone) {
  static constexpr std::string_view kNames[] = {"ngang", "huyền", "hỏi", "ngã", "sắc", "nặng"};
  return kNames[tone_index(tone)];
}

std::optional<Tone> tone_from_index(int index) {
  if (index < 0 || index >= kToneCount) return std::nullopt;
  return static_cast<Tone>(index);
}

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kOnset: return "onset";
    case TokenKind::kNucleus: return "nucleus";
    case TokenKind::kToneMark: return "tone";
    case TokenKind::kCoda: return "coda";
  }
  return "?";
}

std::vector<std::string> SyllablePhones::tokens() const {
  std::vector<std::string> out(onsets);
  out.push_back(nucleus);
  out.push_back(std::to_string(tone_index(tone)));
  if (coda) out.push_back(*coda);
  return out;
}

void PhoneSequence::append_word(const std::vector<SyllablePhones>& word) {
  if (word.empty()) return;
  word_boundaries.push_back(syllables.size());
  syllables.insert(syllables.end(), word.begin(), word.end());
}

std::vector<std::string> PhoneSequence::tokens() const {
  std::vector<std::string> out;
  for (const auto& s : syllables) {
    auto t = s.tokens();
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

PhonemeInventory PhonemeInventory::load(const std::filesystem::path& path) {
  try {
    return parse(tsv::read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

PhonemeInventory PhonemeInventory::parse(std::string_view content) {
  PhonemeInventory inv;
  for (const tsv::Row& row : tsv::parse(content)) {
    if (row.fields.size() < 2) tsv::fail("inventory", row, "expected kind<TAB>symbol");
    const std::string& kind_name = row.fields[0];
    const std::string& symbol = row.fields[1];
    TokenKind kind;
    if (kind_name == "onset") {
      kind = TokenKind::kOnset;
    } else if (kind_name == "nucleus") {
      kind = TokenKind::kNucleus;
    } else if (kind_name == "coda") {
      kind = TokenKind::kCoda;
    } else if (kind_name == "tone") {
      kind = TokenKind::kToneMark;
      if (symbol.size() != 1 || !tone_from_index(symbol[0] - '0')) {
        tsv::fail("inventory", row, "tone symbols are the digits 0-5");
      }
    } else {
      tsv::fail("inventory", row, "unknown kind '" + kind_name + "'");
    }
    if (symbol.empty() || symbol == kToneSeparator || symbol == kSyllableSeparator ||
        symbol == kWordSeparator || symbol.find(' ') != std::string::npos) {
      tsv::fail("inventory", row, "reserved or empty symbol");
    }
    if ((kind == TokenKind::kCoda) != has_coda_shape(symbol)) {
      tsv::fail("inventory", row,
                "'" + symbol + "': coda symbols, and only they, are two or more characters ending in z");
    }
    if (!inv.kinds_.emplace(symbol, kind).second) {
      tsv::fail("inventory", row, "duplicate symbol '" + symbol + "'");
    }
    inv.ordered_.push_back(symbol);
    switch (kind) {
      case TokenKind::kOnset: inv.onsets_.push_back(symbol); break;
      case TokenKind::kNucleus: inv.nuclei_.push_back(symbol); break;
      case TokenKind::kToneMark: inv.tones_.push_back(symbol); break;
      case TokenKind::kCoda: inv.codas_.push_back(symbol); break;
    }
  }
  if (inv.tones_.size() != kToneCount) {
    throw Error(ErrorCode::kDataFile, "inventory must list exactly six tones");
  }
  if (inv.nuclei_.empty()) throw Error(ErrorCode::kDataFile, "inventory lists no nuclei");
  return inv;
}

TokenKind PhonemeInventory::classify(std::string_view symbol) const {
  auto kind = try_classify(symbol);
  if (!kind) throw Error(ErrorCode::kUnknownToken, "'" + std::string(symbol) + "'");
  return *kind;
}

std::optional<TokenKind> PhonemeInventory::try_classify(std::string_view symbol) const {
  auto it = kinds_.find(symbol);
  if (it == kinds_.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::string>& PhonemeInventory::symbols(TokenKind kind) const {
  switch (kind) {
    case TokenKind::kOnset: return onsets_;
    case TokenKind::kNucleus: return nuclei_;
    case TokenKind::kToneMark: return tones_;
    case TokenKind::kCoda: return codas_;
  }
  return onsets_;
}

TokenKind classify_token(std::string_view symbol, const PhonemeInventory& inventory) {
  return inventory.classify(symbol);
}

PhoneSequence parse_phone_sequence(std::string_view text_in, const PhonemeInventory& inventory) {
  std::vector<std::string> toks = text::split_whitespace(text::nfc(text_in));
  if (toks.empty()) throw Error(ErrorCode::kMalformedSyllable, "empty phone string");

  std::vector<Group> groups(1);
  groups.back().word_start = true;
  for (std::size_t pos = 0; pos < toks.size(); ++pos) {
    const std::string& t = toks[pos];
    if (t == kSyllableSeparator || t == kWordSeparator) {
      if (groups.back().tokens.empty()) {
        throw Error(ErrorCode::kMalformedSyllable,
                    "empty syllable before position " + std::to_string(pos));
      }
      groups.emplace_back();
      groups.back().word_start = (t == kWordSeparator);
      continue;
    }
    groups.back().tokens.emplace_back(t, pos);
  }

  PhoneSequence seq;
  for (const Group& g : groups) {
    if (g.word_start) seq.word_boundaries.push_back(seq.syllables.size());
    seq.syllables.push_back(parse_group(g, inventory));
  }
  return seq;
}

SyllablePhones parse_syllable(std::string_view text_in, const PhonemeInventory& inventory) {
  PhoneSequence seq = parse_phone_sequence(text_in, inventory);
  if (seq.syllables.size() != 1) {
    throw Error(ErrorCode::kMalformedSyllable, "expected exactly one syllable");
  }
  return seq.syllables.front();
}

std::string serialize_syllable(const SyllablePhones& s) {
  std::string out;
  for (const std::string& o : s.onsets) {
    out += o;
    out += ' ';
  }
  out += s.nucleus;
  out += " - ";
  out += std::to_string(tone_index(s.tone));
  if (s.coda) {
    out += ' ';
    out += *s.coda;
  }
  return out;
}

std::string serialize_phone_sequence(const PhoneSequence& seq) {
  std::string out;
  std::size_t next_word = 0;
  for (std::size_t i = 0; i < seq.syllables.size(); ++i) {
    bool word_start = next_word < seq.word_boundaries.size() && seq.word_boundaries[next_word] == i;
    if (word_start) ++next_word;
    if (i > 0) out += word_start ? " | " : " . ";
    out += serialize_syllable(seq.syllables[i]);
  }
  return out;
}

void validate(const PhoneSequence& seq, const PhonemeInventory& inventory) {
  for (std::size_t i = 0; i < seq.word_boundaries.size(); ++i) {
    bool ok = seq.word_boundaries[i] < seq.syllables.size() &&
              (i == 0 ? seq.word_boundaries[i] == 0
                      : seq.word_boundaries[i] > seq.word_boundaries[i - 1]);
    if (!ok) throw Error(ErrorCode::kMalformedSyllable, "invalid word boundaries");
  }
  if (!seq.syllables.empty() && seq.word_boundaries.empty()) {
    throw Error(ErrorCode::kMalformedSyllable, "missing word boundaries");
  }
  auto expect = [&](const std::string& sym, TokenKind kind) {
    if (inventory.classify(sym) != kind) {
      throw Error(ErrorCode::kMalformedSyllable,
                  "'" + sym + "' is not a " + std::string(token_kind_name(kind)));
    }
  };
  for (const auto& s : seq.syllables) {
    if (s.onsets.size() > 2) throw Error(ErrorCode::kMalformedSyllable, "more than two onsets");
    for (const auto& o : s.onsets) expect(o, TokenKind::kOnset);
    expect(s.nucleus, TokenKind::kNucleus);
    if (s.coda) expect(*s.coda, TokenKind::kCoda);
  }
}

}  // namespace vietcs
