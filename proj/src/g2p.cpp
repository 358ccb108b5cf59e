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

#include "vietcs/g2p.hpp"

#include <set>

#include "tsv.hpp"
#include "vietcs/error.hpp"
#include "vietcs/text.hpp"

namespace vietcs {
namespace {

std::string field_or_empty(const std::string& f) { return f == "-" ? std::string() : f; }

std::vector<std::string> phone_list(const std::string& f) {
  if (f == "-") return {};
  return text::split_whitespace(f);
}

}  // namespace

std::optional<Dialect> dialect_from_name(std::string_view name) {
  if (name == "north") return Dialect::kNorth;
  if (name == "north-strict") return Dialect::kNorthStrict;
  return std::nullopt;
}

G2P G2P::load(const std::filesystem::path& path, Dialect dialect) {
  try {
    return parse(tsv::read_file(path), dialect);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

G2P G2P::parse(std::string_view content, Dialect dialect) {
  G2P g;
  std::vector<std::pair<std::string, std::vector<std::string>>> overrides;
  for (const tsv::Row& row : tsv::parse(content)) {
    const auto& f = row.fields;
    const std::string& kind = f[0];
    if (kind == "onset") {
      if (f.size() < 3) tsv::fail("g2p", row, "onset needs grapheme and phones");
      std::string grapheme = field_or_empty(f[1]);
      if (!g.onsets_.count(grapheme)) g.onset_order_.push_back(grapheme);
      g.onsets_[grapheme] = phone_list(f[2]);
    } else if (kind.rfind("onset@", 0) == 0) {
      if (f.size() < 3) tsv::fail("g2p", row, "onset override needs grapheme and phones");
      auto profile = dialect_from_name(kind.substr(6));
      if (!profile) tsv::fail("g2p", row, "unknown dialect profile '" + kind.substr(6) + "'");
      if (*profile == dialect) overrides.emplace_back(field_or_empty(f[1]), phone_list(f[2]));
    } else if (kind == "medial") {
      if (f.size() < 3) tsv::fail("g2p", row, "medial needs grapheme and phone");
      g.medials_[f[1]] = f[2];
    } else if (kind == "rime") {
      if (f.size() < 5) tsv::fail("g2p", row, "rime needs nucleus, coda, nucleus-phone, coda-phone");
      RimeKey key{f[1], field_or_empty(f[2])};
      RimeValue value{f[3], f[4] == "-" ? std::nullopt : std::optional<std::string>(f[4])};
      if (!g.rimes_.count(key)) g.rime_order_.push_back(key);
      g.rimes_[key] = value;
    } else {
      tsv::fail("g2p", row, "unknown row kind '" + kind + "'");
    }
  }
  for (auto& [grapheme, phones] : overrides) g.onsets_[grapheme] = phones;
  return g;
}

std::vector<std::string> G2P::onset_phones(std::string_view onset) const {
  auto it = onsets_.find(onset);
  if (it == onsets_.end()) {
    throw Error(ErrorCode::kUnmappedGrapheme, "onset '" + std::string(onset) + "'");
  }
  return it->second;
}

std::pair<std::string, std::optional<std::string>> G2P::rime_phones(std::string_view nucleus,
                                                                    std::string_view coda) const {
  auto it = rimes_.find(RimeKey{std::string(nucleus), std::string(coda)});
  if (it == rimes_.end()) {
    throw Error(ErrorCode::kUnmappedGrapheme,
                "rime '" + std::string(nucleus) + "' + '" + std::string(coda) + "'");
  }
  return {it->second.nucleus, it->second.coda};
}

SyllablePhones G2P::syllable_to_phones(const OrthoSyllable& s) const {
  SyllablePhones out;
  out.onsets = onset_phones(s.onset);
  if (!s.medial.empty()) {
    auto m = medials_.find(s.medial);
    if (m == medials_.end()) throw Error(ErrorCode::kUnmappedGrapheme, "medial '" + s.medial + "'");
    out.onsets.push_back(m->second);
  }
  auto [nucleus, coda] = rime_phones(s.nucleus, s.coda);
  out.nucleus = nucleus;
  out.coda = coda;
  out.tone = s.tone;
  return out;
}

std::optional<OrthoSyllable> G2P::phones_to_syllable(const SyllablePhones& phones,
                                                     const Orthography& orthography) const {
  // Candidate (onset, medial) spellings for the onset phones.
  std::vector<std::pair<std::string, bool>> onset_options;  // grapheme, needs medial
  for (const std::string& g : onset_order_) {
    const auto& p = onsets_.at(g);
    if (p == phones.onsets) onset_options.emplace_back(g, false);
  }
  if (!phones.onsets.empty() && phones.onsets.back() == "w") {
    std::vector<std::string> head(phones.onsets.begin(), phones.onsets.end() - 1);
    for (const std::string& g : onset_order_) {
      if (onsets_.at(g) == head) onset_options.emplace_back(g, true);
    }
  }
  for (const RimeKey& key : rime_order_) {
    const RimeValue& v = rimes_.at(key);
    if (v.nucleus != phones.nucleus || v.coda != phones.coda) continue;
    for (const auto& [onset, needs_medial] : onset_options) {
      OrthoSyllable s;
      s.nucleus = key.nucleus;
      s.coda = key.coda;
      s.tone = phones.tone;
      if (needs_medial) {
        auto m = orthography.medial_for(key.nucleus);
        if (!m) continue;
        s.medial = *m;
      }
      auto fitted = orthography.fit_onset(onset, s.medial, s.nucleus);
      if (!fitted) continue;
      s.onset = *fitted;
      if (orthography.is_legal(s)) return s;
    }
  }
  return std::nullopt;
}

std::string G2P::render(const SyllablePhones& phones, const Orthography& orthography) const {
  if (auto s = phones_to_syllable(phones, orthography)) return orthography.compose(*s);

  std::string onset;
  for (const std::string& p : phones.onsets) {
    std::string g = p;
    for (const std::string& cand : onset_order_) {
      const auto& ph = onsets_.at(cand);
      if (ph.size() == 1 && ph[0] == p) {
        g = cand;
        break;
      }
    }
    if (p == "w") g = "u";
    onset += g;
  }
  std::string nucleus = phones.nucleus, coda = phones.coda.value_or("");
  for (const RimeKey& key : rime_order_) {
    const RimeValue& v = rimes_.at(key);
    if (v.nucleus == phones.nucleus) {
      nucleus = key.nucleus;
      break;
    }
  }
  if (phones.coda) {
    for (const RimeKey& key : rime_order_) {
      const RimeValue& v = rimes_.at(key);
      if (v.coda == phones.coda) {
        coda = key.coda;
        break;
      }
    }
  }
  OrthoSyllable loose;
  loose.onset = onset;
  loose.nucleus = nucleus;
  loose.coda = coda;
  loose.tone = phones.tone;
  return spell_syllable(loose);
}

std::vector<std::string> G2P::output_symbols() const {
  std::set<std::string> out;
  for (const auto& [g, phones] : onsets_) out.insert(phones.begin(), phones.end());
  for (const auto& [m, phone] : medials_) out.insert(phone);
  for (const auto& [k, v] : rimes_) {
    out.insert(v.nucleus);
    if (v.coda) out.insert(*v.coda);
  }
  return {out.begin(), out.end()};
}

}  // namespace vietcs
