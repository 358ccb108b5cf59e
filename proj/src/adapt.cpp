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

#include "vietcs/adapt.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "tsv.hpp"
#include "vietcs/error.hpp"
#include "vietcs/text.hpp"

namespace vietcs {
namespace {

// Partial products kept per English syllable while building variants.
constexpr std::size_t kPartialBeam = 64;

std::optional<RuleSide> side_from_name(std::string_view name) {
  if (name == "vowel") return RuleSide::kVowel;
  if (name == "consonant") return RuleSide::kConsonant;
  if (name == "cluster") return RuleSide::kCluster;
  if (name == "prefix") return RuleSide::kPrefix;
  if (name == "postfix") return RuleSide::kPostfix;
  if (name == "nucleus") return RuleSide::kNucleus;
  if (name == "coda") return RuleSide::kCoda;
  return std::nullopt;
}

std::string segments_text(const std::vector<std::string>& segs) { return text::join(segs, " "); }

bool is_stop_coda(std::string_view coda) {
  return coda == "p" || coda == "t" || coda == "c" || coda == "ch";
}

std::vector<RimePiece> pieces_of(const std::string& fragment) {
  std::vector<RimePiece> out;
  for (const std::string& syl : text::split_whitespace(fragment)) {
    ToneSplit t = strip_tone(syl);
    out.push_back({t.base, t.tone});
  }
  return out;
}

using Partial = std::pair<std::vector<OrthoSyllable>, int>;

std::string spelled(const std::vector<OrthoSyllable>& syllables) {
  std::vector<std::string> parts;
  for (const OrthoSyllable& s : syllables) parts.push_back(spell_syllable(s));
  return text::join(parts, " ");
}

void sort_partials(std::vector<Partial>& v) {
  std::vector<std::pair<std::string, std::size_t>> keyed;
  keyed.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) keyed.emplace_back(spelled(v[i].first), i);
  std::vector<std::size_t> order(v.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(v[a].second, keyed[a].first) < std::tie(v[b].second, keyed[b].first);
  });
  std::vector<Partial> sorted;
  sorted.reserve(v.size());
  for (std::size_t i : order) sorted.push_back(std::move(v[i]));
  v = std::move(sorted);
}

}  // namespace

EnglishAdapter EnglishAdapter::load(const std::filesystem::path& path) {
  try {
    return parse(tsv::read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

EnglishAdapter EnglishAdapter::parse(std::string_view content) {
  EnglishAdapter a;
  for (const tsv::Row& row : tsv::parse(content)) {
    const auto& f = row.fields;
    if (f.size() < 4) tsv::fail("en_rules", row, "expected side, pattern, fragment, rank");
    auto side = side_from_name(f[0]);
    if (!side) tsv::fail("en_rules", row, "unknown side '" + f[0] + "'");
    AdaptationRule r;
    r.side = *side;
    r.pattern = text::split_whitespace(f[1]);
    r.fragment = f[2] == "-" ? std::string() : f[2];
    try {
      r.rank = std::stoi(f[3]);
    } catch (const std::exception&) {
      tsv::fail("en_rules", row, "bad rank '" + f[3] + "'");
    }
    if (r.rank < 0) tsv::fail("en_rules", row, "negative rank");
    if (f.size() > 4) r.tag = f[4];
    if (r.pattern.empty()) tsv::fail("en_rules", row, "empty pattern");
    if (r.side == RuleSide::kVowel || r.side == RuleSide::kConsonant) {
      if (r.pattern.size() != 1) tsv::fail("en_rules", row, "segment rows take one segment");
      (r.side == RuleSide::kVowel ? a.vowels_ : a.consonants_).insert(r.pattern[0]);
      a.longest_segment_ = std::max(a.longest_segment_, text::length(r.pattern[0]));
    } else if (r.side == RuleSide::kCluster) {
      a.clusters_.insert(r.pattern);
    }
    a.index_[r.side][r.pattern].push_back(a.rules_.size());
    a.rules_.push_back(std::move(r));
  }
  // Every rule pattern must be spelled in declared segments.
  for (const AdaptationRule& r : a.rules_) {
    for (std::size_t i = 0; i < r.pattern.size(); ++i) {
      const std::string& seg = r.pattern[i];
      if (seg == "_" && r.side == RuleSide::kNucleus && i + 1 == r.pattern.size()) continue;
      if (!a.is_segment(seg)) {
        throw Error(ErrorCode::kUnsupportedSegment, "rule pattern uses undeclared segment '" +
                                                        seg + "'");
      }
    }
  }
  return a;
}

const std::map<std::vector<std::string>, std::vector<std::size_t>>& EnglishAdapter::rows_of(
    RuleSide side) const {
  static const std::map<std::vector<std::string>, std::vector<std::size_t>> kNone;
  auto it = index_.find(side);
  return it == index_.end() ? kNone : it->second;
}

bool EnglishAdapter::is_vowel(std::string_view segment) const {
  return vowels_.find(segment) != vowels_.end();
}

bool EnglishAdapter::is_segment(std::string_view s) const {
  return is_vowel(s) || consonants_.find(s) != consonants_.end();
}

std::vector<std::string> EnglishAdapter::tokenize_ipa(std::string_view ipa) const {
  std::u32string cps;
  for (char32_t c : text::to_u32(text::nfc(ipa))) {
    if (c == U'ˈ' || c == U'ˌ' || c == U'.' || c == U'‿' || c == U' ' || c == U'\t') continue;
    if (c == U'ɡ') c = U'g';
    if (c == U'ɹ') c = U'r';
    cps.push_back(c);
  }
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < cps.size()) {
    std::size_t take = 0;
    for (std::size_t n = std::min(longest_segment_, cps.size() - i); n > 0; --n) {
      if (is_segment(text::to_utf8(std::u32string_view(cps).substr(i, n)))) {
        take = n;
        break;
      }
    }
    if (take == 0) {
      throw Error(ErrorCode::kUnsupportedSegment,
                  "'" + text::to_utf8(cps[i]) + "' in /" + std::string(ipa) + "/");
    }
    out.push_back(text::to_utf8(std::u32string_view(cps).substr(i, take)));
    i += take;
  }
  return out;
}

bool EnglishAdapter::legal_onset(const std::vector<std::string>& cluster) const {
  if (cluster.size() == 1) return cluster[0] != "ŋ";
  return clusters_.count(cluster) > 0;
}

bool EnglishAdapter::mergeable(const std::vector<std::string>& vowels) const {
  for (RuleSide side : {RuleSide::kPostfix, RuleSide::kNucleus}) {
    auto it = index_.find(side);
    if (it == index_.end()) continue;
    for (const auto& [pattern, rows] : it->second) {
      if (pattern.size() >= vowels.size() &&
          std::equal(vowels.begin(), vowels.end(), pattern.begin())) {
        return true;
      }
    }
  }
  return false;
}

std::vector<EnglishSyllable> EnglishAdapter::split_ipa(const IpaWord& word) const {
  const auto& segs = word.segments;
  if (segs.empty()) throw Error(ErrorCode::kInvalidArgument, "empty IPA for '" + word.word + "'");
  for (const std::string& s : segs) {
    if (!is_segment(s)) {
      throw Error(ErrorCode::kUnsupportedSegment, "'" + s + "' in '" + word.word + "'");
    }
  }
  // Vowel groups as [begin, end) index ranges.
  std::vector<std::pair<std::size_t, std::size_t>> nuclei;
  for (std::size_t i = 0; i < segs.size();) {
    if (!is_vowel(segs[i])) {
      ++i;
      continue;
    }
    std::vector<std::string> group{segs[i]};
    std::size_t j = i + 1;
    while (j < segs.size() && is_vowel(segs[j])) {
      group.push_back(segs[j]);
      if (!mergeable(group)) {
        group.pop_back();
        break;
      }
      ++j;
    }
    nuclei.emplace_back(i, j);
    i = j;
  }
  if (nuclei.empty()) {
    throw Error(ErrorCode::kUnsupportedSegment, "no vowel in '" + word.word + "'");
  }

  std::vector<EnglishSyllable> out(nuclei.size());
  out[0].prefix.assign(segs.begin(), segs.begin() + nuclei[0].first);
  for (std::size_t k = 0; k < nuclei.size(); ++k) {
    auto [b, e] = nuclei[k];
    out[k].postfix.assign(segs.begin() + b, segs.begin() + e);
    std::size_t next = k + 1 < nuclei.size() ? nuclei[k + 1].first : segs.size();
    std::vector<std::string> between(segs.begin() + e, segs.begin() + next);
    std::size_t split = between.size();
    if (k + 1 < nuclei.size()) {
      for (std::size_t i = 0; i < between.size(); ++i) {
        if (legal_onset({between.begin() + i, between.end()})) {
          split = i;
          break;
        }
      }
    }
    out[k].postfix.insert(out[k].postfix.end(), between.begin(), between.begin() + split);
    if (k + 1 < nuclei.size()) out[k + 1].prefix.assign(between.begin() + split, between.end());
  }
  for (EnglishSyllable& syl : out) {
    if (syl.prefix.size() >= 2 && syl.prefix.back() == "j") {
      syl.prefix.pop_back();
      syl.postfix.insert(syl.postfix.begin(), "j");
    }
  }
  return out;
}

std::vector<OnsetChoice> EnglishAdapter::map_prefix(const std::vector<std::string>& cluster) const {
  if (cluster.empty()) return {OnsetChoice{{""}, 0}};
  const auto& rows = rows_of(RuleSide::kPrefix);
  auto choices_for = [&](const std::vector<std::size_t>& ids) {
    std::vector<OnsetChoice> out;
    for (std::size_t id : ids) {
      const AdaptationRule& r = rules_[id];
      OnsetChoice c;
      c.rank = r.rank;
      if (r.fragment.empty()) {
        c.graphemes.push_back("");
      } else {
        c.graphemes = text::split_whitespace(r.fragment);
      }
      out.push_back(std::move(c));
    }
    return out;
  };

  std::vector<OnsetChoice> result{OnsetChoice{{}, 0}};
  std::size_t i = 0;
  while (i < cluster.size()) {
    std::size_t best = 0;
    for (std::size_t j = cluster.size(); j > i; --j) {
      if (rows.count({cluster.begin() + i, cluster.begin() + j})) {
        best = j;
        break;
      }
    }
    if (best == 0) {
      throw Error(ErrorCode::kUnmappedCluster, "/" + segments_text(cluster) + "/");
    }
    std::vector<OnsetChoice> piece =
        choices_for(rows.at({cluster.begin() + i, cluster.begin() + best}));
    std::vector<OnsetChoice> next;
    for (const OnsetChoice& a : result) {
      for (const OnsetChoice& b : piece) {
        OnsetChoice c = a;
        c.rank += b.rank;
        for (const std::string& g : b.graphemes) {
          if (!g.empty() || c.graphemes.empty()) c.graphemes.push_back(g);
        }
        next.push_back(std::move(c));
      }
    }
    result = std::move(next);
    i = best;
  }
  std::stable_sort(result.begin(), result.end(), [](const OnsetChoice& a, const OnsetChoice& b) {
    return std::tie(a.rank, a.graphemes) < std::tie(b.rank, b.graphemes);
  });
  return result;
}

std::vector<RimeChoice> EnglishAdapter::compose_rime(const std::vector<std::string>& nucleus,
                                                     const std::vector<std::string>& coda) const {
  std::vector<RimeChoice> out;
  const auto& nuclei = rows_of(RuleSide::kNucleus);
  if (coda.empty()) {
    auto it = nuclei.find(nucleus);
    if (it == nuclei.end()) return out;
    for (std::size_t id : it->second) {
      out.push_back(RimeChoice{pieces_of(rules_[id].fragment), rules_[id].rank});
    }
    return out;
  }
  std::vector<std::string> closed = nucleus;
  closed.push_back("_");
  auto n = nuclei.find(closed);
  const auto& codas = rows_of(RuleSide::kCoda);
  auto c = codas.find(coda);
  if (n == nuclei.end() || c == codas.end()) return out;
  for (std::size_t nid : n->second) {
    for (std::size_t cid : c->second) {
      const std::string& coda_g = rules_[cid].fragment;
      RimePiece piece{rules_[nid].fragment + coda_g,
                      is_stop_coda(coda_g) ? Tone::kSac : Tone::kNgang};
      out.push_back(RimeChoice{{piece}, rules_[nid].rank + rules_[cid].rank});
    }
  }
  return out;
}

std::vector<RimeChoice> EnglishAdapter::map_rime(const std::vector<std::string>& postfix) const {
  std::vector<RimeChoice> out;
  const auto& postfixes = rows_of(RuleSide::kPostfix);
  if (auto it = postfixes.find(postfix); it != postfixes.end()) {
    for (std::size_t id : it->second) {
      out.push_back(RimeChoice{pieces_of(rules_[id].fragment), rules_[id].rank});
    }
  } else {
    std::size_t last = postfix.size();
    for (std::size_t i = postfix.size(); i > 0; --i) {
      if (is_vowel(postfix[i - 1])) {
        last = i - 1;
        break;
      }
    }
    if (last < postfix.size()) {
      out = compose_rime({postfix.begin(), postfix.begin() + last + 1},
                         {postfix.begin() + last + 1, postfix.end()});
    }
  }
  if (out.empty()) throw Error(ErrorCode::kUnmappedRime, "/" + segments_text(postfix) + "/");
  std::stable_sort(out.begin(), out.end(), [](const RimeChoice& a, const RimeChoice& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    std::vector<std::pair<std::string, int>> ka, kb;
    for (const RimePiece& p : a.pieces) ka.emplace_back(p.base, tone_index(p.tone));
    for (const RimePiece& p : b.pieces) kb.emplace_back(p.base, tone_index(p.tone));
    return ka < kb;
  });
  return out;
}

std::vector<Partial> EnglishAdapter::realize(const EnglishSyllable& syl,
                                             const Orthography& orth) const {
  struct Unit {
    std::string onset;
    bool glide = false;
  };
  auto make = [&](const Unit& unit, const RimePiece& piece) -> std::optional<OrthoSyllable> {
    auto rime = split_rime(piece.base, orth);
    if (!rime) return std::nullopt;
    OrthoSyllable s;
    s.nucleus = rime->first;
    s.coda = rime->second;
    s.tone = piece.tone;
    if (unit.glide) {
      auto m = orth.medial_for(s.nucleus);
      if (!m) return std::nullopt;
      s.medial = *m;
    }
    auto onset = orth.fit_onset(unit.onset, s.medial, s.nucleus);
    if (!onset) return std::nullopt;
    s.onset = *onset;
    if (!orth.is_legal(s)) return std::nullopt;
    s.raw = spell_syllable(s);
    return s;
  };

  std::vector<Partial> out;
  for (const OnsetChoice& onset : map_prefix(syl.prefix)) {
    std::vector<Unit> units;
    for (const std::string& g : onset.graphemes) {
      if (g == "+w") {
        if (units.empty()) units.push_back({"", true});
        else units.back().glide = true;
      } else {
        units.push_back({g, false});
      }
    }
    if (units.empty()) units.push_back({});
    for (const RimeChoice& rime : map_rime(syl.postfix)) {
      std::vector<OrthoSyllable> syllables;
      bool ok = true;
      for (std::size_t u = 0; ok && u + 1 < units.size(); ++u) {
        auto s = make(units[u], RimePiece{"ơ", Tone::kNgang});
        if (s) syllables.push_back(*s);
        else ok = false;
      }
      for (std::size_t p = 0; ok && p < rime.pieces.size(); ++p) {
        auto s = make(p == 0 ? units.back() : Unit{}, rime.pieces[p]);
        if (s) syllables.push_back(*s);
        else ok = false;
      }
      if (ok) out.emplace_back(std::move(syllables), onset.rank + rime.rank);
    }
  }
  return out;
}

std::vector<VariantPronunciation> EnglishAdapter::adapt_word(const IpaWord& word,
                                                             const Orthography& orthography,
                                                             const AdaptOptions& options) const {
  try {
    std::vector<EnglishSyllable> syllables = split_ipa(word);
    std::vector<Partial> partial{{{}, 0}};
    for (const EnglishSyllable& syl : syllables) {
      std::vector<Partial> options_here = realize(syl, orthography);
      if (options_here.empty()) {
        throw Error(ErrorCode::kUnmappedRime, "no legal Vietnamese spelling for /" +
                                                  segments_text(syl.prefix) + " + " +
                                                  segments_text(syl.postfix) + "/");
      }
      std::vector<Partial> next;
      for (const Partial& a : partial) {
        for (const Partial& b : options_here) {
          Partial c = a;
          c.first.insert(c.first.end(), b.first.begin(), b.first.end());
          c.second += b.second;
          next.push_back(std::move(c));
        }
      }
      sort_partials(next);
      if (next.size() > kPartialBeam) next.resize(kPartialBeam);
      partial = std::move(next);
    }

    // Ranks are relative: the best phonetic spelling is always rank 0.
    const int best = partial.front().second;
    for (Partial& p : partial) p.second -= best;
    int shift = 0;
    if (options.grapheme_variant && syllables.size() >= 2) {
      if (auto g = grapheme_syllables(word.word, syllables.size(), orthography)) {
        partial.insert(partial.begin(), Partial{*g, 0});
        shift = 1;
      }
    }
    std::vector<VariantPronunciation> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < partial.size(); ++i) {
      VariantPronunciation v;
      v.syllables = std::move(partial[i].first);
      v.text = spelled(v.syllables);
      v.rank = partial[i].second + (i == 0 ? 0 : shift);
      if (seen.insert(v.text).second) out.push_back(std::move(v));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const VariantPronunciation& a, const VariantPronunciation& b) {
                       return std::tie(a.rank, a.text) < std::tie(b.rank, b.text);
                     });
    if (out.size() > options.max_variants) out.resize(options.max_variants);
    return out;
  } catch (const Error& e) {
    throw Error(e.code(), "word '" + word.word + "': " + e.what());
  }
}

std::optional<std::pair<std::string, std::string>> split_rime(std::string_view base,
                                                              const Orthography& orthography) {
  std::vector<std::string> nuclei = orthography.nuclei();
  std::stable_sort(nuclei.begin(), nuclei.end(), [](const std::string& a, const std::string& b) {
    return a.size() > b.size();
  });
  for (const std::string& n : nuclei) {
    if (base.substr(0, n.size()) != n) continue;
    std::string coda(base.substr(n.size()));
    auto codas = orthography.codas_for(n);
    if (std::find(codas.begin(), codas.end(), coda) != codas.end()) return std::pair{n, coda};
  }
  return std::nullopt;
}

std::string rime_text(const RimePiece& piece, const Orthography& orthography) {
  auto rime = split_rime(piece.base, orthography);
  if (!rime) return piece.base;
  OrthoSyllable s;
  s.nucleus = rime->first;
  s.coda = rime->second;
  s.tone = piece.tone;
  return spell_syllable(s);
}

SyllablePhones cluster_phones(const OnsetChoice& onset, const RimePiece& rime,
                              const Orthography& orthography, const G2P& g2p) {
  SyllablePhones out;
  for (const std::string& g : onset.graphemes) {
    if (g.empty()) continue;
    if (g == "+w") {
      out.onsets.push_back("w");
      continue;
    }
    for (const std::string& p : g2p.onset_phones(g)) out.onsets.push_back(p);
  }
  if (out.onsets.size() > 2) {
    throw Error(ErrorCode::kUnmappedCluster,
                "more than two onsets in '" + text::join(onset.graphemes, " ") + "'");
  }
  auto split = split_rime(rime.base, orthography);
  if (!split) throw Error(ErrorCode::kUnmappedRime, "rime '" + rime.base + "'");
  auto [nucleus, coda] = g2p.rime_phones(split->first, split->second);
  out.nucleus = nucleus;
  out.coda = coda;
  out.tone = rime.tone;
  return out;
}

std::optional<std::vector<OrthoSyllable>> grapheme_syllables(std::string_view word,
                                                             std::size_t count,
                                                             const Orthography& orthography) {
  std::u32string cps = text::to_u32(text::lowercase(text::nfc(word)));
  if (cps.empty() || cps.size() > 24 || count == 0) return std::nullopt;
  for (char32_t c : cps) {
    if (c < U'a' || c > U'z') return std::nullopt;
  }
  // Best segmentation: fewest onsetless syllables, then longer leading pieces.
  std::optional<std::vector<OrthoSyllable>> best;
  std::pair<std::size_t, std::vector<std::size_t>> best_key;
  std::vector<OrthoSyllable> current;
  std::vector<std::size_t> lengths;
  std::function<void(std::size_t)> walk = [&](std::size_t pos) {
    if (current.size() > count) return;
    if (pos == cps.size()) {
      if (current.size() != count) return;
      std::size_t onsetless = 0;
      for (const OrthoSyllable& s : current) onsetless += s.onset.empty();
      std::vector<std::size_t> neg;
      for (std::size_t l : lengths) neg.push_back(cps.size() - l);
      std::pair key{onsetless, neg};
      if (!best || key < best_key) {
        best = current;
        best_key = key;
      }
      return;
    }
    for (std::size_t n = cps.size() - pos; n > 0; --n) {
      std::string piece = text::to_utf8(std::u32string_view(cps).substr(pos, n));
      auto s = orthography.try_decompose(piece);
      if (!s || s->tone != Tone::kNgang) continue;
      current.push_back(*s);
      lengths.push_back(n);
      walk(pos + n);
      current.pop_back();
      lengths.pop_back();
    }
  };
  walk(0);
  return best;
}

PronouncingDictionary PronouncingDictionary::load(const std::filesystem::path& path) {
  try {
    return parse(tsv::read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

PronouncingDictionary PronouncingDictionary::parse(std::string_view content) {
  PronouncingDictionary d;
  for (const tsv::Row& row : tsv::parse(content)) {
    if (row.fields.size() < 2) tsv::fail("dictionary", row, "expected word and IPA");
    d.entries_.try_emplace(text::lowercase(row.fields[0]), row.fields[1]);
  }
  return d;
}

std::optional<std::string> PronouncingDictionary::lookup(std::string_view word) const {
  auto it = entries_.find(text::lowercase(text::nfc(word)));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

}  // namespace vietcs
