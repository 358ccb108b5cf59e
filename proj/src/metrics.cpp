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

#include "vietcs/metrics.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "vietcs/text.hpp"

namespace vietcs {

std::string_view edit_op_name(EditOp op) {
  switch (op) {
    case EditOp::kMatch: return "match";
    case EditOp::kSub: return "sub";
    case EditOp::kIns: return "ins";
    case EditOp::kDel: return "del";
  }
  return "?";
}

double AlignmentReport::rate() const {
  return static_cast<double>(distance) / static_cast<double>(std::max<std::size_t>(1, ref_length));
}

AlignmentReport edit_distance(const std::vector<std::string>& ref,
                              const std::vector<std::string>& hyp) {
  const std::size_t n = ref.size(), m = hyp.size();
  std::vector<std::vector<std::size_t>> d(n + 1, std::vector<std::size_t>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= m; ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t diag = d[i - 1][j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      d[i][j] = std::min({diag, d[i - 1][j] + 1, d[i][j - 1] + 1});
    }
  }

  AlignmentReport r;
  r.distance = d[n][m];
  r.ref_length = n;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] && d[i][j] == d[i - 1][j - 1]) {
      r.ops.push_back({EditOp::kMatch, i - 1, j - 1});
      --i, --j;
    } else if (i > 0 && j > 0 && d[i][j] == d[i - 1][j - 1] + 1) {
      r.ops.push_back({EditOp::kSub, i - 1, j - 1});
      ++r.substitutions;
      --i, --j;
    } else if (i > 0 && d[i][j] == d[i - 1][j] + 1) {
      r.ops.push_back({EditOp::kDel, i - 1, j});
      ++r.deletions;
      --i;
    } else {
      r.ops.push_back({EditOp::kIns, i, j - 1});
      ++r.insertions;
      --j;
    }
  }
  std::reverse(r.ops.begin(), r.ops.end());
  return r;
}

std::vector<std::string> normalize_for_scoring(std::string_view sentence,
                                               const TextNormalization& norm) {
  std::vector<std::string> out;
  std::string s = text::nfc(sentence);
  if (norm.lowercase) s = text::lowercase(s);
  for (const std::string& tok : text::split_whitespace(s)) {
    std::string t = norm.strip_punctuation ? text::strip_punctuation(tok) : tok;
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

AlignmentReport word_alignment(std::string_view ref, std::string_view hyp,
                               const TextNormalization& norm) {
  return edit_distance(normalize_for_scoring(ref, norm), normalize_for_scoring(hyp, norm));
}

double wer(std::string_view ref, std::string_view hyp, const TextNormalization& norm) {
  return word_alignment(ref, hyp, norm).rate();
}

double per(const PhoneSequence& ref, const PhoneSequence& hyp) {
  return edit_distance(ref.tokens(), hyp.tokens()).rate();
}

double CorpusReport::wer() const {
  return static_cast<double>(word_errors) / static_cast<double>(std::max<std::size_t>(1, ref_words));
}

double CorpusReport::per() const {
  return static_cast<double>(phone_errors) /
         static_cast<double>(std::max<std::size_t>(1, ref_phones));
}

std::vector<std::pair<std::pair<std::string, std::string>, std::size_t>>
CorpusReport::top_confusions(std::size_t limit) const {
  std::vector<std::pair<std::pair<std::string, std::string>, std::size_t>> out(confusions.begin(),
                                                                               confusions.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (out.size() > limit) out.resize(limit);
  return out;
}

std::string CorpusReport::to_text(std::size_t confusion_limit) const {
  char buf[64];
  std::string out;
  auto line = [&](const std::string& k, const std::string& v) { out += k + ": " + v + "\n"; };
  line("pairs", std::to_string(pairs));
  std::snprintf(buf, sizeof buf, "%.6f", wer());
  line("wer", buf);
  line("ref_words", std::to_string(ref_words));
  line("word_errors", std::to_string(word_errors));
  line("substitutions", std::to_string(word_substitutions));
  line("insertions", std::to_string(word_insertions));
  line("deletions", std::to_string(word_deletions));
  if (has_phones) {
    std::snprintf(buf, sizeof buf, "%.6f", per());
    line("per", buf);
    line("ref_phones", std::to_string(ref_phones));
    line("phone_errors", std::to_string(phone_errors));
  }
  for (const auto& [pair, count] : top_confusions(confusion_limit)) {
    line("confusion", pair.first + " -> " + pair.second + " " + std::to_string(count));
  }
  return out;
}

std::string CorpusReport::to_json(std::size_t confusion_limit) const {
  nlohmann::ordered_json j;
  j["pairs"] = pairs;
  j["wer"] = wer();
  j["ref_words"] = ref_words;
  j["word_errors"] = word_errors;
  j["substitutions"] = word_substitutions;
  j["insertions"] = word_insertions;
  j["deletions"] = word_deletions;
  if (has_phones) {
    j["per"] = per();
    j["ref_phones"] = ref_phones;
    j["phone_errors"] = phone_errors;
  }
  j["confusions"] = nlohmann::ordered_json::array();
  for (const auto& [pair, count] : top_confusions(confusion_limit)) {
    j["confusions"].push_back({{"ref", pair.first}, {"hyp", pair.second}, {"count", count}});
  }
  return j.dump();
}

void CorpusScorer::add_text(std::string_view ref, std::string_view hyp) {
  std::vector<std::string> r = normalize_for_scoring(ref, norm_);
  std::vector<std::string> h = normalize_for_scoring(hyp, norm_);
  AlignmentReport a = edit_distance(r, h);
  ++report_.pairs;
  report_.ref_words += a.ref_length;
  report_.word_errors += a.distance;
  report_.word_substitutions += a.substitutions;
  report_.word_insertions += a.insertions;
  report_.word_deletions += a.deletions;
  for (const AlignedOp& op : a.ops) {
    if (op.op == EditOp::kSub) ++report_.confusions[{r[op.ref_pos], h[op.hyp_pos]}];
  }
}

void CorpusScorer::add_phones(const PhoneSequence& ref, const PhoneSequence& hyp) {
  AlignmentReport a = edit_distance(ref.tokens(), hyp.tokens());
  report_.has_phones = true;
  report_.ref_phones += a.ref_length;
  report_.phone_errors += a.distance;
}

void CorpusScorer::merge(const CorpusReport& o) {
  report_.pairs += o.pairs;
  report_.ref_words += o.ref_words;
  report_.word_errors += o.word_errors;
  report_.word_substitutions += o.word_substitutions;
  report_.word_insertions += o.word_insertions;
  report_.word_deletions += o.word_deletions;
  report_.ref_phones += o.ref_phones;
  report_.phone_errors += o.phone_errors;
  report_.has_phones = report_.has_phones || o.has_phones;
  for (const auto& [k, v] : o.confusions) report_.confusions[k] += v;
}

CorpusReport corpus_report(const std::vector<std::pair<std::string, std::string>>& pairs,
                           const TextNormalization& norm) {
  CorpusScorer scorer(norm);
  for (const auto& [ref, hyp] : pairs) scorer.add_text(ref, hyp);
  return scorer.report();
}

}  // namespace vietcs
