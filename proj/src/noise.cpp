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

#include "vietcs/noise.hpp"

#include <set>
#include <sstream>

#include "tsv.hpp"
#include "vietcs/error.hpp"
#include "vietcs/resources.hpp"
#include "vietcs/text.hpp"

namespace vietcs {

void ConfusionModel::validate(const PhonemeInventory& inventory) const {
  auto in_unit = [](double r) { return r >= 0.0 && r <= 1.0; };
  if (!in_unit(sub_rate) || !in_unit(ins_rate) || !in_unit(del_rate)) {
    throw Error(ErrorCode::kInvalidArgument, "noise rates must lie in [0,1]");
  }
  if (sub_rate + ins_rate + del_rate > 1.0 + 1e-12) {
    throw Error(ErrorCode::kInvalidArgument, "noise rates sum above 1");
  }
  if (!(within_class_bias >= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "within_class_bias must be >= 1");
  }
  std::map<std::string, std::string> owner;
  for (const PhoneClass& c : classes) {
    std::optional<TokenKind> kind;
    for (const std::string& t : c.tokens) {
      auto k = inventory.try_classify(t);
      if (!k) throw Error(ErrorCode::kUnknownToken, "class " + c.name + ": '" + t + "'");
      if (kind && *kind != *k) {
        throw Error(ErrorCode::kInvalidArgument, "class " + c.name + " mixes token kinds");
      }
      kind = k;
      auto [it, inserted] = owner.emplace(t, c.name);
      if (!inserted) {
        throw Error(ErrorCode::kInvalidArgument,
                    "'" + t + "' is in classes " + it->second + " and " + c.name);
      }
    }
  }
  for (const std::string& t : inventory.all_symbols()) {
    if (!owner.count(t)) throw Error(ErrorCode::kInvalidArgument, "'" + t + "' has no class");
  }
}

std::optional<std::string> ConfusionModel::class_of(std::string_view token) const {
  for (const PhoneClass& c : classes) {
    for (const std::string& t : c.tokens) {
      if (t == token) return c.name;
    }
  }
  return std::nullopt;
}

ConfusionModel ConfusionModel::load(const std::filesystem::path& path) {
  try {
    return parse(tsv::read_file(path));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

ConfusionModel ConfusionModel::parse(std::string_view content) {
  ConfusionModel m;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::istringstream in{std::string(content)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::string_view body = text::trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto fail = [&](const std::string& what) {
      throw Error(ErrorCode::kDataFile, "line " + std::to_string(line_no) + ": " + what);
    };
    std::size_t eq = body.find('=');
    if (eq == std::string_view::npos) fail("expected key = value");
    std::string key(text::trim(body.substr(0, eq)));
    std::string value(text::trim(body.substr(eq + 1)));
    if (!seen.insert(key).second) fail("duplicate key '" + key + "'");
    if (key.rfind("class.", 0) == 0) {
      PhoneClass c{key.substr(6), text::split_whitespace(value)};
      if (c.name.empty() || c.tokens.empty()) fail("empty class");
      m.classes.push_back(std::move(c));
      continue;
    }
    double number = 0.0;
    try {
      std::size_t used = 0;
      number = std::stod(value, &used);
      if (used != value.size()) fail("bad number '" + value + "'");
    } catch (const std::logic_error&) {
      fail("bad number '" + value + "'");
    }
    if (key == "sub_rate") m.sub_rate = number;
    else if (key == "ins_rate") m.ins_rate = number;
    else if (key == "del_rate") m.del_rate = number;
    else if (key == "within_class_bias") m.within_class_bias = number;
    else fail("unknown key '" + key + "'");
  }
  return m;
}

std::string ConfusionModel::serialize() const {
  std::ostringstream out;
  out.precision(17);
  out << "sub_rate = " << sub_rate << "\nins_rate = " << ins_rate << "\ndel_rate = " << del_rate
      << "\nwithin_class_bias = " << within_class_bias << "\n";
  for (const PhoneClass& c : classes) out << "class." << c.name << " = " << text::join(c.tokens, " ") << "\n";
  return out.str();
}

ConfusionModel default_confusion_model() {
  return ConfusionModel::load(default_data_dir() / "noise_default.conf");
}

ConfusionModel with_rates(ConfusionModel model, double sub, double ins, double del) {
  model.sub_rate = sub;
  model.ins_rate = ins;
  model.del_rate = del;
  return model;
}

std::uint64_t mix_seed(std::uint64_t seed) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

class Channel {
 public:
  Channel(const ConfusionModel& model, const PhonemeInventory& inventory, std::uint64_t seed)
      : model_(model), inventory_(inventory), rng_(mix_seed(seed)) {}

  // Substitute for `token` of the same kind, never the token itself.
  std::string substitute(const std::string& token) {
    TokenKind kind = inventory_.classify(token);
    auto own = model_.class_of(token);
    const auto& pool = inventory_.symbols(kind);
    std::vector<double> weights;
    double total = 0.0;
    for (const std::string& cand : pool) {
      double w = 0.0;
      if (cand != token) w = (own && model_.class_of(cand) == own) ? model_.within_class_bias : 1.0;
      weights.push_back(w);
      total += w;
    }
    if (total <= 0.0) return token;
    return pool[pick(weights, total)];
  }

  std::string random_of(TokenKind kind) {
    const auto& pool = inventory_.symbols(kind);
    std::vector<double> weights(pool.size(), 1.0);
    return pool[pick(weights, static_cast<double>(pool.size()))];
  }

  double draw() { return uniform01(rng_); }

 private:
  std::size_t pick(const std::vector<double>& weights, double total) {
    double u = draw() * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (u < weights[i]) return i;
      u -= weights[i];
    }
    for (std::size_t i = weights.size(); i > 0; --i) {
      if (weights[i - 1] > 0.0) return i - 1;
    }
    return 0;
  }

  const ConfusionModel& model_;
  const PhonemeInventory& inventory_;
  std::mt19937_64 rng_;
};

enum class Event { kKeep, kSub, kDel, kIns };

}  // namespace

PhoneSequence corrupt(const PhoneSequence& seq, const ConfusionModel& model,
                      const PhonemeInventory& inventory, std::uint64_t seed,
                      CorruptionStats* stats) {
  CorruptionStats local;
  Channel channel(model, inventory, seed);
  auto event = [&]() {
    double u = channel.draw();
    if (u < model.del_rate) return Event::kDel;
    u -= model.del_rate;
    if (u < model.sub_rate) return Event::kSub;
    u -= model.sub_rate;
    if (u < model.ins_rate) return Event::kIns;
    return Event::kKeep;
  };

  PhoneSequence out;
  std::size_t next_word = 0;
  bool pending_word_start = false;
  for (std::size_t i = 0; i < seq.syllables.size(); ++i) {
    if (next_word < seq.word_boundaries.size() && seq.word_boundaries[next_word] == i) {
      pending_word_start = true;
      ++next_word;
    }
    const SyllablePhones& in = seq.syllables[i];
    SyllablePhones syl;
    bool dropped = false;
    int inserts = 0;
    const CorruptionStats before = local;
    local.tokens += in.tokens().size();

    auto apply = [&](const std::string& token, bool essential) -> std::optional<std::string> {
      switch (event()) {
        case Event::kKeep:
          return token;
        case Event::kSub:
          ++local.substitutions;
          return channel.substitute(token);
        case Event::kDel:
          if (essential) dropped = true;
          else ++local.deletions;
          return std::nullopt;
        case Event::kIns:
          ++inserts;
          return token;
      }
      return token;
    };

    for (const std::string& o : in.onsets) {
      if (auto t = apply(o, false)) syl.onsets.push_back(*t);
    }
    auto nucleus = apply(in.nucleus, true);
    auto tone = apply(std::to_string(tone_index(in.tone)), true);
    std::optional<std::string> coda;
    if (in.coda) coda = apply(*in.coda, false);
    if (nucleus) syl.nucleus = *nucleus;
    if (tone) syl.tone = *tone_from_index(std::stoi(*tone));
    syl.coda = coda;

    if (dropped) {
      local.substitutions = before.substitutions;
      local.deletions = before.deletions + in.tokens().size();
      continue;
    }
    for (int k = 0; k < inserts; ++k) {
      if (syl.onsets.size() < 2) {
        syl.onsets.insert(syl.onsets.begin(), channel.random_of(TokenKind::kOnset));
      } else if (!syl.coda) {
        syl.coda = channel.random_of(TokenKind::kCoda);
      } else {
        continue;
      }
      ++local.insertions;
    }
    if (pending_word_start) {
      out.word_boundaries.push_back(out.syllables.size());
      pending_word_start = false;
    }
    out.syllables.push_back(std::move(syl));
  }
  if (stats) *stats = local;
  return out;
}

}  // namespace vietcs
