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

// Table-driven grapheme-to-phone conversion for Vietnamese syllables.

#ifndef VIETCS_G2P_HPP_
#define VIETCS_G2P_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vietcs/phoneme.hpp"
#include "vietcs/syllable.hpp"

namespace vietcs {

// kNorthStrict additionally merges r into z.
enum class Dialect { kNorth, kNorthStrict };

std::optional<Dialect> dialect_from_name(std::string_view name);

class G2P {
 public:
  G2P() = default;

  static G2P load(const std::filesystem::path& path, Dialect dialect = Dialect::kNorth);
  static G2P parse(std::string_view content, Dialect dialect = Dialect::kNorth);

  // Throws UnmappedGrapheme when the tables have no row for a grapheme.
  SyllablePhones syllable_to_phones(const OrthoSyllable& s) const;

  std::vector<std::string> onset_phones(std::string_view onset) const;
  std::pair<std::string, std::optional<std::string>> rime_phones(std::string_view nucleus,
                                                                 std::string_view coda) const;

  // Inverse lookup: the first legal spelling (in table order) of a phone syllable.
  std::optional<OrthoSyllable> phones_to_syllable(const SyllablePhones& phones,
                                                  const Orthography& orthography) const;

  // Always returns something readable: the legal spelling when one exists,
  // otherwise graphemes glued together with the tone mark on the first vowel.
  std::string render(const SyllablePhones& phones, const Orthography& orthography) const;

  // Every phone symbol that some table row can emit.
  std::vector<std::string> output_symbols() const;

 private:
  struct RimeKey {
    std::string nucleus;
    std::string coda;
    auto operator<=>(const RimeKey&) const = default;
  };
  struct RimeValue {
    std::string nucleus;
    std::optional<std::string> coda;
  };

  std::map<std::string, std::vector<std::string>, std::less<>> onsets_;
  std::vector<std::string> onset_order_;
  std::map<std::string, std::string, std::less<>> medials_;
  std::map<RimeKey, RimeValue> rimes_;
  std::vector<RimeKey> rime_order_;
};

}  // namespace vietcs

#endif  // VIETCS_G2P_HPP_
