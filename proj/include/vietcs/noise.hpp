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

// Seeded noisy channel standing in for a speech-to-phone recognizer.

#ifndef VIETCS_NOISE_HPP_
#define VIETCS_NOISE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "vietcs/phoneme.hpp"

namespace vietcs {

struct PhoneClass {
  std::string name;
  std::vector<std::string> tokens;
};

struct ConfusionModel {
  double sub_rate = 0.0;
  double ins_rate = 0.0;
  double del_rate = 0.0;
  double within_class_bias = 1.0;
  std::vector<PhoneClass> classes;

  // Throws InvalidArgument unless rates are in [0,1] with sum <= 1, the bias
  // is >= 1 and the classes partition the inventory.
  void validate(const PhonemeInventory& inventory) const;

  // Name of the class holding `token`, if any.
  std::optional<std::string> class_of(std::string_view token) const;

  // "key = value" lines; class groups as "class.<name> = tok tok ...".
  static ConfusionModel load(const std::filesystem::path& path);
  static ConfusionModel parse(std::string_view content);
  std::string serialize() const;
};

// The shipped profile (noise_default.conf in the data directory).
ConfusionModel default_confusion_model();

// Same classes, different rates.
ConfusionModel with_rates(ConfusionModel model, double sub, double ins, double del);

struct CorruptionStats {
  std::size_t tokens = 0;
  std::size_t substitutions = 0;
  std::size_t insertions = 0;
  std::size_t deletions = 0;  // tokens removed, including whole-syllable removals
};

// Splitmix64 finalizer; used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed);

// Uniform double in [0,1) with 53 random bits; identical on every platform.
double uniform01(std::mt19937_64& rng);

// Substitutions keep the token kind; deleting a nucleus or tone drops the
// syllable; insertions add an onset (while fewer than two) or else a coda.
PhoneSequence corrupt(const PhoneSequence& seq, const ConfusionModel& model,
                      const PhonemeInventory& inventory, std::uint64_t seed,
                      CorruptionStats* stats = nullptr);

}  // namespace vietcs

#endif  // VIETCS_NOISE_HPP_
