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

// Shared fixtures for the unit suites.

#ifndef VIETCS_TESTS_SUPPORT_HPP_
#define VIETCS_TESTS_SUPPORT_HPP_

#include <string>
#include <vector>

#include "vietcs/error.hpp"
#include "vietcs/resources.hpp"

namespace vietcs::testing {

// Loaded once per process from the shipped data directory.
inline const Resources& shipped() {
  static const Resources res = Resources::load_default();
  return res;
}

inline PhoneSequence phones(const std::string& text) {
  return parse_phone_sequence(text, shipped().inventory);
}

}  // namespace vietcs::testing

// Asserts that `stmt` throws vietcs::Error carrying `code`.
#define EXPECT_VCS_ERROR(stmt, code_value)                                  \
  do {                                                                      \
    try {                                                                   \
      stmt;                                                                 \
      ADD_FAILURE() << "expected " #code_value " from " #stmt;              \
    } catch (const ::vietcs::Error& err__) {                                \
      EXPECT_EQ(err__.code(), code_value) << err__.what();                  \
    }                                                                       \
  } while (0)

#endif  // VIETCS_TESTS_SUPPORT_HPP_
