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

#ifndef VIETCS_ERROR_HPP_
#define VIETCS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace vietcs {

// Values are shared with the C API status codes (vietcs.h).
enum class ErrorCode : int {
  kInvalidArgument = 1,
  kDataFile = 2,
  kUnknownToken = 10,
  kMalformedSyllable = 11,
  kMultipleToneMarks = 12,
  kNotAVietnameseSyllable = 13,
  kIllegalCombination = 14,
  kUnmappedGrapheme = 15,
  kOovEnglishWord = 16,
  kUnsupportedSegment = 17,
  kUnmappedCluster = 18,
  kUnmappedRime = 19,
  kEmptyCorpus = 20,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vietcs

#endif  // VIETCS_ERROR_HPP_
