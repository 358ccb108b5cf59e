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

// Line-oriented table files shared by every data table in data/.

#ifndef VIETCS_SRC_TSV_HPP_
#define VIETCS_SRC_TSV_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace vietcs::tsv {

struct Row {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

// Tab-separated, UTF-8 (NFC-normalized on read). Blank lines and lines whose
// first non-space character is '#' are skipped.
std::vector<Row> parse(std::string_view content);
std::vector<Row> read(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Throws DataFile naming `source` and the row's line.
[[noreturn]] void fail(std::string_view source, const Row& row, const std::string& what);

}  // namespace vietcs::tsv

#endif  // VIETCS_SRC_TSV_HPP_
