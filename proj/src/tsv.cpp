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

#include "tsv.hpp"

#include <fstream>
#include <sstream>

#include "vietcs/error.hpp"
#include "vietcs/text.hpp"

namespace vietcs::tsv {

std::vector<Row> parse(std::string_view content) {
  std::vector<Row> rows;
  std::size_t line_no = 0;
  for (std::string& line : text::split(content, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    rows.push_back({line_no, text::split(text::nfc(line), '\t')});
  }
  return rows;
}

std::vector<Row> read(const std::filesystem::path& path) { return parse(read_file(path)); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kDataFile, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kDataFile, "cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

void fail(std::string_view source, const Row& row, const std::string& what) {
  throw Error(ErrorCode::kDataFile,
              std::string(source) + ":" + std::to_string(row.line) + ": " + what);
}

}  // namespace vietcs::tsv
