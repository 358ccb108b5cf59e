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

#include <json.hpp>

#include "vietcs/dataset.hpp"
#include "vietcs/error.hpp"
#include "vietcs/text.hpp"

namespace vietcs {

using ordered_json = nlohmann::ordered_json;

std::string record_to_json(const CsRecord& record) {
  ordered_json j;
  j["id"] = record.id;
  j["reference"] = record.reference;
  j["localized"] = record.localized;
  j["phones"] = serialize_phone_sequence(record.phones);
  ordered_json choices = ordered_json::object();
  for (const auto& [pos, rank] : record.variant_choices) choices[std::to_string(pos)] = rank;
  j["variant_choices"] = choices;
  return j.dump();
}

CsRecord record_from_json(std::string_view line, const PhonemeInventory& inventory) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kDataFile, std::string("malformed record: ") + e.what());
  }
  try {
    CsRecord r;
    r.id = j.at("id").get<std::string>();
    r.reference = j.at("reference").get<std::string>();
    r.localized = j.at("localized").get<std::string>();
    const std::string phones = j.at("phones").get<std::string>();
    if (!text::trim(phones).empty()) r.phones = parse_phone_sequence(phones, inventory);
    if (j.contains("variant_choices")) {
      for (const auto& [pos, rank] : j.at("variant_choices").items()) {
        r.variant_choices[std::stoul(pos)] = rank.get<int>();
      }
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kDataFile, std::string("bad record field: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorCode::kDataFile, std::string("bad variant position: ") + e.what());
  }
}

std::string reject_to_json(const RejectedLine& reject) {
  ordered_json j;
  j["line_no"] = reject.line_no;
  j["reason"] = reject.reason;
  return j.dump();
}

std::vector<CsRecord> parse_records(std::string_view content, const PhonemeInventory& inventory) {
  std::vector<CsRecord> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = text::trim(content.substr(start, end - start));
    ++line_no;
    if (!line.empty()) {
      try {
        out.push_back(record_from_json(line, inventory));
      } catch (const Error& e) {
        throw Error(e.code(), "record line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (end == content.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace vietcs
