// Copyright 2026 The modx Authors.
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

// Row-oriented output shared by the subcommands: CSV with a fixed header or
// a JSON array of objects.

#ifndef MODX_TOOLS_TABLE_HPP_
#define MODX_TOOLS_TABLE_HPP_

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace modx::tools {

using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out += (i ? "," : "") + t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (const auto* d = std::get_if<double>(&row[i])) out += format_double(*d);
      else if (const auto* n = std::get_if<std::int64_t>(&row[i])) out += std::to_string(*n);
      else if (const auto* s = std::get_if<std::string>(&row[i])) out += *s;
    }
    out += '\n';
  }
  return out;
}

inline nlohmann::ordered_json to_json_value(const Table& t) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
      const auto& c = row[i];
      if (const auto* d = std::get_if<double>(&c)) obj[t.columns[i]] = *d;
      else if (const auto* n = std::get_if<std::int64_t>(&c)) obj[t.columns[i]] = *n;
      else if (const auto* s = std::get_if<std::string>(&c)) obj[t.columns[i]] = *s;
      else obj[t.columns[i]] = nullptr;
    }
    arr.push_back(std::move(obj));
  }
  return arr;
}

}  // namespace modx::tools

#endif  // MODX_TOOLS_TABLE_HPP_
