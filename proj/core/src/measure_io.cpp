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

#include "modx/measure_io.hpp"

#include <cstdint>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "modx/errors.hpp"

namespace modx {

std::string to_json(const SignedMeasure& m, int indent) {
  nlohmann::ordered_json j;
  j["offset"] = m.offset();
  j["weights"] = std::vector<double>(m.weights().begin(), m.weights().end());
  j["truncated_mass"] = m.truncated_mass();
  return j.dump(indent);
}

SignedMeasure measure_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError(std::string("measure JSON does not parse: ") +
                            e.what());
  }
  require(j.is_object() && j.contains("offset") && j.contains("weights"),
          "measure JSON needs \"offset\" and \"weights\"");
  require(j["offset"].is_number_integer(), "\"offset\" must be an integer");
  require(j["weights"].is_array(), "\"weights\" must be an array");
  std::vector<double> w;
  w.reserve(j["weights"].size());
  for (const auto& x : j["weights"]) {
    require(x.is_number(), "\"weights\" entries must be numbers");
    w.push_back(x.get<double>());
  }
  double tm = 0.0;
  if (j.contains("truncated_mass")) {
    require(j["truncated_mass"].is_number(),
            "\"truncated_mass\" must be a number");
    tm = j["truncated_mass"].get<double>();
  }
  return SignedMeasure(j["offset"].get<std::int64_t>(), std::move(w), tm);
}

std::string to_csv(const SignedMeasure& m) {
  std::ostringstream out;
  out.precision(17);
  out << "j,weight\n";
  for (std::int64_t j = m.offset(); j <= m.last(); ++j) {
    out << j << ',' << m.at(j) << '\n';
  }
  return out.str();
}

}  // namespace modx
