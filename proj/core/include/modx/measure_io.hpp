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

#ifndef MODX_MEASURE_IO_HPP_
#define MODX_MEASURE_IO_HPP_

#include <string>
#include <string_view>

#include "modx/measure.hpp"

namespace modx {

// {"offset": int, "weights": [float...], "truncated_mass": float}
std::string to_json(const SignedMeasure& m, int indent = -1);
SignedMeasure measure_from_json(std::string_view text);

// Header line "j,weight", then one row per support point.
std::string to_csv(const SignedMeasure& m);

}  // namespace modx

#endif  // MODX_MEASURE_IO_HPP_
