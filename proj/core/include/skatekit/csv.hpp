// Copyright 2026 The Skatekit Authors
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

#ifndef SKATEKIT_CSV_HPP_
#define SKATEKIT_CSV_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace skatekit {

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

// Strict double parse of the whole field; throws std::runtime_error with
// `context` in the message on failure.
double parse_double(std::string_view field, std::string_view context);

// Splits one CSV line on commas (numeric data only, no quoting).
std::vector<std::string_view> split_fields(std::string_view line);

}  // namespace skatekit

#endif  // SKATEKIT_CSV_HPP_
