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

#include "skatekit/free_decay.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "skatekit/csv.hpp"

namespace skatekit {

FreeDecayTrace read_free_decay_csv(std::istream& in) {
  FreeDecayTrace trace;
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != "t,roll") {
        throw std::runtime_error("free-decay csv line 1: expected header "
                                 "\"t,roll\", got \"" + line + "\"");
      }
      saw_header = true;
      continue;
    }
    const auto fields = split_fields(line);
    if (fields.size() != 2) {
      throw std::runtime_error("free-decay csv line " +
                               std::to_string(line_no) +
                               ": expected 2 fields");
    }
    const std::string context = "free-decay csv line " + std::to_string(line_no);
    const double t = parse_double(fields[0], context);
    const double roll = parse_double(fields[1], context);
    if (!trace.samples.empty() && !(t > trace.samples.back().t)) {
      throw std::runtime_error(context + ": time must be strictly increasing");
    }
    trace.samples.push_back({t, roll});
  }
  if (!saw_header) {
    throw std::runtime_error("free-decay csv: empty file");
  }
  return trace;
}

void write_free_decay_csv(const FreeDecayTrace& trace, std::ostream& out) {
  out << "t,roll\n";
  for (const FreeDecaySample& s : trace.samples) {
    out << format_double(s.t) << ',' << format_double(s.roll) << '\n';
  }
}

}  // namespace skatekit
