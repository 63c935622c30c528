// Copyright 2026 The polishtop Authors
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

#pragma once

#include <iosfwd>
#include <string>

#include "polishtop/checkers.hpp"

namespace polishtop {

// Textual verdict log. Each verdict is one block:
//
//   verdict <property> <status>
//   n_points <n>
//   max_path_len <m>
//   tuple_budget <b>
//   eps <q> ...
//   delta <q> ...
//   note <text>
//   item <kind> points <p> ... params <q> ...
//   end
//
// preceded by a single `report <label>` line. Rationals are written as
// num/den so a parsed report replays bit-exactly.
void render_report(std::ostream& out, const CompositeReport& report);
std::string render_report(const CompositeReport& report);

// Throws ParseError naming the offending line.
CompositeReport parse_report(std::istream& in);
CompositeReport parse_report(const std::string& text);

}  // namespace polishtop
