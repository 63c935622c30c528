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

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace polishtop {

// A finite stage table: column n holds the stages at which an element
// entered W_n. The table is the whole input; |W_n| is the column size.
class WTable {
 public:
  WTable() = default;

  // Throws ParameterError for negative values or a stage >= horizon.
  void add(int column, int stage);

  const std::set<int>& column(int n) const;
  std::size_t column_size(int n) const { return column(n).size(); }

  // |W_n[i]| = |{m in W_n : m < i}|.
  std::size_t count_below(int n, int i) const;

  bool contains(int n, int stage) const { return column(n).count(stage) > 0; }

  const std::map<int, std::set<int>>& columns() const { return columns_; }

  // Stages are unbounded unless a horizon is set; every stored stage must be
  // below it.
  std::optional<int> horizon() const { return horizon_; }
  void set_horizon(int horizon);

  // Lowest column containing `stage`, if any.
  std::optional<int> lowest_column_with(int stage) const;

  friend bool operator==(const WTable&, const WTable&) = default;

 private:
  std::map<int, std::set<int>> columns_;
  std::optional<int> horizon_;
};

// File format: optional `horizon <s>` line, then `col <n> : <s1> <s2> ...`
// lines. Blank lines and lines starting with '#' are ignored.
void write_w_table(std::ostream& out, const WTable& w);
std::string w_table_to_string(const WTable& w);
WTable read_w_table(std::istream& in);
WTable w_table_from_string(const std::string& text);

// Table of tables for the chain construction: blocks `table <m>` each
// followed by WTable lines, m = 1, 2, ... Missing blocks mean empty tables.
using UTable = std::map<int, WTable>;

void write_u_table(std::ostream& out, const UTable& u);
UTable read_u_table(std::istream& in);
UTable u_table_from_string(const std::string& text);

}  // namespace polishtop
