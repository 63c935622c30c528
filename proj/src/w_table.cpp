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

#include "polishtop/w_table.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "polishtop/errors.hpp"

namespace polishtop {

void WTable::add(int column, int stage) {
  if (column < 0 || stage < 0) throw ParameterError("W table entries must be non-negative");
  if (horizon_ && stage >= *horizon_) {
    throw ParameterError("stage " + std::to_string(stage) + " not below horizon " +
                         std::to_string(*horizon_));
  }
  columns_[column].insert(stage);
}

const std::set<int>& WTable::column(int n) const {
  static const std::set<int> kEmpty;
  auto it = columns_.find(n);
  return it == columns_.end() ? kEmpty : it->second;
}

std::size_t WTable::count_below(int n, int i) const {
  const auto& col = column(n);
  return static_cast<std::size_t>(std::distance(col.begin(), col.lower_bound(i)));
}

void WTable::set_horizon(int horizon) {
  for (const auto& [n, col] : columns_) {
    if (!col.empty() && *col.rbegin() >= horizon) {
      throw ParameterError("existing stage not below horizon " + std::to_string(horizon));
    }
  }
  horizon_ = horizon;
}

std::optional<int> WTable::lowest_column_with(int stage) const {
  for (const auto& [n, col] : columns_) {
    if (col.count(stage) > 0) return n;
  }
  return std::nullopt;
}

void write_w_table(std::ostream& out, const WTable& w) {
  if (w.horizon()) out << "horizon " << *w.horizon() << '\n';
  for (const auto& [n, col] : w.columns()) {
    out << "col " << n << " :";
    for (int s : col) out << ' ' << s;
    out << '\n';
  }
}

std::string w_table_to_string(const WTable& w) {
  std::ostringstream out;
  write_w_table(out, w);
  return out.str();
}

namespace {

// Parses one WTable line into `w`. Returns false if the line is not a
// WTable line.
bool parse_w_line(const std::string& line, WTable& w, std::size_t line_no) {
  auto fail = [&](const std::string& why) {
    return ParseError("line " + std::to_string(line_no) + ": " + why);
  };
  std::istringstream fields(line);
  std::string keyword;
  if (!(fields >> keyword)) return true;
  if (keyword.front() == '#') return true;
  if (keyword == "horizon") {
    int h = 0;
    std::string rest;
    if (!(fields >> h) || (fields >> rest) || h < 0) throw fail("expected 'horizon <s>'");
    try {
      w.set_horizon(h);
    } catch (const ParameterError& e) {
      throw fail(e.what());
    }
    return true;
  }
  if (keyword != "col") return false;
  int n = 0;
  std::string colon;
  if (!(fields >> n >> colon) || colon != ":") throw fail("expected 'col <n> : <stages>'");
  std::string token;
  while (fields >> token) {
    int s = 0;
    try {
      std::size_t used = 0;
      s = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw fail("malformed stage '" + token + "'");
    }
    try {
      w.add(n, s);
    } catch (const ParameterError& e) {
      throw fail(e.what());
    }
  }
  if (n < 0) throw fail("negative column index");
  return true;
}

}  // namespace

WTable read_w_table(std::istream& in) {
  WTable w;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!parse_w_line(line, w, line_no)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'col' or 'horizon'");
    }
  }
  return w;
}

WTable w_table_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_w_table(in);
}

void write_u_table(std::ostream& out, const UTable& u) {
  for (const auto& [m, w] : u) {
    out << "table " << m << '\n';
    write_w_table(out, w);
  }
}

UTable read_u_table(std::istream& in) {
  UTable u;
  WTable* current = nullptr;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string keyword;
    if (fields >> keyword && keyword == "table") {
      int m = 0;
      std::string rest;
      if (!(fields >> m) || (fields >> rest) || m < 1) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'table <m>' with m >= 1");
      }
      if (u.count(m) > 0) {
        throw ParseError("line " + std::to_string(line_no) + ": duplicate table " +
                         std::to_string(m));
      }
      current = &u[m];
      continue;
    }
    if (current == nullptr) {
      if (keyword.empty() || keyword.front() == '#') continue;
      throw ParseError("line " + std::to_string(line_no) + ": expected 'table <m>'");
    }
    if (!parse_w_line(line, *current, line_no)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'col', 'horizon' or 'table'");
    }
  }
  return u;
}

UTable u_table_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_u_table(in);
}

}  // namespace polishtop
