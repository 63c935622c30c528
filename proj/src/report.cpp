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

#include "polishtop/report.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace polishtop {
namespace {

void write_grid(std::ostream& out, const char* name, const std::vector<Rational>& grid) {
  out << name;
  for (const auto& q : grid) out << ' ' << format_rational(q);
  out << '\n';
}

}  // namespace

void render_report(std::ostream& out, const CompositeReport& report) {
  out << "report " << (report.label.empty() ? "-" : report.label) << '\n';
  for (const Verdict& v : report.verdicts) {
    out << "verdict " << v.property << ' ' << status_name(v.status) << '\n';
    out << "n_points " << v.resolution.n_points << '\n';
    out << "max_path_len " << v.resolution.max_path_len << '\n';
    out << "tuple_budget " << v.resolution.tuple_budget << '\n';
    write_grid(out, "eps", v.resolution.eps_grid);
    write_grid(out, "delta", v.resolution.delta_grid);
    if (!v.note.empty()) out << "note " << v.note << '\n';
    for (const auto& it : v.evidence) {
      out << "item " << it.kind << " points";
      for (auto p : it.points) out << ' ' << p;
      out << " params";
      for (const auto& q : it.params) out << ' ' << format_rational(q);
      out << '\n';
    }
    out << "end\n";
  }
}

std::string render_report(const CompositeReport& report) {
  std::ostringstream out;
  render_report(out, report);
  return out.str();
}

CompositeReport parse_report(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    return ParseError("line " + std::to_string(line_no) + ": " + why);
  };
  CompositeReport report;
  ++line_no;
  if (!std::getline(in, line) || line.rfind("report ", 0) != 0) {
    throw fail("expected 'report <label>'");
  }
  report.label = line.substr(7);
  if (report.label == "-") report.label.clear();
  Verdict* current = nullptr;
  auto read_count = [&](std::istringstream& fields) {
    std::size_t value = 0;
    std::string rest;
    if (!(fields >> value) || (fields >> rest)) throw fail("expected a count");
    return value;
  };
  auto read_rationals = [&](std::istringstream& fields) {
    std::vector<Rational> out;
    std::string token;
    while (fields >> token) {
      try {
        out.push_back(parse_rational(token));
      } catch (const ParseError& e) {
        throw fail(e.what());
      }
    }
    return out;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string keyword;
    fields >> keyword;
    if (keyword == "verdict") {
      if (current != nullptr) throw fail("previous verdict block not closed");
      std::string property;
      std::string status;
      if (!(fields >> property >> status)) throw fail("expected 'verdict <property> <status>'");
      report.verdicts.push_back(Verdict{});
      current = &report.verdicts.back();
      current->property = property;
      try {
        current->status = parse_status(status);
      } catch (const ParseError& e) {
        throw fail(e.what());
      }
      continue;
    }
    if (current == nullptr) throw fail("'" + keyword + "' outside a verdict block");
    if (keyword == "n_points") {
      current->resolution.n_points = read_count(fields);
    } else if (keyword == "max_path_len") {
      current->resolution.max_path_len = read_count(fields);
    } else if (keyword == "tuple_budget") {
      current->resolution.tuple_budget = read_count(fields);
    } else if (keyword == "eps") {
      current->resolution.eps_grid = read_rationals(fields);
    } else if (keyword == "delta") {
      current->resolution.delta_grid = read_rationals(fields);
    } else if (keyword == "note") {
      current->note = line.size() > 5 ? line.substr(5) : "";
    } else if (keyword == "item") {
      EvidenceItem it;
      std::string marker;
      if (!(fields >> it.kind >> marker) || marker != "points") {
        throw fail("expected 'item <kind> points ...'");
      }
      std::string token;
      bool in_params = false;
      while (fields >> token) {
        if (!in_params && token == "params") {
          in_params = true;
          continue;
        }
        try {
          if (in_params) {
            it.params.push_back(parse_rational(token));
          } else {
            std::size_t used = 0;
            const unsigned long long p = std::stoull(token, &used);
            if (used != token.size() || token.front() == '-') throw std::invalid_argument(token);
            it.points.push_back(static_cast<std::size_t>(p));
          }
        } catch (const ParseError& e) {
          throw fail(e.what());
        } catch (const std::exception&) {
          throw fail("malformed point '" + token + "'");
        }
      }
      if (!in_params) throw fail("item without 'params'");
      current->evidence.push_back(std::move(it));
    } else if (keyword == "end") {
      current = nullptr;
    } else {
      throw fail("unknown keyword '" + keyword + "'");
    }
  }
  if (current != nullptr) throw fail("unterminated verdict block");
  return report;
}

CompositeReport parse_report(const std::string& text) {
  std::istringstream in(text);
  return parse_report(in);
}

}  // namespace polishtop
