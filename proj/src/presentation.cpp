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

#include "polishtop/presentation.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "polishtop/errors.hpp"

namespace polishtop {

PointId Presentation::add(SparsePoint point) {
  if (!seen_.insert(point).second) {
    throw PreconditionError("point already enumerated in presentation '" + label_ + "'");
  }
  points_.push_back(std::move(point));
  return points_.size() - 1;
}

bool Presentation::add_if_new(SparsePoint point) {
  if (!seen_.insert(point).second) return false;
  points_.push_back(std::move(point));
  return true;
}

const SparsePoint& Presentation::point(PointId id) const {
  if (id >= points_.size()) {
    throw LookupError("point id " + std::to_string(id) + " not materialized (size " +
                      std::to_string(points_.size()) + ")");
  }
  return points_[id];
}

Presentation Presentation::permuted(std::span<const std::size_t> order) const {
  Presentation out(label_);
  for (std::size_t i : order) out.add(point(i));
  return out;
}

Rational metric_approx(const Presentation& pres, PointId i, PointId j, int /*k*/) {
  return sup_distance(pres.point(i), pres.point(j));
}

bool verify_fast_cauchy(std::span<const Rational> sequence) {
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
    if (abs(sequence[i + 1] - sequence[i]) >= pow2(-static_cast<int>(i))) return false;
  }
  return true;
}

void write_presentation(std::ostream& out, const Presentation& pres) {
  out << "ambient sup-metric\n";
  for (PointId id = 0; id < pres.size(); ++id) {
    out << "point " << id << " :";
    for (const auto& [index, value] : pres.point(id).entries()) {
      out << ' ' << index << ':' << format_rational(value);
    }
    out << '\n';
  }
}

std::string presentation_to_string(const Presentation& pres) {
  std::ostringstream out;
  write_presentation(out, pres);
  return out.str();
}

Presentation read_presentation(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("line " + std::to_string(line_no) + ": " + why);
  };
  ++line_no;
  if (!std::getline(in, line) || line != "ambient sup-metric") {
    throw fail("expected header 'ambient sup-metric'");
  }
  Presentation pres;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string keyword;
    std::size_t id = 0;
    std::string colon;
    if (!(fields >> keyword >> id >> colon) || keyword != "point" || colon != ":") {
      throw fail("expected 'point <id> :'");
    }
    if (id != pres.size()) throw fail("point ids must be consecutive from 0");
    SparsePoint p;
    std::string token;
    long long previous_index = -1;
    while (fields >> token) {
      const auto sep = token.find(':');
      if (sep == std::string::npos || sep == 0) throw fail("malformed coordinate '" + token + "'");
      long long index = 0;
      try {
        std::size_t used = 0;
        index = std::stoll(token.substr(0, sep), &used);
        if (used != sep || index < 0) throw std::invalid_argument("index");
      } catch (const std::exception&) {
        throw fail("malformed coordinate index in '" + token + "'");
      }
      if (index <= previous_index) throw fail("coordinate indices must be increasing");
      previous_index = index;
      Rational value;
      try {
        value = parse_rational(token.substr(sep + 1));
      } catch (const ParseError& e) {
        throw fail(e.what());
      }
      if (value == 0) throw fail("zero coordinates must be omitted");
      p.set(static_cast<CoordIndex>(index), value);
    }
    if (!pres.add_if_new(std::move(p))) throw fail("duplicate point");
  }
  return pres;
}

Presentation presentation_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_presentation(in);
}

}  // namespace polishtop
