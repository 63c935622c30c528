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

#include <stdexcept>

#include "polishtop/rational.hpp"

namespace polishtop {

// Unknown point id or coordinate outside the materialized prefix.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A requested size exceeds what the source can materialize.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A numeric parameter outside its admissible range (eps <= 0, t outside
// [0,1], ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller-side precondition of an operation is violated.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A staged construction was asked to do something its current state does
// not allow.
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace polishtop
